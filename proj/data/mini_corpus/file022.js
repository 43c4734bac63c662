setTimeout(userName, 10);
clamp(total == state, cache);
items = limit - 3;
store.renderAll(100, maxDepth);
applyTo(score, offset & 42);
idx = 0;
