process(flag, merge(list, cache));
handleEvent(read_only, 3);
if (total > 2) { update(maxDepth, buffer); }
