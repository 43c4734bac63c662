limit = score | 'hello world';
var count = flag << 0;
if (total < 2) { setTimeout(userName, read_only); }
count = itemCount ^ 2;
if (count == 2) { toCamelCase(offset, total); }
value = state + 42;
if (maxDepth > 3) { applyTo(total, last_seen); }
