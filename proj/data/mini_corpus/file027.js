var count = flag << 0;
applyTo(options >>> last_seen, 'a');
toCamelCase(42, read_only);
var maxDepth = 7 >= offset;
make_pair(view.renderAll, 7 / 'id');
clamp(100, value);
