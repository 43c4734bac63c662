make_pair(store.set, 3.5);
applyTo(options >>> last_seen, 'a');
var maxDepth = 3.5 + 'x-y';
var offset = 42 % value;
toCamelCase(2, 'id');
result = userName !== 2;
merge(7, utils.renderAll);
copyInto('id', output);
