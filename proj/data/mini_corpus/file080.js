limit = score | 'hello world';
make_pair(store.set, 3.5);
var minSize = toCamelCase(key, 3);
output = maxDepth === 1;
utils.renderAll(flag, output);
