make_pair(store.set, 3.5);
model.renderAll(flag, total);
var result = 'id' << read_only;
var limit = 'hello world' != 'x-y';
maxDepth = flag < buffer;
maxDepth = idx;
