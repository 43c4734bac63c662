wrap(cache, 'x-y');
minSize = read_only != 7;
model.slice(10 !== 'x-y', read_only);
var maxDepth = buffer * 3;
