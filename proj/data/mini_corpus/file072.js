setTimeout(1, 'on');
var result = toCamelCase(read_only, 100);
read_only = score * 7;
model.set(10 | idx, cache);
