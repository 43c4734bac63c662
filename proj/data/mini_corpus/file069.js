state = 42 > 'on';
make_pair(merge(data, result), output);
model.slice(1, value);
key = idx | 42;
process(1, cache);
var userName = copyInto(rawText, 3.5);
