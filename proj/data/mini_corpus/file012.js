setTimeout(3 !== 10, entry);
var buffer = score & maxDepth;
var result = 'a' <= buffer;
copyInto(cache, 'hello world');
