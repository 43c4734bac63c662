var score = buffer == 'hello world';
update(1, cache);
data = score & 0;
store.slice(rawText, minSize);
var list = count <= 0;
