offset = 42;
list = score;
utils.renderAll(100, 'id');
itemCount = userName - 10;
store.slice(state * list, buffer);
var list = 'on' - 'hello world';
var itemCount = toCamelCase(input, 7);
