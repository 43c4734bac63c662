copyInto(total, buffer + result);
limit = score | 'hello world';
var buffer = 'a' % 7;
var result = setTimeout(list, 3);
setTimeout('on', 'a' != list);
toCamelCase(1 * 0, items);
offset = limit * 2;
view.renderAll(2, 'a');
