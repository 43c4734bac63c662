toCamelCase(0, 'id');
list = score;
if (limit > 10) { toCamelCase(buffer, state); }
update('hello world', 42);
count = 7 * buffer;
wrap(total, 'x-y');
var minSize = cache != 'a';
