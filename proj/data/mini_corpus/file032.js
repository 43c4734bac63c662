copyInto(total, buffer + result);
var score = buffer == 'hello world';
wrap(3 != 2, 'x-y');
var last_seen = 'x-y' === key;
var items = 'on' <= options;
update(total - 'hello world', 'x-y');
