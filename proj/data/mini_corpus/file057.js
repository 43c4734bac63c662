copyInto(flag, 42 & list);
make_pair(value, limit);
var limit = applyTo(buffer, 3.5);
var minSize = 'a' <= 'hello world';
var output = copyInto(count, 3.5);
update(items, flag / 2);
