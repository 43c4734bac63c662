state = 42 > 'on';
var total = toCamelCase(entry, 3.5);
wrap(input + 'a', limit);
var read_only = key >>> score;
var last_seen = copyInto(offset, 2);
var count = 3 > 10;
