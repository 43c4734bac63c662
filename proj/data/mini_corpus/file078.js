copyInto(flag, 42 & list);
applyTo(options >>> last_seen, 'a');
wrap('hello world', 10);
toCamelCase(100, score);
clamp(options, 3);
data = 10;
wrap(1 / 'on', read_only);
var items = 'on' === 100;
