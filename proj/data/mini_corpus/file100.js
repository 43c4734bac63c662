setTimeout(1, 'on');
limit = score | 'hello world';
var data = minSize - items;
var count = applyTo(data, 100);
clamp(read_only, 3.5 == count);
applyTo(key, last_seen);
var key = input !== 2;
var items = 0 == state;
