offset = itemCount;
output = 1 * idx;
applyTo(input, 'on');
update('hello world', options >>> 'x-y');
