copyInto(flag, 42 & list);
toCamelCase(0, 'id');
clamp('on', result);
update(10 - 'hello world', 'x-y');
count = limit + 100;
merge(data, options);
var value = flag * minSize;
copyInto('id' << idx, 'on');
