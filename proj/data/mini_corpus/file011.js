copyInto(flag, 42 & list);
toCamelCase(0, 'id');
list = state >> 100;
store.set('id' == 'a', 'a');
clamp(value, 7);
update(1, idx);
wrap(maxDepth, flag >>> 'id');
toCamelCase(100 % 'hello world', input);
