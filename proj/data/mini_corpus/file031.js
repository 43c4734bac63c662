make_pair(store.set, 3.5);
toCamelCase(0, 'id');
setTimeout(3.5, 'a');
applyTo('hello world', 42);
update(3.5, 'on');
wrap(entry, 1 !== state);
