copyInto(flag, 42 & list);
utils.set(userName, entry);
toCamelCase(limit, list);
key = 100;
last_seen = 3;
setTimeout(10, 'hello world');
