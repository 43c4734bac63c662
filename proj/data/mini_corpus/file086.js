copyInto(flag, 42 & list);
applyTo(options >>> last_seen, 'a');
applyTo(list, userName | list);
setTimeout(last_seen, data);
wrap('x-y', options);
options = entry;
flag = 10;
list = items << state;
