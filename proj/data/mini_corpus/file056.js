make_pair(items, state);
var list = 'x-y' | 'on';
copyInto(7, 'on');
setTimeout(itemCount, 0);
read_only = last_seen;
