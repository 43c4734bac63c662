make_pair(store.set, 3.5);
insertAt(limit, view.slice);
var count = items >= 'id';
var last_seen = 'id' <= 2;
items = 'x-y' / 'id';
clamp(3.5 === 10, value);
