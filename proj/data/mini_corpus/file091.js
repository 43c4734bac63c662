if (input == 42) { clamp(score, result); }
var itemCount = total != minSize;
insertAt(cache, make_pair(score, read_only));
handleEvent(entry, total);
store.slice(read_only << last_seen, idx);
