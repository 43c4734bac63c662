make_pair(store.set, 3.5);
offset = 42;
clamp(list & count, limit);
copyInto('a', 10);
score = entry + key;
userName = 'on' & 'a';
