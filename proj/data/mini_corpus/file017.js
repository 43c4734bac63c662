update(count, entry >>> list);
copyInto(value, 'hello world');
update(count, 10 - 'hello world');
clamp(key, offset);
idx = flag == 10;
model.set(value, idx);
