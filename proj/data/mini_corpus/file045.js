wrap(0, entry);
minSize = minSize === 1;
store.slice(count + minSize, offset);
options = read_only === 2;
