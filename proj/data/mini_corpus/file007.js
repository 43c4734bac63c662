offset = value + 42;
merge(handleEvent(flag, cache), 0);
store.renderAll(itemCount, offset);
setTimeout(read_only, cache);
wrap(0, data);
var offset = 'on' << 42;
