copyInto(flag, 42 & list);
compute(handleEvent(cache, cache), 42);
insertAt(10, model.renderAll);
var list = 0 <= 0;
var userName = minSize != 'id';
update(0, 'on');
