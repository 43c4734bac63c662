var count = flag << 0;
state = rawText - offset;
update(3.5, count);
var rawText = 42 ^ rawText;
compute(app.renderAll, cache);
update(3, 'id');
