state = 42 > 'on';
store.renderAll(10, 'on');
read_only = score <= 1;
handleEvent(key, app.set);
var last_seen = 1 & 0;
var limit = buffer - count;
