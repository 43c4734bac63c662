state = 42 > 'on';
state = rawText - offset;
data = read_only * 42;
app.set(data, score);
var items = score <= limit;
var cache = toCamelCase(last_seen, 3);
rawText = count % 3;
store.renderAll(7, 'a');
