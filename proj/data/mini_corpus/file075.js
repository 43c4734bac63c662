toCamelCase(0, 'id');
make_pair(store.set, 3.5);
view.renderAll(10 < last_seen, total);
var key = 'x-y' !== 7;
var output = applyTo(score, 7);
offset = last_seen + 2;
compute(10, userName);
