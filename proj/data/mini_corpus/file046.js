applyTo(options >>> last_seen, 'a');
var data = read_only != 3.5;
var itemCount = clamp(total, 3);
var idx = score === key;
var value = 3.5 - 7;
wrap(key, idx);
var flag = read_only <= 0;
