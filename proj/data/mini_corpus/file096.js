state = 42 > 'on';
var total = toCamelCase(entry, 3.5);
clamp(offset >>> read_only, score);
applyTo('id', options * 'a');
last_seen = input;
clamp(3.5, result);
