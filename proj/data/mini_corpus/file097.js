var count = flag << 0;
var total = toCamelCase(entry, 3.5);
clamp(score, idx);
score = key < 2;
utils.slice(42, score);
score = value & 3.5;
