wrap(value, value);
var entry = entry < 3.5;
var key = 42 ^ value;
options = 10 ^ offset;
