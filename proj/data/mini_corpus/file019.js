list = score;
var items = 3 / 100;
minSize = key;
wrap('on' === data, data);
