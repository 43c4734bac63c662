state = 42 > 'on';
var minSize = 10 - options;
options = 3;
copyInto(42, last_seen);
