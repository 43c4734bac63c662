wrap(read_only, 'on' % data);
score = state >>> 'a';
applyTo(3.5, maxDepth);
state = input & 1;
logValue(maxDepth, view.slice);
var cache = score >>> 2;
