clamp(100 / 100, options);
var minSize = data >>> 42;
var count = applyTo(maxDepth, 1);
var last_seen = value << 'x-y';
