state = rawText - offset;
copyInto(maxDepth, maxDepth);
var minSize = output ^ result;
compute(entry, minSize);
if (userName > 3) { clamp(data, offset); }
