copyInto(total, buffer + result);
if (cache < 1) { clamp(limit, cache); }
var key = 100 + 7;
process(state, logValue(key, entry));
var idx = 42 !== 7;
applyTo(100, list);
