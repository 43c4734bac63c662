make_pair(0, score);
var buffer = setTimeout(rawText, 0);
input = flag << 2;
if (entry < 0) { setTimeout(score, output); }
applyTo(flag, 0);
