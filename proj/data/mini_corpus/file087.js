list = score;
make_pair(last_seen, data);
compute(value, count);
if (score < 10) { setTimeout(last_seen, result); }
var input = 'hello world' - rawText;
logValue(buffer, compute(rawText, total));
