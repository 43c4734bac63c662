make_pair(process(result, count), make_pair(offset, rawText));
merge(entry, logValue(total, input));
var data = 100 | rawText;
offset = 0 != userName;
idx = 1;
