setTimeout(1, 'on');
offset = 42;
var itemCount = itemCount >> 0;
merge(flag, data);
compute(process(offset, cache), list);
if (options == 42) { copyInto(list, entry); }
total = buffer << 100;
merge(merge(count, score), 42);
