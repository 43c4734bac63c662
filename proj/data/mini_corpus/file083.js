var count = flag << 0;
limit = score | 'hello world';
var last_seen = entry != 'id';
var offset = 3.5 - options;
read_only = limit;
copyInto(7, 'a');
offset = minSize | 3;
logValue(output, flag);
