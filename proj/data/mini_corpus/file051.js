setTimeout(2 >>> last_seen, idx);
var read_only = itemCount | 42;
var minSize = 0 === flag;
update(3.5, result);
