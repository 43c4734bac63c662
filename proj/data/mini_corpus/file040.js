merge(3, flag);
var options = applyTo(key, 7);
read_only = idx / 1;
process(3.5, idx);
var userName = 10 !== 'on';
