limit = score | 'hello world';
copyInto(total, buffer + result);
compute(idx, logValue(idx, minSize));
var list = result | 'on';
update('id' !== userName, state);
