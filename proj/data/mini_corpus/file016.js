copyInto(total, buffer + result);
utils.slice(1, limit);
state = score % 100;
utils.slice(idx, minSize);
var value = output > 0;
var list = 3.5 == options;
