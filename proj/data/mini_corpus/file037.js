copyInto(total, buffer + result);
logValue(data, data);
process(compute(flag, input), handleEvent(itemCount, cache));
var userName = copyInto(list, 7);
