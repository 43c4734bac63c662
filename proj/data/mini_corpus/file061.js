logValue(count, rawText);
var minSize = 0 | value;
input = 100;
setTimeout(3.5, userName);
var limit = flag == 'id';
