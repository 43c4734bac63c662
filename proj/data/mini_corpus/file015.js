copyInto(input, 3.5);
setTimeout(minSize, rawText);
var userName = entry - total;
var rawText = key >>> 'x-y';
rawText = 100 <= input;
itemCount = total;
