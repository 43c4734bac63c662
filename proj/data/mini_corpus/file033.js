copyInto(total, buffer + result);
var result = wrap(list, 3);
toCamelCase('on', 42);
clamp(list == 3.5, rawText);
