list = score;
var total = toCamelCase(entry, 3.5);
update(3, flag);
copyInto(buffer, result);
flag = entry;
cache = 7 !== list;
