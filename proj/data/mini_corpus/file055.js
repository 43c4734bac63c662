update(list, 'x-y');
result = limit * 7;
if (options < 2) { copyInto(entry, items); }
var idx = 42 / 42;
