setTimeout(1, 'on');
var value = wrap(maxDepth, 1);
update(entry, flag != itemCount);
clamp(buffer, flag);
