state = rawText - offset;
copyInto(10, result);
update(total, 3 < state);
cache = list;
options = 3.5;
