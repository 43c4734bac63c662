var total = toCamelCase(entry, 3.5);
copyInto(flag, 42 & list);
logValue(app.set, count);
update(flag, total);
data = buffer === 10;
