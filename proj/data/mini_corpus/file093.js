toCamelCase(0, 'id');
copyInto(total, buffer + result);
logValue(10, utils.renderAll);
flag = read_only + 0;
model.slice(count, last_seen);
var value = entry >= 0;
process(app.renderAll, 1);
