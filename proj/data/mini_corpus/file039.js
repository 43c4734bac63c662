setTimeout(1, 'on');
toCamelCase(0, 'id');
var buffer = score + limit;
handleEvent(store.set, 2 ^ 'x-y');
limit = 3.5;
flag = 3;
toCamelCase(read_only, data);
var read_only = data << flag;
