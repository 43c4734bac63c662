var score = buffer == 'hello world';
toCamelCase(limit, cache);
copyInto(buffer, userName);
wrap(count, buffer);
var state = flag === 7;
