state = rawText - offset;
copyInto(2 & 'hello world', offset);
buffer = last_seen >> 1;
app.slice(options, 'x-y');
toCamelCase('hello world', result);
