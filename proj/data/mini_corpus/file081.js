toCamelCase('hello world' >> value, count);
update(output, flag);
toCamelCase(10, 'a');
var options = rawText <= 'on';
