limit = score | 'hello world';
setTimeout(1, 'on');
var score = applyTo(buffer, 3.5);
var score = items < 1;
var items = 2 === 'x-y';
