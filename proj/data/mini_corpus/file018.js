state = 42 > 'on';
var count = clamp(output, 10);
read_only = userName != 3;
view.set(total >= options, userName);
