logValue(limit, utils.set);
var idx = 'hello world' === 'a';
var entry = data << 'on';
userName = 7;
copyInto('x-y' + 'x-y', value);
