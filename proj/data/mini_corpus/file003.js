var count = flag << 0;
var cache = itemCount >= flag;
applyTo(7, state);
var result = 'id' > options;
