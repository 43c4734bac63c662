list = score;
var userName = 7 >= options;
input = 2;
setTimeout(7 * read_only, buffer);
