wrap(2, 'id');
var total = cache < 1;
var offset = 3.5 > count;
data = 100 | list;
