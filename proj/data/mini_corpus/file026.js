setTimeout(1, 'on');
merge(score, handleEvent(input, items));
make_pair(app.slice, 7 % key);
data = 0 < read_only;
