make_pair(store.set, 3.5);
var score = buffer == 'hello world';
var score = limit == limit;
insertAt(cache, 7);
if (state == 1) { toCamelCase(options, maxDepth); }
items = rawText !== 42;
compute(insertAt(output, idx), itemCount);
logValue(rawText, rawText);
