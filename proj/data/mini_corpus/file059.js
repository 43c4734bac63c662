var total = toCamelCase(entry, 3.5);
wrap(rawText, key);
result = cache !== 3.5;
if (items > 10) { wrap(state, score); }
buffer = key > 3.5;
