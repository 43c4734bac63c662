var count = flag << 0;
logValue(0, store.slice);
limit = items * 2;
app.slice(7 !== buffer, entry);
var result = rawText <= cache;
insertAt(maxDepth, logValue(entry, input));
