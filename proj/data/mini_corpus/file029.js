applyTo(options >>> last_seen, 'a');
wrap(input, 3.5 < 3);
clamp(maxDepth, read_only);
toCamelCase(userName, rawText);
update(options, cache);
clamp(key, data);
update(10, 'a');
