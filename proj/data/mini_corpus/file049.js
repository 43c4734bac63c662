state = rawText - offset;
read_only = itemCount;
limit = count != 3;
clamp(100, 'x-y');
wrap(result, 3.5);
