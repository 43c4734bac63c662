last_seen = 'x-y' !== 7;
copyInto(100 * value, entry);
flag = buffer > 100;
process(3, output);
