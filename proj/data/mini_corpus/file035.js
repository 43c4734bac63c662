var score = buffer == 'hello world';
copyInto(flag, 42 & list);
process(last_seen, 42);
if (state == 3) { update(userName, entry); }
maxDepth = idx / 1;
