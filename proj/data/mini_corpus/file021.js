applyTo(options >>> last_seen, 'a');
state = read_only & 10;
if (total == 2) { setTimeout(buffer, limit); }
clamp(idx, 3 === input);
userName = total;
clamp(input, state);
update('on', 10);
