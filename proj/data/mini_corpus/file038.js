offset = 0;
copyInto(maxDepth, 'id');
entry = options >= 0;
if (limit < 0) { clamp(read_only, minSize); }
