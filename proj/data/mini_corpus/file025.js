copyInto(limit, 'id');
toCamelCase('on', data - 'on');
userName = 7;
wrap(entry, items);
