wrap(idx, offset);
wrap('x-y', 'id' - limit);
toCamelCase(offset & 'on', value);
result = output >>> 7;
