var count = flag << 0;
process(output, offset);
model.renderAll(idx, 'x-y');
offset = state - 0;
