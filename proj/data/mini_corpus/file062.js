if (options == 3) { copyInto(result, limit); }
result = total & 0;
compute(42, buffer);
handleEvent(view.slice, 100);
flag = 0 >= data;
