total = total * 2;
