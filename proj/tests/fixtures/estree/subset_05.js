utils.push(entry, list);
