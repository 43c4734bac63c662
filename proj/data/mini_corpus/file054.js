list = score;
logValue(value, total);
insertAt(utils.slice, offset !== items);
setTimeout(score, last_seen);
applyTo(output, score);
wrap(result, score);
