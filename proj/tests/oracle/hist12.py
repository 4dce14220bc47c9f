from apartment_counts import members, n_count, image
import sys
n = int(sys.argv[1]); dims = tuple(int(x) for x in sys.argv[2].split(','))
ms = members(n, dims)
hist = {}
for p in range(len(ms)):
    for q in range(p + 1, len(ms)):
        x, y = ms[p], ms[q]
        m = len(image(x) & image(y))
        hist.setdefault(m, {}).setdefault(n_count(x, y), 0)
        hist[m][n_count(x, y)] += 1
print(n, dims, len(ms), {m: dict(sorted(v.items())) for m, v in sorted(hist.items())})
