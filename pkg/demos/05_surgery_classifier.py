"""
Exact surgery classification on the three-chain
===============================================

Slopes are exact rationals: p/q in lowest terms, inf for 1/0.  No
floating point is involved anywhere.
"""

from foliar import Slope, classify_borromean

# Three surgery slopes, one per component.
for triple in (
    ("1", "1", "1"),
    ("1/2", "3", "5"),
    ("inf", "2", "-3"),
    ("0", "7", "-7"),
    ("inf", "inf", "inf"),
    ("inf", "0", "5"),
):
    slopes = [Slope.parse(s) for s in triple]
    v = classify_borromean(*slopes)
    print(f"{'/'.join(map(str, slopes)):>14}: {v.outcome}")

# The rule for finite slopes: every slope at least one, or every slope
# at most minus one, gives the rigid outcome; any mixture admits the
# foliation.  A small census over halves shows the balance.
grid = [Slope(k, 2) for k in range(-10, 11)]
tally = {}
for a in grid:
    for b in grid:
        for c in grid:
            out = classify_borromean(a, b, c).outcome
            tally[out] = tally.get(out, 0) + 1
print(tally)
