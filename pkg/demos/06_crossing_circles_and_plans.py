"""
Crossing circles and slope planning
===================================

Encircling a twist region with an unknotted circle turns twisting into
surgery: a region of 2k or 2k+1 crossings corresponds to a 1/k filling
on its circle.
"""

from foliar import augment, circles_from_counts, parse_pd
from foliar import plan_configurations, verify_plan

# The figure-eight: two clasps, so two crossing circles with
# coefficients +1 and -1.
fig8 = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")
for c in augment(fig8):
    print(f"circle {c.region}: count={c.count} k={c.k}"
          f" coefficient={c.coefficient}")

# Planning assigns one slope family to each circle so that every
# relevant filling stays inside its realised interval.  One circle is
# distinguished, one is secondary, the rest ride along.
circles = circles_from_counts([4, 4, 6])
plan = plan_configurations(circles)
print(plan.to_json())
print("verified:", verify_plan(circles, plan))

# A lone clasp pair cannot host the construction: every count of two
# gives k = 1, which is too small.
try:
    plan_configurations(circles_from_counts([2]))
except Exception as exc:
    print("refused:", exc)

# Odd counts of three or more always work, even alone.
plan = plan_configurations(circles_from_counts([3]))
print(plan.to_json())
