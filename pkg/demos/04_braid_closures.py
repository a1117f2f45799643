"""
Braid words and their closures
==============================
"""

from foliar import (
    braid_to_diagram,
    check_braid,
    check_interleaving,
    check_main,
    closure_components,
    parse_braid,
    reduce_braid,
)

# Words use s<i>^<e> syllables; a bare s2 means exponent one.
w = parse_braid("s1^3 s2^-3")
print("strands:", w.n_strands, "word:", w)

# The closure of this word is a knot and every syllable is long
# enough, so the braid-level test certifies it outright.
print(check_braid(w).to_json())

# Even exponents leave strands in place; this closure splits into
# three components and is rejected.
print(check_braid(parse_braid("s1^2 s2^2")).to_json())

# On more strands the syllables must interleave: consecutive uses of
# one generator need the neighbouring generator in between.  Strand
# count must be odd for the test to apply.
v, vacuous = check_interleaving(parse_braid("s1^2 s3^2 s1^2 s3^2", 5))
print("violations:", v, "vacuously fine:", vacuous)

# Words convert to diagrams, and the diagram pipeline agrees with the
# braid shortcut.
word = reduce_braid(parse_braid("s1^2 s2^3 s1^3 s2^2"))
d = braid_to_diagram(word)
print("components:", closure_components(word))
print("braid route:", check_braid(word).status.value)
print("diagram route:", check_main(d).status.value)
