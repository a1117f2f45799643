"""Braid words, their closures, and the odd-strand interleaving test.

A word is a sequence of syllables s_i^a.  In the closure each syllable
becomes a vertical twist chain; syllables of one generator that follow
each other cyclically with nothing in between fuse into one chain, so
the syllable picture matches the twist regions exactly when every
return to a generator crosses the bridging generator first: after
sigma_h for odd h comes sigma_{h+1} before sigma_h again, and for even
h the bridge is sigma_{h-1}.  The test only applies to braids on an
odd number of strands.
"""

from dataclasses import dataclass

from ._planar import DisjointSets
from .diagram import relabel
from .errors import (
    BadGenerator,
    EmptyWord,
    EvenStrandCount,
    MalformedToken,
    NonSphericalEmbedding,
)


@dataclass(frozen=True)
class Syllable:
    gen: int
    exp: int


@dataclass(frozen=True)
class BraidWord:
    n_strands: int
    syllables: tuple

    def __str__(self):
        return " ".join(f"s{s.gen}^{s.exp}" for s in self.syllables)


def parse_braid(text, n_strands=None):
    import re

    sylls = []
    top = 0
    for tok in text.split():
        m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", tok)
        if not m:
            raise MalformedToken(f"bad syllable {tok!r}")
        gen = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) else 1
        if gen < 1:
            raise BadGenerator(f"generator index {gen}")
        if n_strands is not None and gen > n_strands - 1:
            raise BadGenerator(
                f"s{gen} needs {gen + 1} strands, braid has {n_strands}"
            )
        top = max(top, gen)
        if exp == 0:
            continue
        sylls.append(Syllable(gen, exp))
    if not sylls:
        raise EmptyWord("no syllables with nonzero exponent")
    return BraidWord(n_strands if n_strands else top + 1, tuple(sylls))


def reduce_braid(word):
    """Merge equal-generator neighbours, including around the cycle."""
    sylls = list(word.syllables)
    changed = True
    while changed:
        changed = False
        out = []
        for s in sylls:
            if out and out[-1].gen == s.gen:
                merged = out[-1].exp + s.exp
                out.pop()
                if merged:
                    out.append(Syllable(s.gen, merged))
                changed = True
            else:
                out.append(s)
        while len(out) >= 2 and out[0].gen == out[-1].gen:
            merged = out[-1].exp + out[0].exp
            out = out[1:-1] + (
                [Syllable(out[0].gen, merged)] if merged else []
            )
            changed = True
        sylls = out
    if not sylls:
        raise EmptyWord("word reduced to the identity braid")
    return BraidWord(word.n_strands, tuple(sylls))


def closure_components(word):
    perm = list(range(word.n_strands))
    for s in word.syllables:
        if s.exp % 2:
            i = s.gen - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = set()
    comps = 0
    for i in range(word.n_strands):
        if i in seen:
            continue
        comps += 1
        j = i
        while j not in seen:
            seen.add(j)
            j = perm[j]
    return comps


def check_interleaving(word):
    """Violations of the return-bridge rule, plus generators never used.

    Returns (violations, vacuous): violations lists generators h whose
    cyclically consecutive uses miss the bridge generator in between;
    vacuous lists generators of the braid group that never occur.
    Raises EvenStrandCount unless the strand count is odd.
    """
    if word.n_strands % 2 == 0:
        raise EvenStrandCount(f"{word.n_strands} strands")
    gens = [s.gen for s in word.syllables]
    present = set(gens)
    vacuous = [
        h for h in range(1, word.n_strands) if h not in present
    ]
    violations = []
    m = len(gens)
    for h in sorted(present):
        bridge = h + 1 if h % 2 else h - 1
        spots = [i for i, g in enumerate(gens) if g == h]
        ok = True
        for a, b in zip(spots, spots[1:] + [spots[0] + m]):
            between = [gens[i % m] for i in range(a + 1, b)]
            if bridge not in between:
                ok = False
                break
        if not ok:
            violations.append(h)
    return violations, vacuous


# -- closure diagram --------------------------------------------------------

def braid_to_diagram(word):
    """Diagram of the braid closure.

    Positive exponents give twist chains of positive handedness.  If a
    strand meets no crossing its closure is a crossing-free circle the
    PD model cannot carry, so that case raises.
    """
    ds = DisjointSets()
    fresh = iter(range(10 ** 9)).__next__
    top = [fresh() for _ in range(word.n_strands)]
    cur = list(top)
    touched = [False] * word.n_strands
    crossings = []
    for s in word.syllables:
        i = s.gen - 1
        if s.gen > word.n_strands - 1:
            raise BadGenerator(f"s{s.gen} in a {word.n_strands}-strand braid")
        for _ in range(abs(s.exp)):
            nw, ne = cur[i], cur[i + 1]
            sw, se = fresh(), fresh()
            if s.exp > 0:
                # over NW-SE: slots counterclockwise from NE
                crossings.append((ne, nw, sw, se))
            else:
                crossings.append((nw, sw, se, ne))
            cur[i], cur[i + 1] = sw, se
            touched[i] = touched[i + 1] = True
    if not all(touched):
        idle = [i + 1 for i, t in enumerate(touched) if not t]
        raise NonSphericalEmbedding(
            f"closure of strands {idle} has no crossings"
        )
    for t, b in zip(top, cur):
        ds.union(t, b)
    lists = [tuple(ds.find(w) for w in c) for c in crossings]
    return relabel(lists, [0] * len(lists))


def check_braid(word):
    from .criterion import Status, Verdict

    if isinstance(word, str):
        word = parse_braid(word)
    word = reduce_braid(word)
    reasons = []
    detail = {"word": word}
    try:
        violations, vacuous = check_interleaving(word)
        detail["vacuous"] = tuple(vacuous)
        if violations:
            detail["interleaving_violations"] = tuple(violations)
            reasons.append("Interleaving")
    except EvenStrandCount:
        reasons.append("EvenStrandCount")
    comps = closure_components(word)
    if comps != 1:
        reasons.append(f"NotAKnot({comps})")
    for i, s in enumerate(word.syllables):
        if abs(s.exp) < 2:
            reasons.append(f"WeightTooSmall(syllable={i},exp={s.exp})")
    if not any(abs(s.exp) >= 3 for s in word.syllables):
        reasons.append("NoWeightAboveTwo")
    status = Status.CERTIFIED if not reasons else Status.HYPOTHESES_FAIL
    return Verdict(
        status,
        tuple(reasons),
        tuple(sorted(abs(s.exp) for s in word.syllables)),
        (),
        len(word.syllables),
        detail,
    )
