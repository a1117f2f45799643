"""The certification pipeline for diagrams.

A diagram certifies when, after cancelling incoherent twists and
merging parallel side edges, it is a one-component diagram whose twist
regions all have at least two crossings, at least one region has three
or more, and both side graphs are connected (hence trees).  Diagrams
that normalise to a single twist region are the closed twist family
D_k and are excluded rather than failed: the criterion does not speak
about them.
"""

import json
from dataclasses import dataclass, field
from enum import Enum

from .errors import NonAlternatingChain
from .sidegraphs import (
    GREEN,
    RED,
    color_name,
    connectivity_report,
    normalize_assumption2,
)
from .twists import collapse, detect_twist_regions, reduce_assumption1


class Status(Enum):
    CERTIFIED = "certified"
    HYPOTHESES_FAIL = "fail"
    EXCLUDED = "excluded"


@dataclass
class Verdict:
    status: Status
    reasons: tuple
    weights_green: tuple = ()
    weights_red: tuple = ()
    twist_regions: int = 0
    detail: dict = field(default_factory=dict, repr=False, compare=False)

    def to_json(self):
        return json.dumps(
            {
                "status": self.status.value,
                "reasons": list(self.reasons),
                "weights_g": list(self.weights_green),
                "weights_r": list(self.weights_red),
                "twist_regions": self.twist_regions,
            }
        )


def detect_dk(cg):
    """Signed twist count if the collapsed graph is a single region."""
    if len(cg.vertices) != 1:
        return None
    v = cg.vertices[0]
    return v.handedness * v.count


def check_main(d):
    comps = d.component_count()
    if comps != 1:
        try:
            n = len(detect_twist_regions(d, allow_mixed=True))
        except NonAlternatingChain:  # pragma: no cover - mixed is allowed
            n = 0
        return Verdict(
            Status.HYPOTHESES_FAIL,
            (f"NotAKnot({comps})",),
            twist_regions=n,
        )
    original = d
    d = reduce_assumption1(d)
    dec = detect_twist_regions(d)
    cg = collapse(d, dec)
    cg, green, red = normalize_assumption2(cg)
    detail = {
        "diagram": d,
        "decomposition": dec,
        "collapsed": cg,
        "green": green,
        "red": red,
        "reduced": len(d.crossings) != len(original.crossings),
        "merged": len(cg.vertices) != len(dec),
    }
    k = detect_dk(cg)
    if k is not None:
        return Verdict(
            Status.EXCLUDED,
            (f"DkDiagram({k})",),
            green.weights(),
            red.weights(),
            1,
            detail,
        )
    reasons = []
    for v in cg.vertices:
        if v.count < 2:
            reasons.append(f"WeightTooSmall(region={v.index},count={v.count})")
    if not any(v.count >= 3 for v in cg.vertices):
        reasons.append("NoWeightAboveTwo")
    rep = connectivity_report(green, red)
    detail["connectivity"] = rep
    if not rep.connected_green:
        reasons.append(f"Disconnected({color_name(GREEN)})")
    if not rep.connected_red:
        reasons.append(f"Disconnected({color_name(RED)})")
    status = Status.CERTIFIED if not reasons else Status.HYPOTHESES_FAIL
    return Verdict(
        status,
        tuple(reasons),
        green.weights(),
        red.weights(),
        len(cg.vertices),
        detail,
    )


@dataclass
class Diagnosis:
    branch: str
    surfaces: int
    twist_counts: tuple
    borromean_family: bool
    verdict: Verdict

    def to_json(self):
        return json.dumps(
            {
                "branch": self.branch,
                "surfaces": self.surfaces,
                "twist_counts": list(self.twist_counts),
                "borromean_family": self.borromean_family,
                "verdict": json.loads(self.verdict.to_json()),
            }
        )


def diagnose(d):
    """Describe which construction applies and how many surfaces it yields.

    The count is the number of faces of the normalised collapsed graph:
    each face carries one branched-surface sector in the construction
    the certificate rests on.
    """
    verdict = check_main(d)
    cg = verdict.detail.get("collapsed")
    if cg is None:
        return Diagnosis("none", 0, (), False, verdict)
    counts = tuple(v.count for v in cg.vertices)
    nv = len(cg.vertices)
    if nv == 1:
        branch = "closed_twist"
        borromean = False
    elif nv == 2:
        branch = "two_crossing_circles"
        borromean = all(c % 2 == 0 for c in counts)
    else:
        branch = "main_construction"
        borromean = False
    return Diagnosis(branch, len(cg.faces), counts, borromean, verdict)
