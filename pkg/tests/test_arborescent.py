import pytest

from foliar import (
    Status,
    check_arborescent,
    check_main,
    collapse,
    detect_twist_regions,
    family_tree,
    generate_diagram,
    make_pretzel_pd,
    parse_pd,
    parse_tree,
)
from foliar.errors import MalformedTree, ZeroWeight

from conftest import FIG8, random_tree_text, seeded


def test_parse_and_text_round_trip():
    for text in ("(3)", "(2 (3))", "(-2 (3) (7))", "(3 (2 (3)) (1 (4)))"):
        assert parse_tree(text).to_text() == text


def test_parse_errors():
    with pytest.raises(ZeroWeight):
        parse_tree("(0)")
    with pytest.raises(ZeroWeight):
        parse_tree("(2 (0))")
    with pytest.raises(MalformedTree):
        parse_tree("(2 (3)")
    with pytest.raises(MalformedTree):
        parse_tree("")
    with pytest.raises(MalformedTree):
        parse_tree("(2 x)")


def test_weights_and_len():
    t = parse_tree("(2 (3))")
    assert len(t) == 2
    assert t.weights() == (2, 3)


def test_rerootings():
    t = parse_tree("(2 (3))")
    assert [rt.to_text() for rt in t.rerootings()] == ["(2 (3))", "(3 (2))"]


def test_family_tree_shapes():
    assert family_tree("two_bridge", [2, 3, 4]).to_text() == "(2 (3 (4)))"
    assert family_tree("pretzel", [-2, 3, 7]).to_text() == "(-2 (3) (7))"
    assert (
        family_tree("montesinos", [3, (2, 3), (1, 4)]).to_text()
        == "(3 (2 (3)) (1 (4)))"
    )


def test_single_vertex_generates_closed_chain():
    d = generate_diagram(parse_tree("(3)"))
    r = detect_twist_regions(d)[0]
    assert (r.count, r.handedness, r.cyclic) == (3, 1, True)
    d = generate_diagram(parse_tree("(-3)"))
    r = detect_twist_regions(d)[0]
    assert (r.count, r.handedness) == (3, -1)


def test_two_vertex_path_is_double_twist():
    d = generate_diagram(parse_tree("(2 (2))"))
    ref = parse_pd(FIG8)
    va, vb = check_main(d), check_main(ref)
    assert va.status == vb.status == Status.HYPOTHESES_FAIL
    assert va.weights_green == vb.weights_green == (2,)
    assert va.weights_red == vb.weights_red == (2,)


def test_generated_diagrams_are_validated():
    rng = seeded(11)
    for _ in range(40):
        t = parse_tree(random_tree_text(rng))
        d = generate_diagram(t, validate=True)
        assert len(d.faces) == len(d.crossings) + 2


def test_root_choice_does_not_change_verdict():
    rng = seeded(5)
    done = 0
    for _ in range(30):
        t = parse_tree(random_tree_text(rng, max_nodes=4))
        verdicts = set()
        for rt in t.rerootings():
            v = check_arborescent(rt)
            verdicts.add((v.status, tuple(sorted(v.weights_green))))
        assert len(verdicts) == 1
        done += 1
    assert done == 30


def test_check_accepts_text():
    v = check_arborescent("(2 (3))")
    assert v.status == Status.CERTIFIED
    assert v.weights_green == (2, 3)
    assert v.weights_red == ()


def test_single_vertex_fails_at_tree_level():
    v = check_arborescent("(5)")
    assert v.status == Status.HYPOTHESES_FAIL
    assert v.reasons == ("SingleVertex",)
    assert v.weights_green == (5,)


def test_single_vertex_diagram_is_excluded():
    v = check_main(generate_diagram(parse_tree("(5)")))
    assert v.status == Status.EXCLUDED
    assert v.reasons == ("DkDiagram(5)",)


def test_small_weights_reported():
    v = check_arborescent("(2 (1 (3)))")
    assert v.status == Status.HYPOTHESES_FAIL
    assert "WeightTooSmall(vertex=1,weight=1)" in v.reasons


def test_no_weight_above_two():
    v = check_arborescent("(2 (2))")
    assert v.status == Status.HYPOTHESES_FAIL
    assert v.reasons == ("NoWeightAboveTwo",)


def test_link_trees_rejected_as_knots():
    v = check_arborescent("(2 (3) (7))")
    assert v.status == Status.HYPOTHESES_FAIL
    assert v.reasons == ("NotAKnot(2)",)


def test_flat_pretzel_pd_matches_counts():
    d = make_pretzel_pd([-2, 3, 7])
    assert d.component_count() == 1
    dec = detect_twist_regions(d)
    assert sorted(r.count for r in dec) == [2, 3, 7]
    # column chains sit crosswise to the closure, so the stored
    # handedness is opposite to the column sign
    assert sorted(r.handedness * r.count for r in dec) == [-7, -3, 2]


def test_tree_and_diagram_verdicts_agree():
    rng = seeded(23)
    compared = 0
    for _ in range(120):
        t = parse_tree(random_tree_text(rng, max_nodes=5))
        if len(t) < 2:
            continue
        tv = check_arborescent(t)
        dv = check_main(generate_diagram(t))
        if "NotAKnot(2)" in tv.reasons or dv.status == Status.EXCLUDED:
            continue
        assert tv.status == dv.status
        compared += 1
    assert compared >= 25
