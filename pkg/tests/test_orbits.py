import pytest

from orbitduality import partitions as pt
from orbitduality.errors import (
    MissingTableError,
    NonUniqueCoverError,
    UnknownLabelError,
)
from orbitduality.orbits import (
    BundlePoset,
    bvls_dual,
    classical_poset,
    closure_leq,
    is_special,
    parse_partition_label,
    partition_label,
    special_closure,
    special_piece_of,
)

CLASSICAL = [("A", r) for r in range(1, 5)] + \
    [("B", r) for r in range(1, 5)] + \
    [("C", r) for r in range(1, 5)] + \
    [("D", r) for r in range(2, 5)]


def strip_dec(label):
    for suffix in ("II", "I"):
        if label.endswith(suffix):
            return label[: -len(suffix)]
    return label


def test_partition_labels_round_trip():
    assert partition_label((3, 1, 1)) == "(3,1,1)"
    assert parse_partition_label("(3,1,1)") == ((3, 1, 1), "")
    assert parse_partition_label("(2,2)II") == ((2, 2), "II")
    with pytest.raises(UnknownLabelError):
        parse_partition_label("F4(a3)")


def test_zero_and_regular_orbits():
    b2 = classical_poset("B", 2)
    assert b2.zero() == "(1,1,1,1,1)"
    assert b2.regular() == "(5)"
    d3 = classical_poset("D", 3)
    assert d3.regular() == "(5,1)"
    for fam, rank in CLASSICAL:
        p = classical_poset(fam, rank)
        z, r = p.zero(), p.regular()
        assert all(p.leq(z, a) and p.leq(a, r) for a in p.labels)
        assert p.is_special(z) and p.is_special(r)


def test_closure_is_dominance_for_classical():
    c3 = classical_poset("C", 3)
    for a in c3.labels:
        for b in c3.labels:
            expected = pt.dominates(c3.partition_of(b), c3.partition_of(a))
            assert closure_leq(c3, a, b) == expected


def test_closure_examples():
    c2 = classical_poset("C", 2)
    z = c2.zero()
    assert all(closure_leq(c2, z, a) for a in c2.labels)
    assert all(closure_leq(c2, a, a) for a in c2.labels)


def test_type_a_dual_is_transpose():
    a2 = classical_poset("A", 2)
    assert bvls_dual(a2, "(2,1)") == "(2,1)"
    assert bvls_dual(a2, "(3)") == "(1,1,1)"
    for label in a2.labels:
        p, _ = parse_partition_label(label)
        assert bvls_dual(a2, label) == partition_label(pt.transpose(p))


def test_classical_duality_laws():
    for fam, rank in CLASSICAL:
        p = classical_poset(fam, rank)
        q = p.dual
        for a in p.labels:
            # d^3 = d
            assert p.same_image(p.d(q.d(p.d(a))), p.d(a)), (fam, rank, a)
        for a in p.labels:
            for b in p.labels:
                if p.leq(a, b):
                    assert q.leq(p.d(b), p.d(a)), (fam, rank, a, b)


def test_classical_specials_match_brute_force_image():
    for fam, rank in CLASSICAL:
        p = classical_poset(fam, rank)
        q = p.dual
        image = {strip_dec(q.d(b)) for b in q.labels}
        fixed = {strip_dec(a) for a in p.labels if p.is_special(a)}
        assert image == fixed, (fam, rank)


def test_special_closure_properties():
    posets = [classical_poset(f, r) for f, r in CLASSICAL]
    for p in posets:
        for a in p.labels:
            top = special_closure(p, a)
            assert p.is_special(top)
            assert p.leq(a, top)
            if p.is_special(a):
                assert top == a
            assert p.same_image(p.d(top), p.d(a)), (p.group_id, a)


def test_special_pieces_partition_classical():
    for fam, rank in CLASSICAL:
        p = classical_poset(fam, rank)
        pieces = {special_piece_of(p, a) for a in p.labels}
        seen = [a for piece in pieces for a in piece]
        assert sorted(seen) == sorted(p.labels)
        for piece in pieces:
            specials = [a for a in piece if p.is_special(a)]
            assert len(specials) == 1
            top = specials[0]
            assert all(p.leq(a, top) for a in piece)


def test_very_even_twins():
    d4 = classical_poset("D", 4)
    assert "(4,4)I" in d4.labels and "(4,4)II" in d4.labels
    assert not d4.leq("(4,4)I", "(4,4)II")
    assert not d4.leq("(4,4)II", "(4,4)I")
    assert d4.leq("(4,4)I", "(4,4)I")
    # identical closures below
    below_i = {a for a in d4.labels if d4.leq(a, "(4,4)I")} - {"(4,4)I"}
    below_ii = {a for a in d4.labels if d4.leq(a, "(4,4)II")} - {"(4,4)II"}
    assert below_i == below_ii
    # duality carries the decoration
    assert d4.d("(4,4)I") == "(2,2,2,2)I"
    assert d4.d("(4,4)II") == "(2,2,2,2)II"
    assert d4.same_image("(4,4)I", "(4,4)II")
    assert not d4.same_image("(4,4)I", "(2,2,2,2)I")


def test_unknown_label_and_missing_tables():
    c2 = classical_poset("C", 2)
    with pytest.raises(UnknownLabelError):
        c2.leq("(9)", "(4)")
    with pytest.raises(MissingTableError):
        c2.sommers("(4)", "1")
    a2 = classical_poset("A", 2)
    assert a2.sommers("(2,1)", "1") == "(2,1)"
    with pytest.raises(UnknownLabelError):
        a2.sommers("(2,1)", "(12)")


# -- bundle-backed poset ------------------------------------------------------

def test_f4_duality_examples(f4_pair):
    g = f4_pair.g
    assert bvls_dual(g, "0") == "F4"
    assert bvls_dual(g, "F4(a3)") == "F4(a3)"
    assert bvls_dual(g, "A2") == "C3"


def test_f4_closure_examples(f4_pair):
    g = f4_pair.g
    assert closure_leq(g, "A1", "F4(a3)")
    assert all(closure_leq(g, "0", a) for a in g.labels)
    assert all(closure_leq(g, a, a) for a in g.labels)


def test_f4_specials(f4_pair):
    g = f4_pair.g
    assert is_special(g, "0")
    assert is_special(g, "F4(a3)")
    assert not is_special(g, "A1")
    assert not is_special(g, "B2")
    computed = {a for a in g.labels if is_special(g, a)}
    flagged = {a for a, flag in g.special_flags.items() if flag}
    assert computed == flagged
    assert len(computed) == 11


def test_f4_special_closure(f4_pair):
    g = f4_pair.g
    assert special_closure(g, "B2") == "F4(a3)"
    assert special_closure(g, "0") == "0"
    for a in g.labels:
        if is_special(g, a):
            assert special_closure(g, a) == a
        assert g.d(special_closure(g, a)) == g.d(a)


def test_f4_special_pieces(f4_pair):
    g = f4_pair.g
    piece = set(special_piece_of(g, "F4(a3)"))
    assert piece == {"F4(a3)", "C3(a1)", "B2", "A1+~A2", "~A1+A2"}
    assert special_piece_of(g, "0") == ("0",)
    assert "F4" in special_piece_of(g, "F4")
    pieces = {special_piece_of(g, a) for a in g.labels}
    seen = sorted(a for piece in pieces for a in piece)
    assert seen == sorted(g.labels)


def test_f4_closure_strictly_increases_dimension(f4_pair):
    g = f4_pair.g
    for a in g.labels:
        for b in g.labels:
            if a != b and g.leq(a, b):
                assert g.dim(a) < g.dim(b), (a, b)


def test_non_unique_special_closure_raises():
    # diamond with both middle orbits "special" and a non-special top
    poset = BundlePoset(
        group_id="toy",
        labels=("0", "a", "b", "r"),
        covers=(("0", "a"), ("0", "b"), ("a", "r"), ("b", "r")),
        bar_a={},
        ds={("0", "1"): "r", ("a", "1"): "a", ("b", "1"): "b", ("r", "1"): "a"},
    )
    poset.attach_dual(poset)
    # a, b are d-fixed; 0 and r are not
    assert poset.is_special("a") and poset.is_special("b")
    assert not poset.is_special("0")
    with pytest.raises(NonUniqueCoverError):
        poset.special_closure("0")
