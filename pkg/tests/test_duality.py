import pytest

from orbitduality.duality import (
    DualPair,
    achar_dual,
    all_bar_classes,
    embed,
    is_special_pair,
    min_special_cover,
    pair_leq,
    sommers_dual,
)
from orbitduality.errors import (
    GroupMismatchError,
    NonUniqueCoverError,
    UnknownLabelError,
)
from orbitduality.orbits import BundlePoset, classical_poset


@pytest.fixture(scope="module")
def a2_pair():
    p = classical_poset("A", 2)
    return DualPair(p, p.dual)


def test_sommers_examples(f4_pair, a2_pair):
    assert sommers_dual(f4_pair, ("F4(a3)", "1")) == "F4(a3)"
    assert sommers_dual(f4_pair, ("A2", "1")) == "C3"
    assert sommers_dual(a2_pair, ("(2,1)", "1")) == "(2,1)"


def test_sommers_surjective(f4_pair):
    image = {sommers_dual(f4_pair, bc) for bc in all_bar_classes(f4_pair.g)}
    assert image == set(f4_pair.gd.labels)


def test_sommers_extends_d(f4_pair):
    for label in f4_pair.g.labels:
        assert sommers_dual(f4_pair, (label, "1")) == f4_pair.g.d(label)


def test_embed_examples(f4_pair):
    assert embed(f4_pair, ("F4(a3)", "1")) == ("F4(a3)", "F4(a3)")
    assert embed(f4_pair, ("0", "1")) == ("0", "F4")
    assert embed(f4_pair, ("A1", "1")) == ("A1", "F4(a1)")


def test_embed_injective(f4_pair):
    classes = all_bar_classes(f4_pair.g)
    images = {embed(f4_pair, bc) for bc in classes}
    assert len(images) == len(classes) == 21


def test_class_label_normalization(f4_pair):
    assert sommers_dual(f4_pair, ("F4(a3)", " (12) ")) == "C3(a1)"
    with pytest.raises(UnknownLabelError):
        sommers_dual(f4_pair, ("F4(a3)", "(13)"))


def test_pair_leq(f4_pair):
    p = ("0", "F4")
    q = ("F4(a3)", "F4(a3)")
    assert pair_leq(f4_pair, p, p)
    assert pair_leq(f4_pair, p, q)
    assert not pair_leq(f4_pair, q, p)
    with pytest.raises(GroupMismatchError):
        pair_leq(f4_pair, ("0", "nope"), q)


def test_pair_leq_is_partial_order(f4_pair):
    points = [embed(f4_pair, bc) for bc in all_bar_classes(f4_pair.g)]
    for p in points:
        assert pair_leq(f4_pair, p, p)
        for q in points:
            if pair_leq(f4_pair, p, q) and pair_leq(f4_pair, q, p):
                assert p == q
            for r in points:
                if pair_leq(f4_pair, p, q) and pair_leq(f4_pair, q, r):
                    assert pair_leq(f4_pair, p, r)


def test_special_pair_examples(f4_pair):
    assert is_special_pair(f4_pair, ("F4(a3)", "1"))
    assert is_special_pair(f4_pair, ("0", "1"))
    # in the shipped tables every bar class is special
    assert all(is_special_pair(f4_pair, bc) for bc in all_bar_classes(f4_pair.g))


def test_min_special_cover_examples(f4_pair):
    assert min_special_cover(f4_pair, ("F4(a3)", "1")) == ("F4(a3)", "1")
    assert min_special_cover(f4_pair, ("0", "1")) == ("0", "1")
    assert min_special_cover(f4_pair, ("~A1", "1")) == ("~A1", "1")


def test_achar_examples(f4_pair):
    assert achar_dual(f4_pair, ("F4(a3)", "1")) == ("F4(a3)", "1")
    assert achar_dual(f4_pair, ("A1", "1")) == ("F4(a1)", "(12)")
    assert achar_dual(f4_pair, ("B2", "1")) == ("F4(a3)", "(12)(34)")
    assert achar_dual(f4_pair, ("F4(a3)", "(123)")) == ("A1+~A2", "1")


def test_achar_laws(f4_pair):
    flip = f4_pair.flip()
    for bc in all_bar_classes(f4_pair.g):
        once = achar_dual(f4_pair, bc)
        # first projection matches the Sommers image
        assert once[0] == sommers_dual(f4_pair, bc)
        # applying the map three times equals applying it once
        assert achar_dual(f4_pair, achar_dual(flip, once)) == once
        # special elements: involution
        if is_special_pair(f4_pair, bc):
            assert achar_dual(flip, once) == bc


def test_achar_order_reversing(f4_pair):
    flip = f4_pair.flip()
    classes = all_bar_classes(f4_pair.g)
    for x in classes:
        for y in classes:
            if pair_leq(f4_pair, embed(f4_pair, x), embed(f4_pair, y)):
                dx, dy = achar_dual(f4_pair, x), achar_dual(f4_pair, y)
                assert pair_leq(flip, embed(flip, dy), embed(flip, dx))


def test_type_a_achar_is_transpose(a2_pair):
    for label in a2_pair.g.labels:
        assert achar_dual(a2_pair, (label, "1")) == (a2_pair.g.d(label), "1")


def test_non_unique_cover_raises():
    # hand-built tables: (0,1) is non-special with two incomparable
    # minimal special covers (a,1) and (b,1)
    poset = BundlePoset(
        group_id="toy",
        labels=("0", "a", "b", "r"),
        covers=(("0", "a"), ("0", "b"), ("a", "r"), ("b", "r")),
        bar_a={"r": ("1", "c")},
        ds={
            ("0", "1"): "r",
            ("a", "1"): "r",
            ("b", "1"): "r",
            ("r", "1"): "a",
            ("r", "c"): "b",
        },
    )
    poset.attach_dual(poset)
    pair = DualPair(poset, poset)
    assert not is_special_pair(pair, ("0", "1"))
    assert is_special_pair(pair, ("a", "1"))
    assert is_special_pair(pair, ("b", "1"))
    with pytest.raises(NonUniqueCoverError):
        min_special_cover(pair, ("0", "1"))
    with pytest.raises(NonUniqueCoverError):
        achar_dual(pair, ("0", "1"))
