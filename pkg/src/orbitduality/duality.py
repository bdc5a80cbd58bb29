"""Duality on orbits decorated with canonical-quotient conjugacy classes.

A bar class is a pair ``(orbit label, class label)`` naming a conjugacy
class in the canonical quotient of the orbit's equivariant fundamental
group.  The Sommers map sends bar classes of one group onto the orbits
of its dual group; embedding a bar class as the pair
``(orbit, sommers image)`` and flipping the two coordinates yields the
refined duality, with a detour through the minimal special cover when
the flipped pair is not itself in the image of the dual embedding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    GroupMismatchError,
    InconsistentDataError,
    NonUniqueCoverError,
    UnknownLabelError,
)
from .orbits import NilpotentPoset

BarClass = tuple[str, str]  # (orbit label, class label)
OrbitPair = tuple[str, str]  # (orbit in G, orbit in the dual group)


def normalize_class(class_label: str) -> str:
    return "".join(class_label.split())


@dataclass(frozen=True)
class DualPair:
    """An oriented pair of mutually dual orbit posets."""

    g: NilpotentPoset
    gd: NilpotentPoset

    def flip(self) -> "DualPair":
        return DualPair(self.gd, self.g)

    def check(self, bc: BarClass) -> BarClass:
        orbit, cls = bc
        cls = normalize_class(cls)
        self.g.check_label(orbit)
        if cls not in self.g.bar_classes(orbit):
            raise UnknownLabelError(
                f"orbit {orbit} of {self.g.group_id} has no class {cls!r}"
            )
        return (orbit, cls)


def all_bar_classes(poset: NilpotentPoset) -> tuple[BarClass, ...]:
    return tuple(
        (o, c) for o in poset.labels for c in poset.bar_classes(o)
    )


def sommers_dual(pair: DualPair, bc: BarClass) -> str:
    orbit, cls = pair.check(bc)
    return pair.g.sommers(orbit, cls)


def embed(pair: DualPair, bc: BarClass) -> OrbitPair:
    orbit, cls = pair.check(bc)
    return (orbit, pair.g.sommers(orbit, cls))


def pair_leq(pair: DualPair, p: OrbitPair, q: OrbitPair) -> bool:
    """Product order: first coordinates up, second coordinates down."""
    try:
        return pair.g.leq(p[0], q[0]) and pair.gd.leq(q[1], p[1])
    except UnknownLabelError as exc:
        raise GroupMismatchError(str(exc)) from None


def _flip_pair(p: OrbitPair) -> OrbitPair:
    return (p[1], p[0])


def _unembed(pair: DualPair, target: OrbitPair) -> BarClass | None:
    """Inverse of embed on the given pair's group, None when not hit."""
    hits = [
        bc for bc in all_bar_classes(pair.g) if embed(pair, bc) == target
    ]
    if len(hits) > 1:
        raise InconsistentDataError(
            f"embedding of {pair.g.group_id} is not injective at {target}"
        )
    return hits[0] if hits else None


def is_special_pair(pair: DualPair, bc: BarClass) -> bool:
    """Whether the flipped embedded pair lies in the dual embedding image."""
    target = _flip_pair(embed(pair, bc))
    return _unembed(pair.flip(), target) is not None


def min_special_cover(pair: DualPair, bc: BarClass) -> BarClass:
    """The unique smallest special bar class above bc in the embedded order."""
    bc = pair.check(bc)
    here = embed(pair, bc)
    above = [
        other
        for other in all_bar_classes(pair.g)
        if is_special_pair(pair, other)
        and pair_leq(pair, here, embed(pair, other))
    ]
    minima = [
        m for m in above
        if all(pair_leq(pair, embed(pair, m), embed(pair, o)) for o in above)
    ]
    if len(minima) != 1:
        raise NonUniqueCoverError(
            f"bar class {bc} of {pair.g.group_id} has "
            f"{len(minima)} minimal special covers"
        )
    return minima[0]


def achar_dual(pair: DualPair, bc: BarClass) -> BarClass:
    """Refined duality: embed the minimal special cover, flip, unembed."""
    cover = min_special_cover(pair, bc)
    target = _flip_pair(embed(pair, cover))
    out = _unembed(pair.flip(), target)
    if out is None:
        raise InconsistentDataError(
            f"flipped cover {target} of {bc} is outside the dual "
            f"embedding image (corrupt tables)"
        )
    return out
