"""Nilpotent-orbit posets: classical families from partitions, exceptional
groups from bundled tables, and the order-reversing duality between a
poset and its dual-group partner.

Type D partitions with all parts even correspond to two orbits; they are
decorated ``I``/``II``, treated as incomparable to each other, with
identical closures below, and the duality map carries the decoration
across.  Image comparisons (specialness, the d^3 = d law) ignore the
decoration, matching the coarse table data we ship.
"""

from __future__ import annotations

from functools import lru_cache

from . import partitions as pt
from .errors import MissingTableError, NonUniqueCoverError, UnknownLabelError
from .rootdata import Coweight, RootSystem, root_system


def partition_label(p: pt.Partition, decoration: str = "") -> str:
    return "(" + ",".join(str(x) for x in p) + ")" + decoration


def parse_partition_label(label: str) -> tuple[pt.Partition, str]:
    decoration = ""
    body = label
    for suffix in ("II", "I"):
        if body.endswith(suffix):
            decoration = suffix
            body = body[: -len(suffix)]
            break
    if not (body.startswith("(") and body.endswith(")")):
        raise UnknownLabelError(f"not a partition label: {label!r}")
    inner = body[1:-1]
    parts = [int(x) for x in inner.split(",")] if inner else []
    return pt.partition(parts), decoration


class NilpotentPoset:
    """Shared behaviour: closure queries, duality-derived notions.

    Subclasses provide ``labels``, ``leq``, ``d`` (dual-side label),
    ``dual``, ``bar_classes`` and ``sommers``.
    """

    group_id: str = ""
    labels: tuple[str, ...] = ()

    # -- primitives supplied by subclasses --------------------------------

    def leq(self, a: str, b: str) -> bool:
        raise NotImplementedError

    def d(self, label: str) -> str:
        raise NotImplementedError

    @property
    def dual(self) -> "NilpotentPoset":
        raise NotImplementedError

    def bar_classes(self, label: str) -> tuple[str, ...]:
        self.check_label(label)
        return ("1",)

    def sommers(self, label: str, class_label: str) -> str:
        raise MissingTableError(
            f"no Sommers duality table for group {self.group_id}"
        )

    def dim(self, label: str) -> int | None:
        self.check_label(label)
        return None

    def weighted_dynkin(self, label: str) -> Coweight | None:
        self.check_label(label)
        return None

    def root_system(self) -> RootSystem | None:
        return None

    # -- shared behaviour --------------------------------------------------

    def check_label(self, label: str) -> None:
        if label not in self.labels:
            raise UnknownLabelError(
                f"unknown orbit {label!r} in group {self.group_id}"
            )

    def same_image(self, a: str, b: str) -> bool:
        """Label equality, ignoring the type D I/II decoration."""
        return a == b or _strip_decoration(a) == _strip_decoration(b)

    def zero(self) -> str:
        return self._extreme(lambda a, b: self.leq(a, b))

    def regular(self) -> str:
        return self._extreme(lambda a, b: self.leq(b, a))

    def _extreme(self, below) -> str:
        found = [a for a in self.labels if all(below(a, b) for b in self.labels)]
        if len(found) != 1:
            raise NonUniqueCoverError(
                f"group {self.group_id} has no unique extreme orbit"
            )
        return found[0]

    def is_special(self, label: str) -> bool:
        return self.same_image(self.dual.d(self.d(label)), label)

    def specials(self) -> tuple[str, ...]:
        return tuple(a for a in self.labels if self.is_special(a))

    def special_closure(self, label: str) -> str:
        """The unique minimal special orbit above label."""
        self.check_label(label)
        above = [s for s in self.labels if self.is_special(s) and self.leq(label, s)]
        minima = [s for s in above if all(self.leq(s, t) for t in above)]
        if len(minima) != 1:
            raise NonUniqueCoverError(
                f"orbit {label} in {self.group_id} has no unique minimal "
                f"special orbit above it"
            )
        return minima[0]

    def special_piece(self, label: str) -> tuple[str, ...]:
        """All orbits sharing this orbit's special closure, in label order."""
        top = self.special_closure(label)
        return tuple(
            b for b in self.labels if self.special_closure(b) == top
        )


def _strip_decoration(label: str) -> str:
    for suffix in ("II", "I"):
        if label.endswith(suffix):
            return label[: -len(suffix)]
    return label


# -- classical posets -------------------------------------------------------

_DUAL_FAMILY = {"A": "A", "B": "C", "C": "B", "D": "D"}


def _family_size(family: str, rank: int) -> int:
    if family == "A":
        return rank + 1
    if family == "B":
        return 2 * rank + 1
    return 2 * rank


class ClassicalPoset(NilpotentPoset):
    """Orbit poset of a classical group, computed from partitions."""

    def __init__(self, family: str, rank: int):
        if family not in pt.FAMILIES:
            raise ValueError(f"unknown classical family {family!r}")
        if rank < 1 or (family == "D" and rank < 2):
            raise ValueError(f"bad rank {rank} for family {family}")
        self.family = family
        self.rank = rank
        self.size = _family_size(family, rank)
        self.group_id = f"{family}{rank}"
        labels = []
        self._part = {}
        self._dec = {}
        for p in pt.enumerate_valid(self.size, family):
            if family == "D" and p and all(x % 2 == 0 for x in p):
                for dec in ("I", "II"):
                    lab = partition_label(p, dec)
                    labels.append(lab)
                    self._part[lab] = p
                    self._dec[lab] = dec
            else:
                lab = partition_label(p)
                labels.append(lab)
                self._part[lab] = p
                self._dec[lab] = ""
        self.labels = tuple(labels)

    def partition_of(self, label: str) -> pt.Partition:
        self.check_label(label)
        return self._part[label]

    def leq(self, a: str, b: str) -> bool:
        self.check_label(a)
        self.check_label(b)
        pa, pb = self._part[a], self._part[b]
        if pa == pb:
            # decorated twins are incomparable
            return self._dec[a] == self._dec[b]
        return pt.dominates(pb, pa)

    @property
    def dual(self) -> "ClassicalPoset":
        return classical_poset(_DUAL_FAMILY[self.family], self.rank)

    def d(self, label: str) -> str:
        """Transpose, adjust the size for B <-> C, collapse into the dual
        family; the box conventions are pinned by the property suite."""
        self.check_label(label)
        p = list(pt.transpose(self._part[label]))
        if self.family == "B":
            p[-1] -= 1  # drop the last box
            q = pt.collapse(pt.partition(p), "C")
        elif self.family == "C":
            p[0] += 1  # grow the first row
            q = pt.collapse(pt.partition(p), "B")
        else:
            q = pt.collapse(pt.partition(p), self.family)
        dec = ""
        if self.dual.family == "D" and q and all(x % 2 == 0 for x in q):
            dec = self._dec[label] or "I"
        return partition_label(q, dec)

    def sommers(self, label: str, class_label: str) -> str:
        self.check_label(label)
        if self.family != "A":
            raise MissingTableError(
                f"Sommers duality for {self.group_id} needs bundled tables"
            )
        if class_label != "1":
            raise UnknownLabelError(
                f"unknown class {class_label!r} on orbit {label} of {self.group_id}"
            )
        return self.d(label)

    def root_system(self) -> RootSystem:
        return root_system(self.family, self.rank)


@lru_cache(maxsize=None)
def classical_poset(family: str, rank: int) -> ClassicalPoset:
    return ClassicalPoset(family, rank)


# -- bundle-backed posets ----------------------------------------------------

def transitive_closure(labels, covers) -> frozenset:
    """Reflexive-transitive closure of covering pairs as a (lo, hi) set."""
    below = {a: {a} for a in labels}
    changed = True
    while changed:
        changed = False
        for lo, hi in covers:
            new = below[lo] - below[hi]
            if new:
                below[hi] |= new
                changed = True
    return frozenset((lo, hi) for hi, los in below.items() for lo in los)


class BundlePoset(NilpotentPoset):
    """Orbit poset loaded from a data bundle.

    ``ds`` maps (orbit label, class label) to a dual-group orbit label;
    the plain duality map is its restriction to the trivial class.
    """

    def __init__(self, group_id, labels, covers, bar_a, ds,
                 dims=None, dynkin=None, rs: RootSystem | None = None,
                 special_flags=None):
        self.group_id = group_id
        self.labels = tuple(labels)
        self._leq = transitive_closure(self.labels, covers)
        self._bar = {o: tuple(cs) for o, cs in bar_a.items()}
        self._ds = dict(ds)
        self._dims = dict(dims or {})
        self._dynkin = dict(dynkin or {})
        self._rs = rs
        self.special_flags = dict(special_flags or {})
        self._dual: NilpotentPoset | None = None

    def attach_dual(self, other: "NilpotentPoset") -> None:
        self._dual = other

    @property
    def dual(self) -> NilpotentPoset:
        if self._dual is None:
            raise MissingTableError(
                f"group {self.group_id} has no dual-group data attached"
            )
        return self._dual

    def leq(self, a: str, b: str) -> bool:
        self.check_label(a)
        self.check_label(b)
        return (a, b) in self._leq

    def bar_classes(self, label: str) -> tuple[str, ...]:
        self.check_label(label)
        return self._bar.get(label, ("1",))

    def sommers(self, label: str, class_label: str) -> str:
        self.check_label(label)
        try:
            return self._ds[(label, class_label)]
        except KeyError:
            raise MissingTableError(
                f"no duality entry for ({label}, {class_label}) in {self.group_id}"
            ) from None

    def d(self, label: str) -> str:
        return self.sommers(label, "1")

    def dim(self, label: str) -> int | None:
        self.check_label(label)
        return self._dims.get(label)

    def weighted_dynkin(self, label: str) -> Coweight | None:
        self.check_label(label)
        return self._dynkin.get(label)

    def root_system(self) -> RootSystem | None:
        return self._rs


# -- functional wrappers used by callers that hold a poset handle ------------

def closure_leq(poset: NilpotentPoset, a: str, b: str) -> bool:
    return poset.leq(a, b)


def bvls_dual(poset: NilpotentPoset, label: str) -> str:
    return poset.d(label)


def is_special(poset: NilpotentPoset, label: str) -> bool:
    return poset.is_special(label)


def special_closure(poset: NilpotentPoset, label: str) -> str:
    return poset.special_closure(label)


def special_piece_of(poset: NilpotentPoset, label: str) -> tuple[str, ...]:
    return poset.special_piece(label)
