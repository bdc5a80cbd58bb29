"""Parameter sets at a fixed real infinitesimal character, their wavefront
invariants, and the packets cut out by those invariants.

A parameter records the orbit of its nilpotent part in the dual group,
an opaque component-group label, and a link to its dual partner under
the Bernstein-block involution.  Everything here is computed from the
orbit data: temperedness compares orbits, the wavefront invariant is the
refined dual of the partner's orbit at the trivial class, and the two
packet notions are sublevel sets of that invariant and of its coarse
first projection.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .duality import BarClass, DualPair, achar_dual, embed, pair_leq
from .errors import InconsistentDataError, UnknownLabelError
from .orbits import NilpotentPoset
from .rootdata import Coweight, dominant_rep, half_sum, weyl_conjugate


@dataclass(frozen=True)
class Parameter:
    id: str
    n_orbit: str
    rho: str
    iwahori: bool = True
    unitary: bool | None = None
    az_partner: str = ""


@dataclass(frozen=True)
class ParameterSet:
    """Parameters sharing one infinitesimal-character orbit in the dual group."""

    ic_orbit: str
    params: tuple[Parameter, ...]
    _by_id: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for x in self.params:
            self._by_id[x.id] = x

    def __iter__(self):
        return iter(self.params)

    def get(self, param_id: str) -> Parameter:
        try:
            return self._by_id[param_id]
        except KeyError:
            raise UnknownLabelError(f"unknown parameter id {param_id!r}") from None

    def ids(self) -> list[str]:
        return [x.id for x in self.params]


def natural_key(param_id: str):
    """Sort X2 before X13: split runs of digits into integers."""
    key, num = [], ""
    for ch in param_id:
        if ch.isdigit():
            num += ch
        else:
            if num:
                key.append((1, int(num)))
                num = ""
            key.append((0, ch))
    if num:
        key.append((1, int(num)))
    return key


def is_tempered(ps: ParameterSet, x: Parameter) -> bool:
    return x.n_orbit == ps.ic_orbit


def az_dual(ps: ParameterSet, x: Parameter) -> Parameter:
    return ps.get(x.az_partner)


def cuwf(pair: DualPair, ps: ParameterSet, x: Parameter) -> BarClass:
    """Wavefront invariant of x as a bar class on the group side.

    The parameters live on the dual side of ``pair``; the invariant is the
    refined dual of the partner's nilpotent orbit at the trivial class.
    """
    partner = az_dual(ps, x)
    return achar_dual(pair.flip(), (partner.n_orbit, "1"))


def geometric_wf(pair: DualPair, ps: ParameterSet, x: Parameter) -> str:
    """Coarse orbit-valued wavefront invariant: first projection of cuwf."""
    return cuwf(pair, ps, x)[0]


def _cuwf_bound(pair: DualPair, ps: ParameterSet) -> BarClass:
    return achar_dual(pair.flip(), (ps.ic_orbit, "1"))


def arthur_packet(pair: DualPair, ps: ParameterSet) -> list[str]:
    """Parameters whose wavefront invariant is below the dual of the
    infinitesimal-character orbit; provably the same set as the
    parameters with tempered partners, and checked against it."""
    bound = embed(pair, _cuwf_bound(pair, ps))
    by_wavefront = {
        x.id
        for x in ps
        if pair_leq(pair, embed(pair, cuwf(pair, ps, x)), bound)
    }
    by_tempered_dual = {x.id for x in ps if is_tempered(ps, az_dual(ps, x))}
    if by_wavefront != by_tempered_dual:
        raise InconsistentDataError(
            f"packet characterizations disagree at {ps.ic_orbit}: "
            f"wavefront {sorted(by_wavefront)} vs "
            f"tempered-dual {sorted(by_tempered_dual)}"
        )
    return sorted(by_wavefront, key=natural_key)


def weak_packet(pair: DualPair, ps: ParameterSet) -> list[str]:
    """Parameters whose coarse wavefront orbit is below d(ic_orbit);
    provably the parameters whose partner orbit lies in the special piece
    of the infinitesimal-character orbit, and checked against it."""
    bound = pair.gd.d(ps.ic_orbit)
    by_wavefront = {
        x.id for x in ps if pair.g.leq(geometric_wf(pair, ps, x), bound)
    }
    piece = set(pair.gd.special_piece(ps.ic_orbit))
    by_piece = {x.id for x in ps if az_dual(ps, x).n_orbit in piece}
    if by_wavefront != by_piece:
        raise InconsistentDataError(
            f"weak packet characterizations disagree at {ps.ic_orbit}: "
            f"wavefront {sorted(by_wavefront)} vs "
            f"special-piece {sorted(by_piece)}"
        )
    return sorted(by_wavefront, key=natural_key)


@dataclass(frozen=True)
class JiangReport:
    """Per-member wavefront equalities and the global lower bound."""

    ic_orbit: str
    dual_orbit: str
    members: tuple[tuple[str, str, bool], ...]  # (id, wavefront orbit, equal)
    lower_bounds: tuple[tuple[str, bool], ...]  # (id, bound holds)

    @property
    def passed(self) -> bool:
        return all(eq for _, _, eq in self.members) and all(
            ok for _, ok in self.lower_bounds
        )

    def to_dict(self) -> dict:
        return {
            "ic_orbit": self.ic_orbit,
            "dual_orbit": self.dual_orbit,
            "members": [
                {"id": i, "wavefront": wf, "equal": eq}
                for i, wf, eq in self.members
            ],
            "lower_bounds": [
                {"id": i, "holds": ok} for i, ok in self.lower_bounds
            ],
            "passed": self.passed,
        }


def check_jiang(pair: DualPair, ps: ParameterSet) -> JiangReport:
    """Every packet member's coarse wavefront orbit equals d(ic_orbit),
    and the refined lower bound holds across the whole parameter set."""
    d_ic = pair.gd.d(ps.ic_orbit)
    members = []
    for pid in arthur_packet(pair, ps):
        wf = geometric_wf(pair, ps, ps.get(pid))
        members.append((pid, wf, wf == d_ic))
    bound = embed(pair, _cuwf_bound(pair, ps))
    lower = []
    for x in sorted(ps, key=lambda x: natural_key(x.id)):
        holds = pair_leq(pair, bound, embed(pair, cuwf(pair, ps, x)))
        lower.append((x.id, holds))
    return JiangReport(ps.ic_orbit, d_ic, tuple(members), tuple(lower))


def check_infl_sum(
    poset: NilpotentPoset, h_art: Coweight, h_lan: Coweight, target: str
) -> bool:
    """Whether (h_art + h_lan)/2 is Weyl-conjugate to half the weighted
    Dynkin coweight of the target orbit."""
    rs = poset.root_system()
    if rs is None:
        raise UnknownLabelError(
            f"group {poset.group_id} carries no root system data"
        )
    h_target = poset.weighted_dynkin(target)
    if h_target is None:
        raise UnknownLabelError(
            f"orbit {target} of {poset.group_id} has no weighted Dynkin data"
        )
    lhs = half_sum(h_art, h_lan)
    rhs = half_sum(h_target, Coweight.of([0] * rs.rank))
    return weyl_conjugate(lhs, rhs, rs)


def infl_sum_witness(
    poset: NilpotentPoset, orbit_art: str, orbit_lan: str, target: str
):
    """Search the Weyl orbit of one coweight for a witness pair.

    Returns (h_art, h_lan) with the first coweight fixed dominant, or
    None when no conjugate sums to the target class.  Fixing one side is
    harmless: conjugating the whole sum moves the witness pair inside
    their Weyl orbits.
    """
    from .rootdata import coweight_orbit

    rs = poset.root_system()
    h1 = poset.weighted_dynkin(orbit_art)
    h2 = poset.weighted_dynkin(orbit_lan)
    ht = poset.weighted_dynkin(target)
    if rs is None or h1 is None or h2 is None or ht is None:
        raise UnknownLabelError("missing weighted Dynkin data for the search")
    target_dom = dominant_rep(ht, rs)
    for w2 in coweight_orbit(h2, rs):
        if dominant_rep(h1 + w2, rs) == target_dom:
            return (h1, w2)
    return None
