"""Bundle format: loading, validation, and serialization of group data.

A bundle is a JSON document carrying one group's orbit poset (as covering
pairs), canonical-quotient class lists, the Sommers duality table, optional
weighted Dynkin and dimension data, and optional parameter sets.  Loading
is strict: structural problems raise SchemaError, semantic problems raise
BundleValidationError naming the violated invariant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .duality import (
    DualPair,
    achar_dual,
    all_bar_classes,
    embed,
    pair_leq,
    sommers_dual,
)
from .errors import (
    BundleValidationError,
    NonUniqueCoverError,
    OrbitDualityError,
    SchemaError,
    UnknownLabelError,
)
from .orbits import BundlePoset
from .packets import Parameter, ParameterSet
from .rootdata import Coweight, positive_roots, root_pairing, root_system

FORMAT_VERSION = 1


@dataclass(frozen=True)
class OrbitRecord:
    label: str
    special: bool
    dim: int | None = None
    weighted_dynkin: tuple[int, ...] | None = None


@dataclass(frozen=True)
class GroupBundle:
    group_type: str
    group_rank: int
    node_order: tuple[int, ...]
    dual_group: str
    orbits: tuple[OrbitRecord, ...]
    closure: tuple[tuple[str, str], ...]
    bar_a: dict
    d_s: dict
    parameter_sets: tuple[ParameterSet, ...]
    provenance: dict
    conjectural: dict | None = None
    format_version: int = FORMAT_VERSION

    def labels(self) -> tuple[str, ...]:
        return tuple(o.label for o in self.orbits)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"{mark} {c.name}"
            if c.details:
                line += f": {c.details}"
            lines.append(line)
        lines.append(
            f"{'PASS' if self.passed else 'FAIL'} "
            f"({sum(c.passed for c in self.checks)}/{len(self.checks)} checks)"
        )
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "details": c.details}
                for c in self.checks
            ],
        }


# -- parsing -----------------------------------------------------------------

def _reject_duplicate_keys(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise SchemaError(f"duplicate key {key!r} in bundle document")
        seen[key] = value
    return seen


def _need(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise SchemaError(f"missing field {key!r} in {where}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaError(
            f"field {key!r} in {where} has type {type(value).__name__}"
        )
    return value


def parse_bundle(source) -> GroupBundle:
    """Parse a bundle document without running the invariant checks.

    Accepts a path, bytes, a JSON string, or a readable file object.
    """
    if hasattr(source, "read"):
        text = source.read()
    elif isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str) and source.lstrip()[:1] in ("{", "["):
        text = source
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed bundle document: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("bundle document must be a JSON object")

    version = _need(doc, "format_version", int, "bundle")
    if version != FORMAT_VERSION:
        raise SchemaError(f"unsupported format_version {version}")
    group = _need(doc, "group", dict, "bundle")
    gtype = _need(group, "type", str, "group")
    grank = _need(group, "rank", int, "group")
    node_order = tuple(group.get("node_order", range(1, grank + 1)))
    if sorted(node_order) != list(range(1, grank + 1)):
        raise SchemaError(f"node_order {node_order} is not a permutation")
    dual_group = _need(doc, "dual_group", str, "bundle")

    orbit_docs = _need(doc, "orbits", list, "bundle")
    orbits = []
    labels = set()
    for od in orbit_docs:
        label = _need(od, "label", str, "orbit record")
        if label in labels:
            raise SchemaError(f"duplicate orbit label {label!r}")
        labels.add(label)
        special = _need(od, "special", bool, f"orbit {label}")
        dim = od.get("dim")
        if dim is not None and not isinstance(dim, int):
            raise SchemaError(f"orbit {label} has non-integer dim")
        wd = od.get("weighted_dynkin")
        if wd is not None:
            if not isinstance(wd, list) or len(wd) != grank:
                raise SchemaError(
                    f"orbit {label} weighted_dynkin must have {grank} entries"
                )
            wd = tuple(int(x) for x in wd)
        orbits.append(OrbitRecord(label, special, dim, wd))
    if not orbits:
        raise SchemaError("bundle has no orbits")

    closure = []
    for pair in _need(doc, "closure", list, "bundle"):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise SchemaError(f"closure entry {pair!r} is not a pair")
        lo, hi = pair
        for lab in (lo, hi):
            if lab not in labels:
                raise SchemaError(f"closure references unknown orbit {lab!r}")
        closure.append((lo, hi))

    bar_a = {}
    for orbit, classes in _need(doc, "bar_a", dict, "bundle").items():
        if orbit not in labels:
            raise SchemaError(f"bar_a references unknown orbit {orbit!r}")
        if not isinstance(classes, list) or not all(
            isinstance(c, str) for c in classes
        ):
            raise SchemaError(f"bar_a[{orbit!r}] must be a list of strings")
        if len(set(classes)) != len(classes):
            raise SchemaError(f"bar_a[{orbit!r}] has duplicate classes")
        bar_a[orbit] = tuple(classes)

    d_s = {}
    for orbit, table in _need(doc, "d_s", dict, "bundle").items():
        if orbit not in labels:
            raise SchemaError(f"d_s references unknown orbit {orbit!r}")
        if not isinstance(table, dict):
            raise SchemaError(f"d_s[{orbit!r}] must be an object")
        d_s[orbit] = dict(table)

    provenance = _need(doc, "provenance", dict, "bundle")
    if not str(provenance.get("d_s", "")).strip():
        raise SchemaError("provenance note for d_s is mandatory")

    param_sets = []
    for ps_doc in doc.get("parameter_sets", []):
        ic = _need(ps_doc, "ic_orbit", str, "parameter set")
        if ic not in labels:
            raise SchemaError(f"parameter set references unknown orbit {ic!r}")
        params = []
        ids = set()
        for pd in _need(ps_doc, "parameters", list, f"parameter set {ic}"):
            pid = _need(pd, "id", str, "parameter")
            if pid in ids:
                raise SchemaError(f"duplicate parameter id {pid!r}")
            ids.add(pid)
            n_orbit = _need(pd, "n_orbit", str, f"parameter {pid}")
            if n_orbit not in labels:
                raise SchemaError(
                    f"parameter {pid} references unknown orbit {n_orbit!r}"
                )
            params.append(
                Parameter(
                    id=pid,
                    n_orbit=n_orbit,
                    rho=str(pd.get("rho", "")),
                    iwahori=bool(pd.get("iwahori", True)),
                    unitary=pd.get("unitary"),
                    az_partner=_need(pd, "az", str, f"parameter {pid}"),
                )
            )
        param_sets.append(ParameterSet(ic, tuple(params)))
    if param_sets and not str(provenance.get("parameter_sets", "")).strip():
        raise SchemaError("provenance note for parameter_sets is mandatory")

    return GroupBundle(
        group_type=gtype,
        group_rank=grank,
        node_order=node_order,
        dual_group=dual_group,
        orbits=tuple(orbits),
        closure=tuple(closure),
        bar_a=bar_a,
        d_s=d_s,
        parameter_sets=tuple(param_sets),
        provenance=dict(provenance),
        conjectural=doc.get("conjectural_decomposition"),
        format_version=version,
    )


# -- poset construction --------------------------------------------------------

def bundle_poset(bundle: GroupBundle) -> BundlePoset:
    """Build the orbit poset; self-dual bundles get themselves attached."""
    try:
        rs = root_system(bundle.group_type, bundle.group_rank)
    except ValueError:
        rs = None
    dynkin = {}
    for rec in bundle.orbits:
        if rec.weighted_dynkin is not None:
            coords = [0] * bundle.group_rank
            for i, node in enumerate(bundle.node_order):
                coords[node - 1] = rec.weighted_dynkin[i]
            dynkin[rec.label] = Coweight.of(coords)
    ds_flat = {
        (orbit, cls): target
        for orbit, table in bundle.d_s.items()
        for cls, target in table.items()
    }
    gid = bundle.group_type
    if not gid[-1].isdigit():
        gid = f"{gid}{bundle.group_rank}"
    poset = BundlePoset(
        group_id=gid,
        labels=bundle.labels(),
        covers=bundle.closure,
        bar_a=bundle.bar_a,
        ds=ds_flat,
        dims={o.label: o.dim for o in bundle.orbits if o.dim is not None},
        dynkin=dynkin,
        rs=rs,
        special_flags={o.label: o.special for o in bundle.orbits},
    )
    if bundle.dual_group == "self":
        poset.attach_dual(poset)
    return poset


def dual_pair(bundle: GroupBundle, dual_bundle: GroupBundle | None = None) -> DualPair:
    g = bundle_poset(bundle)
    if dual_bundle is None:
        if bundle.dual_group != "self":
            raise SchemaError(
                f"bundle declares dual group {bundle.dual_group!r}; "
                f"a dual bundle is required"
            )
        return DualPair(g, g)
    gd = bundle_poset(dual_bundle)
    g.attach_dual(gd)
    gd.attach_dual(g)
    return DualPair(g, gd)


def parameter_set(bundle: GroupBundle, ic_orbit: str) -> ParameterSet:
    for ps in bundle.parameter_sets:
        if ps.ic_orbit == ic_orbit:
            return ps
    raise UnknownLabelError(f"bundle has no parameter set at {ic_orbit!r}")


# -- validation ----------------------------------------------------------------

def _brief(items, limit=4) -> str:
    items = list(items)
    shown = "; ".join(items[:limit])
    if len(items) > limit:
        shown += f"; ... ({len(items)} total)"
    return shown


def _check_closure_order(bundle, poset):
    problems = []
    for a in poset.labels:
        for b in poset.labels:
            if a < b and poset.leq(a, b) and poset.leq(b, a):
                problems.append(
                    f"antisymmetry violated: {a} <= {b} and {b} <= {a}"
                )
    if problems:
        return CheckResult("closure_order", False, _brief(problems))
    try:
        zero = poset.zero()
        reg = poset.regular()
    except NonUniqueCoverError as exc:
        return CheckResult("closure_order", False, str(exc))
    if zero != "0":
        return CheckResult(
            "closure_order", False, f"minimum orbit is {zero!r}, expected '0'"
        )
    for lab, role in ((zero, "zero"), (reg, "regular")):
        if not poset.special_flags.get(lab, False):
            return CheckResult(
                "closure_order", False, f"{role} orbit {lab} is not flagged special"
            )
    return CheckResult(
        "closure_order", True, f"minimum {zero}, maximum {reg}"
    )


def _declared_classes(bundle, label):
    return bundle.bar_a.get(label, ("1",))


def _check_bar_classes(bundle, poset):
    for label in poset.labels:
        classes = _declared_classes(bundle, label)
        if "1" not in classes:
            return CheckResult(
                "bar_classes", False, f"orbit {label} lacks the trivial class"
            )
    return CheckResult("bar_classes", True, "")


def _check_ds_table(bundle, poset, dual_labels):
    missing = []
    for label in poset.labels:
        for cls in _declared_classes(bundle, label):
            if cls not in bundle.d_s.get(label, {}):
                missing.append(f"({label}, {cls})")
    if missing:
        return CheckResult(
            "ds_table", False, "not total: missing " + _brief(missing)
        )
    extra = [
        f"({o}, {c})"
        for o, table in bundle.d_s.items()
        for c in table
        if c not in _declared_classes(bundle, o)
    ]
    if extra:
        return CheckResult(
            "ds_table", False, "entries for undeclared classes " + _brief(extra)
        )
    if dual_labels is not None:
        bad = [
            f"({o}, {c}) -> {t}"
            for o, table in bundle.d_s.items()
            for c, t in table.items()
            if t not in dual_labels
        ]
        if bad:
            return CheckResult(
                "ds_table", False, "values outside dual group: " + _brief(bad)
            )
        image = {t for table in bundle.d_s.values() for t in table.values()}
        missed = sorted(set(dual_labels) - image)
        if missed:
            return CheckResult(
                "ds_table", False, "not surjective, missing " + _brief(missed)
            )
    return CheckResult("ds_table", True, "total and surjective")


def _check_d_duality(poset, dual):
    bad_cube = [
        a for a in poset.labels
        if poset.d(dual.d(poset.d(a))) != poset.d(a)
    ]
    if bad_cube:
        return CheckResult(
            "d_duality", False, "d^3 != d at " + _brief(bad_cube)
        )
    bad_rev = [
        f"{a} <= {b}"
        for a in poset.labels
        for b in poset.labels
        if poset.leq(a, b) and not dual.leq(poset.d(b), poset.d(a))
    ]
    if bad_rev:
        return CheckResult(
            "d_duality", False, "order reversal fails at " + _brief(bad_rev)
        )
    return CheckResult("d_duality", True, "d^3 = d and d order-reversing")


def _check_special_flags(poset, dual):
    bad = []
    for a in poset.labels:
        computed = dual.d(poset.d(a)) == a
        if computed != poset.special_flags.get(a, False):
            bad.append(a)
    if bad:
        return CheckResult(
            "special_flags",
            False,
            "flags disagree with d∘d fixed points at " + _brief(bad),
        )
    return CheckResult("special_flags", True, "")


def _check_weighted_dynkin(poset):
    bad = []
    for label in poset.labels:
        w = poset.weighted_dynkin(label)
        if w is None:
            continue
        coords = [c // 2 for c in w.twice]
        if any(c not in (0, 1, 2) for c in coords) or not w.is_integral:
            bad.append(f"{label}: coordinates outside {{0,1,2}}")
        elif any(c < 0 for c in coords):
            bad.append(f"{label}: not dominant")
    if bad:
        return CheckResult("weighted_dynkin", False, _brief(bad))
    return CheckResult("weighted_dynkin", True, "")


def _check_dynkin_dims(poset):
    rs = poset.root_system()
    if rs is None:
        return CheckResult("dynkin_dims", True, "skipped: no root system")
    pos = positive_roots(rs)
    dim_g = 2 * len(pos) + rs.rank
    bad = []
    for label in poset.labels:
        w = poset.weighted_dynkin(label)
        d = poset.dim(label)
        if w is None or d is None:
            continue
        g0 = sum(1 for r in pos if root_pairing(r, w) == 0)
        g1 = sum(1 for r in pos if root_pairing(r, w) == 2)
        expect = dim_g - (2 * g0 + rs.rank) - g1
        if expect != d:
            bad.append(f"{label}: dim {d} vs {expect} from weighted Dynkin")
    if bad:
        return CheckResult("dynkin_dims", False, _brief(bad))
    return CheckResult("dynkin_dims", True, "")


def _check_az_links(bundle, poset):
    for ps in bundle.parameter_sets:
        ids = {x.id for x in ps.params}
        for x in ps.params:
            if x.az_partner not in ids:
                return CheckResult(
                    "az_links",
                    False,
                    f"{x.id} links to missing partner {x.az_partner}",
                )
        for x in ps.params:
            if ps.get(x.az_partner).az_partner != x.id:
                return CheckResult(
                    "az_links",
                    False,
                    f"involution broken at {x.id} -> {x.az_partner} -> "
                    f"{ps.get(x.az_partner).az_partner}",
                )
    return CheckResult(
        "az_links", True, "involution; ic_orbit shared per parameter set"
    )


def _check_parameter_orbits(bundle, poset):
    bad = []
    for ps in bundle.parameter_sets:
        for x in ps.params:
            if not poset.leq(x.n_orbit, ps.ic_orbit):
                bad.append(f"{x.id}: {x.n_orbit} not below {ps.ic_orbit}")
    if bad:
        return CheckResult("parameter_orbits", False, _brief(bad))
    return CheckResult("parameter_orbits", True, "")


def _check_duality_identities(pair: DualPair):
    try:
        return _duality_identity_body(pair)
    except OrbitDualityError as exc:
        return CheckResult("duality_identities", False, str(exc))


def _duality_identity_body(pair: DualPair):
    seen = {}
    for bc in all_bar_classes(pair.g):
        img = embed(pair, bc)
        if img in seen:
            return CheckResult(
                "duality_identities",
                False,
                f"embedding collision: {seen[img]} and {bc} both map to {img}",
            )
        seen[img] = bc
    for bc in all_bar_classes(pair.g):
        once = achar_dual(pair, bc)
        if sommers_dual(pair, bc) != once[0]:
            return CheckResult(
                "duality_identities",
                False,
                f"pr1 of the refined dual differs from the Sommers image at {bc}",
            )
        thrice = achar_dual(pair, achar_dual(pair.flip(), once))
        if thrice != once:
            return CheckResult(
                "duality_identities", False, f"D^3 != D at {bc}"
            )
    classes = all_bar_classes(pair.g)
    for x in classes:
        for y in classes:
            if pair_leq(pair, embed(pair, x), embed(pair, y)):
                dx, dy = achar_dual(pair, x), achar_dual(pair, y)
                if not pair_leq(
                    pair.flip(), embed(pair.flip(), dy), embed(pair.flip(), dx)
                ):
                    return CheckResult(
                        "duality_identities",
                        False,
                        f"refined duality not order-reversing on {x} <= {y}",
                    )
    return CheckResult(
        "duality_identities", True, "embedding injective, D^3 = D, pr1∘D = d_S"
    )


def validate_bundle(
    bundle: GroupBundle, dual_bundle: GroupBundle | None = None
) -> ValidationReport:
    """Run every invariant check and return the full report."""
    poset = bundle_poset(bundle)
    self_dual = bundle.dual_group == "self"
    if dual_bundle is not None:
        dual_poset = bundle_poset(dual_bundle)
        poset.attach_dual(dual_poset)
        dual_poset.attach_dual(poset)
    elif self_dual:
        dual_poset = poset
    else:
        dual_poset = None

    checks = [
        _check_closure_order(bundle, poset),
        _check_bar_classes(bundle, poset),
        _check_ds_table(
            bundle, poset, dual_poset.labels if dual_poset is not None else None
        ),
        _check_weighted_dynkin(poset),
        _check_dynkin_dims(poset),
        _check_az_links(bundle, poset),
        _check_parameter_orbits(bundle, poset),
    ]
    if dual_poset is None:
        checks.append(
            CheckResult("d_duality", True, "skipped: no dual-group data")
        )
    elif not (checks[0].passed and checks[2].passed):
        checks.append(
            CheckResult("d_duality", False, "skipped: prerequisite checks failed")
        )
    else:
        checks.append(_check_d_duality(poset, dual_poset))
        checks.append(_check_special_flags(poset, dual_poset))
        if checks[-1].passed and checks[-2].passed:
            checks.append(_check_duality_identities(DualPair(poset, dual_poset)))
    return ValidationReport(tuple(checks))


def load_bundle(source, dual_bundle: GroupBundle | None = None) -> GroupBundle:
    """Parse and fully validate a bundle; raise on the first failure."""
    bundle = parse_bundle(source)
    report = validate_bundle(bundle, dual_bundle)
    if not report.passed:
        raise BundleValidationError(report)
    return bundle


# -- serialization ---------------------------------------------------------------

def bundle_to_dict(bundle: GroupBundle) -> dict:
    doc = {
        "format_version": bundle.format_version,
        "group": {
            "type": bundle.group_type,
            "rank": bundle.group_rank,
            "node_order": list(bundle.node_order),
        },
        "dual_group": bundle.dual_group,
        "orbits": [
            {
                "label": o.label,
                "special": o.special,
                **({"dim": o.dim} if o.dim is not None else {}),
                **(
                    {"weighted_dynkin": list(o.weighted_dynkin)}
                    if o.weighted_dynkin is not None
                    else {}
                ),
            }
            for o in bundle.orbits
        ],
        "closure": [list(p) for p in bundle.closure],
        "bar_a": {o: list(cs) for o, cs in bundle.bar_a.items()},
        "d_s": {o: dict(t) for o, t in bundle.d_s.items()},
        "provenance": dict(bundle.provenance),
    }
    if bundle.parameter_sets:
        doc["parameter_sets"] = [
            {
                "ic_orbit": ps.ic_orbit,
                "parameters": [
                    {
                        "id": x.id,
                        "n_orbit": x.n_orbit,
                        "rho": x.rho,
                        "iwahori": x.iwahori,
                        **(
                            {"unitary": x.unitary}
                            if x.unitary is not None
                            else {}
                        ),
                        "az": x.az_partner,
                    }
                    for x in ps.params
                ],
            }
            for ps in bundle.parameter_sets
        ]
    if bundle.conjectural is not None:
        doc["conjectural_decomposition"] = bundle.conjectural
    return doc


def serialize_bundle(bundle: GroupBundle) -> str:
    return json.dumps(bundle_to_dict(bundle), indent=2, sort_keys=True) + "\n"


def builtin_bundle_text(name: str) -> str:
    ref = resources.files("orbitduality").joinpath(f"bundles/{name}.json")
    return ref.read_text(encoding="utf-8")


def load_builtin_bundle(name: str = "f4") -> GroupBundle:
    return load_bundle(builtin_bundle_text(name))
