"""Brute-force ground truth: groups, orbit partitions, stabilizers.

Functionals are handled through their value vectors on the algebra basis
(exact and hashable); matrices only serve as action representatives.
Groups come in two modes: filter (scan every matrix and keep the form
preservers, exact at small sizes) and generators (transvections, which
generate the symplectic and odd orthogonal groups; the even orthogonal
group in dimension 4 is the classical exception and stays on filter
mode).  Orbits are BFS closures under the action, canonicalized so that
set membership is exact, and each nilpotent orbit is reported with its
size, stabilizer order, and classifier label.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import centralizers as cz
from . import classical as cl
from . import form_modules as fm
from . import isometry as iso
from . import linalg as la
from . import odd_split as od
from .finite_field import Field

FILTER_LIMIT = 1 << 18


@dataclass
class FiniteGroup:
    kind: str
    n: int
    field: Field
    elements: list | None = None
    generators: list | None = None
    order: int | None = None
    _pairs: list | None = dc_field(default=None, repr=False)

    def acting_set(self) -> list:
        return self.generators if self.generators is not None else self.elements


@dataclass
class OrbitReport:
    representative: np.ndarray
    orbit_size: int
    stabilizer_order: int | None
    label: object = None

    def label_json(self):
        if self.label is None:
            return None
        if isinstance(self.label, od.OddLabel):
            return od.label_to_json(self.label)
        return fm.blocks_to_json(self.label)


# ----------------------------------------------------------------------
# value-vector keys


def functional_key(space: cl.Space, X: np.ndarray) -> int:
    "The functional as one integer: packed values on the algebra basis."
    e = space.field.e
    key = 0
    for i, v in enumerate(space.pairing_vector(X)):
        key |= v << (e * i)
    return key


def key_values(space: cl.Space, key: int) -> np.ndarray:
    e = space.field.e
    mask = (1 << e) - 1
    return np.array([(key >> (e * i)) & mask
                     for i in range(space.dim_algebra)], dtype=np.uint8)


# ----------------------------------------------------------------------
# group enumeration


_group_memo: dict = {}


def _all_matrices(q: int, d: int):
    "Every d x d matrix over the field with q elements, one at a time."
    total = q ** (d * d)
    for idx in range(total):
        flat = np.zeros(d * d, dtype=np.uint8)
        rem = idx
        for k in range(d * d):
            rem, digit = divmod(rem, q)
            flat[k] = digit
        yield flat.reshape(d, d)


def _transvections(space: cl.Space) -> list:
    F = space.field
    out = []
    seen = set()
    for v in _vectors(F.q, space.d):
        if not v.any():
            continue
        if space.kind == "sp":
            for c in range(1, F.q):
                t = cl.symplectic_transvection(space, v, c)
                b = t.tobytes()
                if b not in seen:
                    seen.add(b)
                    out.append(t)
        else:
            if space.alpha(v) == 0:
                continue
            t = cl.orthogonal_transvection(space, v)
            b = t.tobytes()
            if b not in seen:
                seen.add(b)
                out.append(t)
    return out


def _vectors(q: int, d: int):
    for idx in range(q ** d):
        vec = np.zeros(d, dtype=np.uint8)
        rem = idx
        for k in range(d):
            rem, digit = divmod(rem, q)
            vec[k] = digit
        yield vec


def enumerate_group(space: cl.Space, mode: str = "auto") -> FiniteGroup:
    """The finite group of the space, by filter scan or by generators.

    Filter mode is exact and bounded by FILTER_LIMIT total matrices; the
    even orthogonal kind has no transvection generating set in rank 2, so
    it never falls back to generators.  Symplectic and odd orthogonal
    groups always carry their transvections, which the orbit walks prefer
    over full element lists.
    """
    memo_key = (space.kind, space.n, space.field.e, mode)
    if memo_key in _group_memo:
        return _group_memo[memo_key]
    F = space.field
    total = F.q ** (space.d * space.d)
    small = total <= 1 << 16 or (space.kind == "so-even"
                                 and total <= FILTER_LIMIT)
    use_filter = mode == "filter" or (mode == "auto" and small)
    gens = None if space.kind == "so-even" else _transvections(space)
    if use_filter:
        if total > FILTER_LIMIT:
            raise ValueError(f"filter mode over {total} matrices refused")
        elements = [g.copy() for g in _all_matrices(F.q, space.d)
                    if cl.preserves_form(space, g)]
        grp = FiniteGroup(space.kind, space.n, F, elements=elements,
                          generators=gens, order=len(elements))
    elif space.kind == "so-even":
        raise ValueError("even orthogonal groups support only filter mode")
    else:
        grp = FiniteGroup(space.kind, space.n, F, generators=gens,
                          order=cz.group_order(space.n, F.q))
    _group_memo[memo_key] = grp
    return grp


def multiply_closure(space: cl.Space, mats, cap: int = 10 ** 6) -> list:
    "Closure of `mats` under multiplication, as a list of matrices."
    F = space.field
    seen = {la.identity(space.d).tobytes()}
    out = [la.identity(space.d)]
    frontier = list(out)
    while frontier:
        g = frontier.pop()
        for h in mats:
            gh = la.mat_mul(F, g, h)
            b = gh.tobytes()
            if b not in seen:
                if len(seen) >= cap:
                    raise RuntimeError("closure exceeded the cap")
                seen.add(b)
                out.append(gh)
                frontier.append(gh)
    return out


# ----------------------------------------------------------------------
# coadjoint orbits


def _action_reps(space: cl.Space, group: FiniteGroup) -> list:
    if group._pairs is None:
        F = space.field
        group._pairs = [(g, la.inverse(F, g)) for g in group.acting_set()]
    return group._pairs


def coadjoint_orbit(space: cl.Space, X: np.ndarray,
                    group: FiniteGroup) -> dict[int, np.ndarray]:
    "Orbit of the functional: key -> canonical representative matrix."
    F = space.field
    X = space.canonical_rep(X)
    orbit = {functional_key(space, X): X}
    frontier = [X]
    pairs = _action_reps(space, group)
    while frontier:
        Y = frontier.pop()
        for g, g_inv in pairs:
            Z = space.canonical_rep(
                la.mat_mul(F, la.mat_mul(F, g, Y), g_inv))
            k = functional_key(space, Z)
            if k not in orbit:
                orbit[k] = Z
                frontier.append(Z)
    return orbit


def _classify(space: cl.Space, X: np.ndarray):
    if space.kind == "sp":
        return fm.classify_fq(fm.build_module(space, X))
    if space.kind == "so-odd":
        return od.rational_odd_label(od.split_odd_functional(space, X))
    return None


def all_nilpotent_orbits(space: cl.Space,
                         group: FiniteGroup | None = None,
                         classify: bool = True) -> list[OrbitReport]:
    """Every nilpotent coadjoint orbit over the space's own field.

    Nilpotence uses the definition: the orbit must contain a functional
    vanishing on the fixed Borel.  The whole dual is partitioned, so the
    run is exhaustive; reports are sorted by size and label text.
    """
    if group is None:
        group = enumerate_group(space)
    seen: set[int] = set()
    reports = []
    for idx in range(space.field.q ** space.dim_algebra):
        if idx in seen:
            continue
        X = space.dual_from_values(key_values(space, idx))
        orbit = coadjoint_orbit(space, X, group)
        seen.update(orbit)
        if not any(cl.vanishes_on_borel(space, Y) for Y in orbit.values()):
            continue
        rep = orbit[min(orbit)]
        stab = group.order // len(orbit) if group.order else None
        reports.append(OrbitReport(
            representative=rep,
            orbit_size=len(orbit),
            stabilizer_order=stab,
            label=_classify(space, rep) if classify else None))
    reports.sort(key=lambda r: (r.orbit_size, str(r.label)))
    return reports


def direct_stabilizer_order(space: cl.Space, X: np.ndarray,
                            group: FiniteGroup) -> int:
    "Count of group elements fixing the functional; needs element mode."
    if group.elements is None:
        raise ValueError("direct stabilizer needs an element listing")
    F = space.field
    key = functional_key(space, X)
    count = 0
    for g in group.elements:
        moved = la.mat_mul(F, la.mat_mul(F, g, X), la.inverse(F, g))
        if functional_key(space, moved) == key:
            count += 1
    return count


# ----------------------------------------------------------------------
# adjoint side (for the even orthogonal transport checks)


def adjoint_nilpotent_orbit_count(space: cl.Space,
                                  group: FiniteGroup | None = None) -> int:
    "Orbit count of nilpotent algebra elements under conjugation."
    if group is None:
        group = enumerate_group(space)
    F = space.field
    basis = space.lie_basis()
    seen = set()
    count = 0
    pairs = _action_reps(space, group)
    for idx in range(F.q ** space.dim_algebra):
        coeffs = key_values(space, idx)
        T = la.zeros(space.d, space.d)
        for c, b in zip(coeffs, basis):
            T ^= la.scale(F, int(c), b)
        b0 = T.tobytes()
        if b0 in seen or not la.is_nilpotent(F, T):
            continue
        count += 1
        frontier = [T]
        seen.add(b0)
        while frontier:
            Y = frontier.pop()
            for g, g_inv in pairs:
                Z = la.mat_mul(F, la.mat_mul(F, g, Y), g_inv)
                bz = Z.tobytes()
                if bz not in seen:
                    seen.add(bz)
                    frontier.append(Z)
    return count


# ----------------------------------------------------------------------
# module equivalence with a verified witness


def verify_module_map(src: fm.FormModule, dst: fm.FormModule,
                      C: np.ndarray) -> bool:
    "Check that the rows of C are images defining an equivalence src -> dst."
    F = src.field
    if la.rank(F, C) != src.dim:
        return False
    if not np.array_equal(
            la.mat_mul(F, la.mat_mul(F, C, dst.gram), C.T), src.gram):
        return False
    if not np.array_equal(iso.quad_values(F, dst._U, C), src.quad):
        return False
    return np.array_equal(la.mat_mul(F, src.op.T, C),
                          la.mat_mul(F, C, dst.op.T))


def isometry_equivalent(mod1: fm.FormModule,
                        mod2: fm.FormModule) -> np.ndarray | None:
    """A verified equivalence witness between two form modules, or None.

    Both modules are mapped onto the normal form of their label; the
    witness is the composite, re-checked against every structure before
    being returned.
    """
    if (mod1.kind != mod2.kind or mod1.field is not mod2.field
            or mod1.dim != mod2.dim):
        return None
    classify = fm.classify_fq if mod1.kind == "sp" else fm.classify_orth_fq
    lab1 = classify(mod1)
    if lab1 != classify(mod2):
        return None
    nf, _ = fm.build_normal_form(lab1, mod1.field, kind=mod1.kind)
    gens = fm.normal_form_generators(lab1)
    C1 = iso.find_module_map(mod1.field, nf.forms(), gens, mod1.forms())
    C2 = iso.find_module_map(mod2.field, nf.forms(), gens, mod2.forms())
    if C1 is None or C2 is None:
        raise RuntimeError("normal form stopped matching its own label")
    C = la.mat_mul(mod1.field, la.inverse(mod1.field, C1), C2)
    if not verify_module_map(mod1, mod2, C):
        raise RuntimeError("composed witness failed verification")
    return C


# ----------------------------------------------------------------------
# JSON lines


def report_to_json(report: OrbitReport, space: cl.Space) -> dict:
    return {"kind": space.kind,
            "n": space.n,
            "q": space.field.q,
            "values": [int(v) for v in
                       space.pairing_vector(report.representative)],
            "orbit_size": report.orbit_size,
            "stabilizer_order": report.stabilizer_order,
            "label": report.label_json()}
