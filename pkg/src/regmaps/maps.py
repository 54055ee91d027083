"""Algebraic maps: a finite group with three involutions, and their invariants.

A map is carried by a group G and a triple (r, t, l) of non-identity
involutions with t and l commuting and the triple generating G.  Flags are
the elements of G; vertices, edges and faces are the orbits of <r,t>, <t,l>
and <r,l> under left multiplication, i.e. the right cosets of those
subgroups.  The Euler characteristic comes out of the closed formula

    chi = -|G| (xy - 2x - 2y) / (4xy),      x = |rt|, y = |rl|,

and independently as V + F - E from coset counts; both are exposed and the
package tests that they agree.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from .errors import (
    DegenerateMapWarning,
    DegenerateQuotientError,
    InternalInvariantError,
    MapValidationError,
)
from .groups import (
    FiniteGroup,
    QuotientContext,
    QuotientElement,
    element_order,
    generates,
    normal_closure,
    subgroup_closure,
    triple_isomorphic,
)


@dataclass(frozen=True)
class AlgebraicMap:
    """Validated map; invariants are computed once at construction."""

    group: FiniteGroup
    r: object
    t: object
    l: object
    x: int
    y: int
    chi: int
    orientable: bool
    genus: int

    def triple(self) -> tuple:
        return (self.r, self.t, self.l)

    def __repr__(self) -> str:
        return (
            f"AlgebraicMap({self.group.name}, type=({self.x},{self.y}), "
            f"chi={self.chi}, {'orientable' if self.orientable else 'non-orientable'})"
        )


@dataclass(frozen=True)
class MapInvariants:
    x: int
    y: int
    vertices: int
    edges: int
    faces: int
    chi: int
    orientable: bool
    genus: int


def _exact_div(num: int, den: int, what: str) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise InternalInvariantError(f"{what} is not an integer: {num}/{den}")
    return q


def euler_characteristic_formula(order: int, x: int, y: int) -> int:
    """chi from the closed formula; raises if the division is not exact."""
    return _exact_div(-order * (x * y - 2 * x - 2 * y), 4 * x * y, "euler characteristic")


def validate(
    group: FiniteGroup,
    r,
    t,
    l,
    use_dickson: bool = True,
    check_generation: bool = True,
) -> AlgebraicMap:
    """Check the map axioms for (r, t, l) and return the finished map.

    Left multiplication by a non-identity element is fixed-point-free on the
    group, so involution + commuting t,l + generation are the whole story.
    Degenerate but legal data (t = l, or a type entry below 3) only warns.
    """
    for name, g in (("r", r), ("t", t), ("l", l)):
        if g.is_identity():
            raise MapValidationError(f"{name} is the identity")
        if not (g * g).is_identity():
            raise MapValidationError(f"{name} is not an involution")
    if t * l != l * t:
        raise MapValidationError("t and l do not commute")
    if check_generation and not generates(group, [r, t, l], use_dickson=use_dickson):
        raise MapValidationError("triple does not generate the group")
    if (t * l).is_identity():
        warnings.warn("t*l = 1: edge orbits are degenerate", DegenerateMapWarning)
    x = element_order(r * t)
    y = element_order(r * l)
    if x < 3 or y < 3:
        warnings.warn(f"degenerate type ({x},{y})", DegenerateMapWarning)
    chi = euler_characteristic_formula(group.order, x, y)
    orientable = _orientable(group, r, t, l)
    if chi % 2 != 0 and orientable:
        raise InternalInvariantError("odd Euler characteristic on an orientable map")
    genus = _exact_div(2 - chi, 2, "genus") if orientable else 2 - chi
    if genus < 0:
        raise InternalInvariantError(f"negative genus {genus}")
    return AlgebraicMap(group, r, t, l, x, y, chi, orientable, genus)


def _orientable(group: FiniteGroup, r, t, l) -> bool:
    """Index of the even-word subgroup <tr, rl>: 2 = orientable, 1 = not."""
    sub = subgroup_closure([t * r, r * l], group.identity)
    index, rem = divmod(group.order, len(sub))
    if rem or index not in (1, 2):
        raise InternalInvariantError(f"even-word subgroup has index {group.order}/{len(sub)}")
    return index == 2


def map_type(m: AlgebraicMap) -> tuple[int, int]:
    return (m.x, m.y)


def euler_characteristic(m: AlgebraicMap) -> int:
    return m.chi


def euler_characteristic_by_orbits(m: AlgebraicMap, limit: Optional[int] = None) -> int:
    """V + F - E with the orbit counts read off as subgroup indices."""
    inv = orbit_invariants(m, limit)
    return inv.chi


def orbit_invariants(m: AlgebraicMap, limit: Optional[int] = None) -> MapInvariants:
    order = m.group.order
    m.group.elements(limit)  # enforce the enumeration limit uniformly
    v_sub = subgroup_closure([m.r, m.t], m.group.identity)
    e_sub = subgroup_closure([m.t, m.l], m.group.identity)
    f_sub = subgroup_closure([m.r, m.l], m.group.identity)
    v = _exact_div(order, len(v_sub), "vertex count")
    e = _exact_div(order, len(e_sub), "edge count")
    f = _exact_div(order, len(f_sub), "face count")
    return MapInvariants(m.x, m.y, v, e, f, v + f - e, m.orientable, m.genus)


def dual(m: AlgebraicMap) -> AlgebraicMap:
    """The map with t and l exchanged; the type swaps, chi is unchanged."""
    return AlgebraicMap(
        m.group, m.r, m.l, m.t, m.y, m.x, m.chi, m.orientable, m.genus
    )


def quotient(m: AlgebraicMap, normal: frozenset) -> AlgebraicMap:
    """The induced map on G/N for a normal subgroup N.

    Normality is verified by conjugating N with the triple (which generates
    G).  The quotient group is realised on canonical coset representatives;
    a triple entry that collapses into N is a degeneracy error.
    """
    group = m.group
    nset = frozenset(normal)
    if not any(g.is_identity() for g in nset):
        raise ValueError("normal subgroup must contain the identity")
    for g in m.triple():
        gi = g.inverse()
        for x in nset:
            if g * x * gi not in nset:
                raise ValueError("subgroup is not normal under the map triple")
    order, rem = divmod(group.order, len(nset))
    if rem:
        raise InternalInvariantError("coset count is not an integer")

    rep_of: dict = {}
    reps = []
    for g in group.elements():
        if g in rep_of:
            continue
        coset = sorted((g * x for x in nset), key=lambda e: e.serialize())
        rep = coset[0]
        reps.append(rep)
        for e in coset:
            rep_of[e] = rep
    ctx = QuotientContext(rep_of, rep_of[group.identity])

    def wrap(g):
        return QuotientElement(rep_of[g], ctx)

    qr, qt, ql = wrap(m.r), wrap(m.t), wrap(m.l)
    for name, g in (("r", qr), ("t", qt), ("l", ql)):
        if g.is_identity():
            raise DegenerateQuotientError(f"{name} collapses into the normal subgroup")
    qgroup = FiniteGroup(
        "quotient",
        {"parent": group.name, "index": order},
        wrap(group.identity),
        {"r": qr, "t": qt, "l": ql},
        order,
        enumerator=lambda: (QuotientElement(rep, ctx) for rep in reps),
    )
    return validate(qgroup, qr, qt, ql)


def is_regular_cover(
    m: AlgebraicMap, base: AlgebraicMap, limit: Optional[int] = None
) -> tuple[bool, Optional[tuple]]:
    """Whether m covers ``base`` via some normal subgroup quotient.

    Candidate kernels are normal closures of single elements (which covers
    every kernel the classification needs, cyclic or not).  On success the
    witness is (generator, kernel order).
    """
    ratio, rem = divmod(m.group.order, base.group.order)
    if rem:
        return False, None
    if ratio == 1:
        if triple_isomorphic(m.group, m.triple(), base.group, base.triple(), limit):
            return True, (m.group.identity, 1)
        return False, None
    seen_kernels = set()
    gens = list(m.triple())
    for g in m.group.elements(limit):
        if g.is_identity():
            continue
        kernel = normal_closure(m.group, g, gens)
        if kernel in seen_kernels:
            continue
        seen_kernels.add(kernel)
        if len(kernel) != ratio:
            continue
        try:
            q = quotient(m, kernel)
        except (DegenerateQuotientError, MapValidationError):
            continue
        if triple_isomorphic(q.group, q.triple(), base.group, base.triple(), limit):
            return True, (g, ratio)
    return False, None
