"""Constructors for the explicit group and map families of the classification.

The three solvable families and their maps:

  * g1(j, k) = D_2j x D_2k, reflections a, b and c, d per factor,
    map m1 = (bc, a, d), type (2j, 2k);
  * g2(x, n, p) = (Z_p x Z_p) x| D_2n with c, d acting by
    a^c = a^-1, b^c = a^x b, a^d = b, b^d = a, for x in s_set(n, p),
    map m2 = (c, ab(cd)^(n/2), d), type (2p, n);
  * g3(u) = (Z_2 x Z_2) x| D_2u with a^c = b, b^c = a, a^d = a, b^d = ab,
    for u = 3 (mod 6), map m3 = (c, d, a), type (u, 4).

Projective families PSL(2, f) / PGL(2, f) over an odd prime f >= 5, and the
cyclic extension Z_d x| PGL(2, f) in which PSL fixes Z_d pointwise and the
outer coset inverts it.  ``lift_map`` turns a PGL map whose first two
involutions lie outside PSL and whose third lies inside into a map of type
(d*m, n) on the extension.
"""

from __future__ import annotations

from math import gcd
from typing import Optional

from .errors import MapValidationError
from .fields import check_odd_prime, is_prime, s_set
from .groups import (
    CyclicElement,
    DihedralMatrixAction,
    FiniteGroup,
    InversionAction,
    PairElement,
    ProjectiveElement,
    SemiElement,
    cyclic_group,
    dihedral_group,
    element_order,
    generates,
)
from .maps import AlgebraicMap, validate


def build_g1(j: int, k: int) -> FiniteGroup:
    """Direct product of two dihedral groups of orders 2j and 2k, j, k odd."""
    for v in (j, k):
        if v < 3 or v % 2 == 0:
            raise ValueError(f"g1 parameters must be odd and >= 3, got {v}")
    dj, dk = dihedral_group(j), dihedral_group(k)
    gens = {
        "a": PairElement(dj.generators["c"], dk.identity),
        "b": PairElement(dj.generators["d"], dk.identity),
        "c": PairElement(dj.identity, dk.generators["c"]),
        "d": PairElement(dj.identity, dk.generators["d"]),
    }
    return FiniteGroup(
        "g1",
        {"j": j, "k": k},
        PairElement(dj.identity, dk.identity),
        gens,
        4 * j * k,
        enumerator=lambda: (
            PairElement(u, v) for u in dj.elements() for v in dk.elements()
        ),
    )


def build_m1(j: int, k: int) -> AlgebraicMap:
    g = build_g1(j, k)
    a, b, c, d = (g.generators[x] for x in "abcd")
    return validate(g, b * c, a, d)


def _g2_action(x: int, n: int, p: int) -> DihedralMatrixAction:
    # columns are the conjugation images of a and b under c and d
    return DihedralMatrixAction(
        p, n, c_images=((-1, 0), (x, 1)), d_images=((0, 1), (1, 0))
    )


def build_g2(x: int, n: int, p: int) -> FiniteGroup:
    """(Z_p x Z_p) x| D_2n for x in s_set(n, p); order 2 n p^2."""
    check_odd_prime(p)
    if n < 4 or n % 2:
        raise ValueError(f"g2 needs an even n >= 4, got {n}")
    if x % p not in s_set(n, p).members:
        raise ValueError(f"x = {x} is not in s_set({n}, {p})")
    x %= p
    action = _g2_action(x, n, p)
    dn = dihedral_group(n)
    zero = PairElement(CyclicElement(0, p), CyclicElement(0, p))

    def vec(i: int, jj: int) -> PairElement:
        return PairElement(CyclicElement(i, p), CyclicElement(jj, p))

    gens = {
        "a": SemiElement(vec(1, 0), dn.identity, action),
        "b": SemiElement(vec(0, 1), dn.identity, action),
        "c": SemiElement(zero, dn.generators["c"], action),
        "d": SemiElement(zero, dn.generators["d"], action),
    }
    return FiniteGroup(
        "g2",
        {"x": x, "n": n, "p": p},
        SemiElement(zero, dn.identity, action),
        gens,
        2 * n * p * p,
        enumerator=lambda: (
            SemiElement(vec(i, jj), w, action)
            for i in range(p)
            for jj in range(p)
            for w in dn.elements()
        ),
    )


def build_m2(x: int, n: int, p: int) -> AlgebraicMap:
    g = build_g2(x, n, p)
    a, b, c, d = (g.generators[s] for s in "abcd")
    cd = c * d
    half = cd
    for _ in range(n // 2 - 1):
        half = half * cd
    t = a * b * half
    return validate(g, c, t, d)


def build_g3(u: int) -> FiniteGroup:
    """(Z_2 x Z_2) x| D_2u for u = 3 (mod 6); order 8u."""
    if u % 6 != 3:
        raise ValueError(f"g3 needs u = 3 (mod 6), got {u}")
    action = DihedralMatrixAction(
        2, u, c_images=((0, 1), (1, 0)), d_images=((1, 0), (1, 1))
    )
    du = dihedral_group(u)
    zero = PairElement(CyclicElement(0, 2), CyclicElement(0, 2))

    def vec(i: int, jj: int) -> PairElement:
        return PairElement(CyclicElement(i, 2), CyclicElement(jj, 2))

    gens = {
        "a": SemiElement(vec(1, 0), du.identity, action),
        "b": SemiElement(vec(0, 1), du.identity, action),
        "c": SemiElement(zero, du.generators["c"], action),
        "d": SemiElement(zero, du.generators["d"], action),
    }
    return FiniteGroup(
        "g3",
        {"u": u},
        SemiElement(zero, du.identity, action),
        gens,
        8 * u,
        enumerator=lambda: (
            SemiElement(vec(i, jj), w, action)
            for i in range(2)
            for jj in range(2)
            for w in du.elements()
        ),
    )


def build_m3(u: int) -> AlgebraicMap:
    g = build_g3(u)
    a, c, d = g.generators["a"], g.generators["c"], g.generators["d"]
    return validate(g, c, d, a)


# ---------------------------------------------------------------------------
# projective families
# ---------------------------------------------------------------------------


def _check_projective_prime(f: int) -> None:
    if f < 5 or not is_prime(f):
        raise ValueError(f"projective families need an odd prime f >= 5, got {f}")


def _pgl_enumerator(f: int):
    def run():
        for b in range(f):
            for c in range(f):
                bc = b * c % f
                for d in range(f):
                    if d != bc:
                        yield ProjectiveElement._normalized(1, b, c, d, f)
        for c in range(1, f):
            for d in range(f):
                yield ProjectiveElement._normalized(0, 1, c, d, f)

    return run


def _psl_enumerator(f: int):
    pgl = _pgl_enumerator(f)

    def run():
        return (g for g in pgl() if g.in_psl())

    return run


def _projective_generators(f: int, full: bool) -> dict:
    gens = {
        "s": ProjectiveElement(0, 1, -1, 0, f),
        "t": ProjectiveElement(1, 1, 0, 1, f),
    }
    if full:
        from .fields import smallest_nonresidue

        gens["w"] = ProjectiveElement(1, 0, 0, smallest_nonresidue(f), f)
    return gens


def build_psl2(f: int) -> FiniteGroup:
    _check_projective_prime(f)
    return FiniteGroup(
        "psl",
        {"f": f},
        ProjectiveElement(1, 0, 0, 1, f),
        _projective_generators(f, full=False),
        f * (f * f - 1) // 2,
        enumerator=_psl_enumerator(f),
    )


def build_pgl2(f: int) -> FiniteGroup:
    _check_projective_prime(f)
    return FiniteGroup(
        "pgl",
        {"f": f},
        ProjectiveElement(1, 0, 0, 1, f),
        _projective_generators(f, full=True),
        f * (f * f - 1),
        enumerator=_pgl_enumerator(f),
    )


def build_zd_pgl2(d: int, f: int) -> FiniteGroup:
    """Z_d x| PGL(2, f): PSL centralizes Z_d, the outer coset inverts it."""
    _check_projective_prime(f)
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    action = InversionAction(d, f)
    pgl = build_pgl2(f)
    ident = SemiElement(CyclicElement(0, d), pgl.identity, action)
    gens = {"alpha": SemiElement(CyclicElement(1, d), pgl.identity, action)}
    for k, v in pgl.generators.items():
        gens[k] = SemiElement(CyclicElement(0, d), v, action)
    return FiniteGroup(
        "zdpgl",
        {"d": d, "f": f},
        ident,
        gens,
        d * pgl.order,
        enumerator=lambda: (
            SemiElement(CyclicElement(i, d), g, action)
            for i in range(d)
            for g in pgl.elements()
        ),
    )


def lift_map(d: int, base: AlgebraicMap, alpha_power: int = 1) -> AlgebraicMap:
    """Lift a PGL(2, f) map (x, y, z) to Z_d x| PGL(2, f) as (a^e x, y, z).

    Requires x, y outside PSL, z inside, and gcd(d, |xy|) = 1 so that the
    lifted r*t has order d*|xy|; the resulting map has type (d*m, n).  With
    d = 1 the base map is returned unchanged.
    """
    if d == 1:
        return base
    if base.group.family != "pgl":
        raise ValueError("lift_map needs a base map on a pgl group")
    f = base.group.params["f"]
    x, y, z = base.triple()
    if x.in_psl() or y.in_psl():
        raise MapValidationError("lift needs r and t outside PSL(2, f)")
    if not z.in_psl():
        raise MapValidationError("lift needs l inside PSL(2, f)")
    m = element_order(x * y)
    if gcd(d, m) != 1:
        raise MapValidationError(f"gcd(d, |rt|) = gcd({d}, {m}) != 1")
    if gcd(alpha_power, d) != 1:
        raise ValueError(f"alpha power {alpha_power} is not a unit mod {d}")
    g = build_zd_pgl2(d, f)
    action = g.identity.action
    lift_r = SemiElement(CyclicElement(alpha_power, d), x, action)
    lift_t = SemiElement(CyclicElement(0, d), y, action)
    lift_l = SemiElement(CyclicElement(0, d), z, action)
    return validate(g, lift_r, lift_t, lift_l)


def find_lift_base(
    f: int, m: int, n: int, use_dickson: bool = True
) -> Optional[tuple]:
    """First PGL(2, f) triple (x, y, z) fit for lifting with |xy| = m, |xz| = n.

    Scans involutions in enumeration order: x, y outside PSL, z inside,
    y z = z y and y != z, orders as requested, triple generating.  Returns
    None when no such base exists (elements of odd order never lie outside
    PSL, so e.g. odd n is hopeless).
    """
    pgl = build_pgl2(f)
    invs = [g for g in pgl.elements() if not g.is_identity() and (g * g).is_identity()]
    outer = [g for g in invs if not g.in_psl()]
    inner = [g for g in invs if g.in_psl()]
    for x in outer:
        for y in outer:
            if y == x or element_order(x * y) != m:
                continue
            for z in inner:
                if y * z != z * y:
                    continue
                if element_order(x * z) != n:
                    continue
                if generates(pgl, [x, y, z], use_dickson=use_dickson):
                    return (x, y, z)
    return None


def family_from_spec(spec: str) -> FiniteGroup:
    """Parse the mini-grammar ``family:key=value,...`` into a group.

    Accepted families: cyclic:n=, dihedral:n=, g1:j=,k=, g2:x=,n=,p=,
    g3:u=, psl:f=, pgl:f=, zdpgl:d=,f=.
    """
    name, _, rest = spec.partition(":")
    name = name.strip().lower()
    params: dict[str, int] = {}
    if rest:
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            key = key.strip()
            if not eq or not key:
                raise ValueError(f"bad parameter {item!r} in family spec {spec!r}")
            try:
                params[key] = int(value)
            except ValueError:
                raise ValueError(f"non-integer value {value!r} in family spec {spec!r}")
    builders = {
        "cyclic": (("n",), lambda p: cyclic_group(p["n"])),
        "dihedral": (("n",), lambda p: dihedral_group(p["n"])),
        "g1": (("j", "k"), lambda p: build_g1(p["j"], p["k"])),
        "g2": (("x", "n", "p"), lambda p: build_g2(p["x"], p["n"], p["p"])),
        "g3": (("u",), lambda p: build_g3(p["u"])),
        "psl": (("f",), lambda p: build_psl2(p["f"])),
        "pgl": (("f",), lambda p: build_pgl2(p["f"])),
        "zdpgl": (("d", "f"), lambda p: build_zd_pgl2(p["d"], p["f"])),
    }
    if name not in builders:
        raise ValueError(f"unknown family {name!r} in spec {spec!r}")
    keys, make = builders[name]
    if set(params) != set(keys):
        raise ValueError(
            f"family {name!r} needs parameters {','.join(keys)}, got {','.join(sorted(params)) or 'none'}"
        )
    return make(params)
