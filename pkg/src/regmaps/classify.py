"""Case enumeration and exhaustive existence search for chi = -pq maps.

Given primes q > p >= 5, :func:`enumerate_cases` solves the Diophantine side
conditions of each case exactly and emits one descriptor per dual pair of
candidate maps.  Solvable-family candidates are constructed outright and
re-validated; candidates on projective groups are settled by
:func:`search_maps`, a brute-force scan over involution triples that serves
as the existence oracle throughout.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import InternalInvariantError, MapValidationError
from .families import (
    build_m1,
    build_m2,
    build_m3,
    build_pgl2,
    build_psl2,
    build_zd_pgl2,
    find_lift_base,
    lift_map,
)
from .fields import is_prime, s_set
from .groups import (
    FiniteGroup,
    canonical_code,
    commuting_involution_pairs,
    element_order,
    generates,
    involutions,
)
from .maps import AlgebraicMap, MapInvariants, orbit_invariants, validate

SCHEMA_VERSION = 1


@dataclass
class SearchConfig:
    """Knobs for enumeration and search; toggles never change results."""

    max_order: int = 2_000_000
    workers: int = field(default_factory=lambda: os.cpu_count() or 1)
    klein_reduction: bool = True
    dickson_cap: bool = True
    #: groups larger than this are not searched by enumerate_cases /
    #: verify_sporadic_tables; their descriptors stay "conditional"
    search_order_limit: int = 20_000


# ---------------------------------------------------------------------------
# k(x, y) and the four tables
# ---------------------------------------------------------------------------


def k_value(x: int, y: int) -> Optional[Fraction]:
    """xy / (xy - 2x - 2y) as an exact rational; None when undefined."""
    den = x * y - 2 * x - 2 * y
    if den == 0:
        return None
    return Fraction(x * y, den)


def table1() -> list[tuple[tuple[int, int], int]]:
    """All unordered pairs 3 <= x <= y with k(x, y) a positive integer.

    A positive integer k forces 2/x + 2/y < 1 <= 2/x + 2/y + 1/2, so
    min(x, y) <= 8 and, for each x, a divisor bound pins y below 25;
    scanning to 100 is comfortably exhaustive.
    """
    rows = []
    for x in range(3, 101):
        for y in range(x, 101):
            k = k_value(x, y)
            if k is not None and k > 0 and k.denominator == 1:
                rows.append(((x, y), int(k)))
    return rows


def table2(
    p: Optional[int] = None, q: Optional[int] = None
) -> list[dict]:
    """Group orders 4 k(x,y) pq admitted by the Lagrange divisibility x,y | |G|.

    Without (p, q) the rows are those valid for every admissible prime pair,
    plus specializations that force a particular small prime (the (5, 20)
    row exists only for p = 5, where |G| = 40q).
    """
    rows = []
    for (x, y), k in table1():
        a4 = 4 * k
        if p is not None and q is not None:
            a = a4 * p * q
            if a % x == 0 and a % y == 0:
                rows.append(
                    {"type": [x, y], "k": k, "order": a, "formula": f"{a4}pq"}
                )
            continue
        if a4 % x == 0 and a4 % y == 0:
            rows.append({"type": [x, y], "k": k, "formula": f"{a4}pq"})
        else:
            for s in (5, 7, 11, 13, 17, 19, 23):
                if (a4 * s) % x == 0 and (a4 * s) % y == 0:
                    rows.append(
                        {
                            "type": [x, y],
                            "k": k,
                            "formula": f"{a4 * s}q",
                            "requires_p": s,
                        }
                    )
                    break
    return rows


#: Sporadic PSL(2, q) rows: (type, p, q) with q^2 - 1 = 8 k(x,y) p.
TABLE3: tuple = (
    ((3, 7), 41, 83),
    ((3, 7), 5, 29),
    ((3, 9), 19, 37),
    ((3, 12), 11, 23),
    ((6, 6), 7, 13),
    ((6, 6), 5, 11),
)

#: Sporadic PGL(2, q) rows: (type, p, q) with q^2 - 1 = 4 k(x,y) p.
TABLE4: tuple = (
    ((3, 8), 11, 23),
    ((3, 12), 7, 13),
    ((4, 6), 7, 13),
)


def verify_sporadic_tables(
    config: Optional[SearchConfig] = None, search_limit: int = 0
) -> dict:
    """Check the defining equations of every sporadic row, optionally with search.

    Rows whose group order exceeds ``search_limit`` get existence
    "skipped (scale)"; pass a generous limit to run the searches.
    """
    config = config or SearchConfig()
    report: dict = {"table3": [], "table4": []}
    for name, rows, factor, build in (
        ("table3", TABLE3, 8, build_psl2),
        ("table4", TABLE4, 4, build_pgl2),
    ):
        for (x, y), p, q in rows:
            k = k_value(x, y)
            entry = {
                "type": [x, y],
                "p": p,
                "q": q,
                "k": int(k),
                "arithmetic_ok": q * q - 1 == factor * int(k) * p,
            }
            group = build(q)
            if group.order <= search_limit:
                hits = search_maps(group, target_chi=-p * q, target_type={x, y}, config=config)
                entry["existence"] = "confirmed" if hits else "refuted"
            else:
                entry["existence"] = "skipped (scale)"
            report[name].append(entry)
    return report


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchHit:
    """One map found by search, with its orbit-count invariants."""

    map: AlgebraicMap
    invariants: MapInvariants

    def triple(self) -> tuple:
        return self.map.triple()


def _chi_matches(order: int, x: int, y: int, target: int) -> bool:
    num = -order * (x * y - 2 * x - 2 * y)
    den = 4 * x * y
    return num % den == 0 and num // den == target


def _scan_chunk(group, pairs, invs, target_chi, target_type, config, order_cache):
    out = []
    order = group.order
    for t, l in pairs:
        for r in invs:
            rt = r * t
            x = order_cache.get(rt)
            if x is None:
                x = element_order(rt)
                order_cache[rt] = x
            rl = r * l
            y = order_cache.get(rl)
            if y is None:
                y = element_order(rl)
                order_cache[rl] = y
            if target_type is not None and {x, y} != target_type:
                continue
            if target_chi is not None and not _chi_matches(order, x, y, target_chi):
                continue
            if not generates(group, (r, t, l), use_dickson=config.dickson_cap):
                continue
            out.append((r, t, l))
    return out


def search_maps(
    group: FiniteGroup,
    target_chi: Optional[int] = None,
    target_type: Optional[set] = None,
    config: Optional[SearchConfig] = None,
) -> list[SearchHit]:
    """All maps on the group matching the filters, up to isomorphism and duality.

    Exhausts commuting involution pairs (t, l), t != l, against every
    involution r; with Klein reduction on, the pairs come from one
    representative Klein four-subgroup per conjugacy orbit, which loses
    nothing because conjugate triples carry isomorphic maps.  Results are
    deduplicated via canonical codes (triple isomorphism, then duality) and
    sorted canonically, so worker count and toggles never affect output.
    """
    config = config or SearchConfig()
    if target_type is not None:
        target_type = set(target_type)
    group.elements(config.max_order)
    invs = involutions(group, config.max_order)
    pairs = commuting_involution_pairs(
        group, klein_reduction=config.klein_reduction, limit=config.max_order
    )
    workers = max(1, config.workers)
    if workers == 1 or len(pairs) < 2 * workers:
        survivors = _scan_chunk(
            group, pairs, invs, target_chi, target_type, config, {}
        )
    else:
        chunks = [pairs[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                lambda ch: _scan_chunk(
                    group, ch, invs, target_chi, target_type, config, {}
                ),
                chunks,
            )
            survivors = [s for part in parts for s in part]

    seen: dict = {}
    for r, t, l in survivors:
        code = canonical_code(group, (r, t, l))
        dual_code = canonical_code(group, (r, l, t))
        key = min(code, dual_code)
        if key not in seen:
            seen[key] = (r, t, l)
    hits = []
    for r, t, l in seen.values():
        m = validate(group, r, t, l, use_dickson=config.dickson_cap, check_generation=False)
        hits.append(SearchHit(m, orbit_invariants(m, config.max_order)))
    hits.sort(
        key=lambda h: (
            h.map.x,
            h.map.y,
            h.map.r.serialize(),
            h.map.t.serialize(),
            h.map.l.serialize(),
        )
    )
    return hits


# ---------------------------------------------------------------------------
# the case enumerator
# ---------------------------------------------------------------------------


@dataclass
class MapDescriptor:
    """One dual pair of candidate maps for a classification case.

    ``status``: constructed (map built and validated), conditional (existence
    not settled at this scale), search-confirmed (oracle found a witness),
    search-refuted (oracle exhausted the group without a hit).  A descriptor
    stands for the map and its dual at once, so ``dual_of`` points back at
    the descriptor itself.
    """

    case: str
    params: dict
    type_set: tuple
    group_family: str
    group_order: int
    status: str
    witness: Optional[AlgebraicMap] = None
    chi: Optional[int] = None
    orientable: Optional[bool] = None
    note: str = ""

    @property
    def descriptor_id(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.case}:{inner}"

    def to_dict(self) -> dict:
        return {
            "id": self.descriptor_id,
            "case": self.case,
            "params": dict(self.params),
            "type": list(self.type_set),
            "group": {"family": self.group_family, "order": self.group_order},
            "chi": self.chi,
            "orientable": self.orientable,
            "status": self.status,
            "dual_of": self.descriptor_id,
            "note": self.note,
            "witness": [g.serialize() for g in self.witness.triple()]
            if self.witness
            else None,
        }


@dataclass
class ClassifyReport:
    p: int
    q: int
    descriptors: list
    verification: dict

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "p": self.p,
            "q": self.q,
            "descriptors": [d.to_dict() for d in self.descriptors],
            "verification": self.verification,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def by_case(self, case: str) -> list:
        return [d for d in self.descriptors if d.case == case]


def _canonical_type(x: int, y: int) -> tuple:
    return (x, y) if (x, y) <= (y, x) else (y, x)


def _constructed(case: str, params: dict, m: AlgebraicMap, pq: int) -> MapDescriptor:
    if m.chi != -pq:
        raise InternalInvariantError(
            f"{case} candidate has chi = {m.chi}, expected {-pq}"
        )
    return MapDescriptor(
        case,
        params,
        _canonical_type(m.x, m.y),
        m.group.family,
        m.group.order,
        "constructed",
        witness=m,
        chi=m.chi,
        orientable=m.orientable,
    )


def _searched(
    case: str,
    params: dict,
    group: FiniteGroup,
    type_set: set,
    pq: int,
    config: SearchConfig,
) -> MapDescriptor:
    tlist = tuple(sorted(type_set)) if len(type_set) > 1 else (next(iter(type_set)),) * 2
    desc = MapDescriptor(
        case, params, tlist, group.family, group.order, "conditional", chi=-pq
    )
    if group.order > config.search_order_limit:
        desc.note = "group beyond search limit"
        return desc
    hits = search_maps(group, target_chi=-pq, target_type=type_set, config=config)
    if hits:
        m = hits[0].map
        desc.status = "search-confirmed"
        desc.witness = m
        desc.orientable = m.orientable
    else:
        desc.status = "search-refuted"
    return desc


def _case_i(p: int, q: int) -> list[MapDescriptor]:
    pq = p * q
    out = []
    target = pq + 1
    for d1 in range(2, int(target ** 0.5) + 1):
        if target % d1:
            continue
        d2 = target // d1
        # j = d1+1 and k = d2+1 must both be odd
        if d1 % 2 or d2 % 2:
            continue
        j, k = d1 + 1, d2 + 1
        out.append(_constructed("i", {"j": j, "k": k}, build_m1(j, k), pq))
    return out


def _case_ii(p: int, q: int) -> list[MapDescriptor]:
    if q - p != 2:
        return []
    return [_constructed("ii", {"x": 0, "n": 4, "p": q}, build_m2(0, 4, q), p * q)]


def _case_iii(p: int, q: int) -> list[MapDescriptor]:
    pq = p * q
    out = []
    pk = p
    k = 1
    # n = 2(q + p^k)/(p^k - 1) >= 4 forces p^k <= q + 2
    while pk <= q + 2:
        num = 2 * (q + pk)
        den = pk - 1
        if num % den == 0:
            n = num // den
            if n % 2 == 0 and n >= 4:
                for x in s_set(n, p).members:
                    if k == 1:
                        out.append(
                            _constructed(
                                "iii",
                                {"k": 1, "x": x, "n": n, "p": p},
                                build_m2(x, n, p),
                                pq,
                            )
                        )
                    else:
                        out.append(
                            MapDescriptor(
                                "iii",
                                {"k": k, "x": x, "n": n, "p": p},
                                _canonical_type(2 * pk, n),
                                "cover(g2)",
                                2 * n * pk * pk // p,
                                "conditional",
                                chi=-pq,
                                note=(
                                    f"cyclic cover of order {pk // p} over "
                                    f"g2:x={x},n={n},p={p}; no explicit presentation"
                                ),
                            )
                        )
        pk *= p
        k += 1
    return out


def _case_iv(p: int, q: int) -> list[MapDescriptor]:
    u = p * q + 4
    if u % 6 != 3:
        return []
    return [_constructed("iv", {"u": u}, build_m3(u), p * q)]


def _psl_candidates(p: int, case: str) -> list[tuple[int, tuple[int, int]]]:
    """(f, {m, n}) candidates for the three parametric PSL cases."""
    out = []

    def push(f: int, mn: tuple) -> None:
        if f >= 5 and is_prime(f) and min(mn) >= 1:
            out.append((f, mn))

    if case == "v1":
        if p % 2 == 1:
            push(p, ((p - 1) // 2, (p + 1) // 2))
        push(2 * p + 1, (2 * p + 1, p + 1))
        push(2 * p - 1, (2 * p - 1, p - 1))
    elif case == "v2":
        if p % 4 == 1:
            push(p, ((p - 1) // 4, (p + 1) // 2))
        push(4 * p + 1, (4 * p + 1, 2 * p + 1))
        f = 2 * p - 1
        if f % 4 == 1:
            push(f, (f, (f - 1) // 4))
    elif case == "v3":
        if p % 4 == 3:
            push(p, ((p - 1) // 2, (p + 1) // 4))
        f = 2 * p + 1
        if f % 4 == 3:
            push(f, (f, (f + 1) // 4))
        push(4 * p - 1, (4 * p - 1, 2 * p - 1))
    return out


def _cases_v(p: int, q: int, config: SearchConfig) -> list[MapDescriptor]:
    pq = p * q
    out = []
    seen = set()
    for case, target in (("v1", 2 * q), ("v2", q), ("v3", q)):
        for f, (m, n) in _psl_candidates(p, case):
            if m * n - 2 * m - 2 * n != target:
                continue
            key = (f, frozenset((m, n)))
            if key in seen:
                continue
            seen.add(key)
            out.append(
                _searched(
                    case,
                    {"f": f, "m": m, "n": n},
                    build_psl2(f),
                    {m, n},
                    pq,
                    config,
                )
            )
    for (x, y), tp, tq in TABLE3:
        if (tp, tq) == (p, q):
            out.append(
                _searched(
                    "v4", {"f": q, "x": x, "y": y}, build_psl2(q), {x, y}, pq, config
                )
            )
    return out


def _case_vi1(p: int, q: int, config: SearchConfig) -> list[MapDescriptor]:
    pq = p * q
    out = []
    seen = set()
    for f in (p, 2 * p + 1, 2 * p - 1):
        if f < 5 or not is_prime(f):
            continue
        for triple_set in (
            (f, f + 1, (f - 1) // 2),
            (f, f - 1, (f + 1) // 2),
        ):
            if p not in triple_set:
                continue
            rest = list(triple_set)
            rest.remove(p)
            for m, n in (tuple(rest), tuple(reversed(rest))):
                if m < 3 or n < 3 or m % p == 0:
                    continue
                den = m * (n - 2)
                num = 2 * (q + n)
                if den <= 0 or num % den:
                    continue
                d = num // den
                if d < 1 or gcd(d, f * (f * f - 1)) not in (1, p):
                    continue
                # with d = 1 the equation is symmetric in (m, n): one descriptor
                key = (f, d, frozenset((m, n))) if d == 1 else (f, d, m, n)
                if key in seen:
                    continue
                seen.add(key)
                out.append(_vi_descriptor(p, q, f, d, m, n, config))
    return out


def _vi_descriptor(
    p: int, q: int, f: int, d: int, m: int, n: int, config: SearchConfig
) -> MapDescriptor:
    pq = p * q
    params = {"d": d, "f": f, "m": m, "n": n}
    if d == 1:
        return _searched("vi1", params, build_pgl2(f), {m, n}, pq, config)
    group_order = d * f * (f * f - 1)
    if gcd(d, m) == 1:
        base = find_lift_base(f, m, n, use_dickson=config.dickson_cap)
        if base is not None:
            pgl = build_pgl2(f)
            base_map = validate(pgl, *base, use_dickson=config.dickson_cap)
            lifted = lift_map(d, base_map)
            if lifted.chi != -pq or {lifted.x, lifted.y} != {d * m, n}:
                raise InternalInvariantError("lift produced the wrong map")
            desc = _constructed("vi1", params, lifted, pq)
            desc.note = "lifted from a pgl base triple"
            return desc
    desc = MapDescriptor(
        "vi1",
        params,
        _canonical_type(d * m, n),
        "zdpgl",
        group_order,
        "conditional",
        chi=-pq,
    )
    if group_order > config.search_order_limit:
        desc.note = "no lift base found; group beyond search limit"
        return desc
    hits = search_maps(
        build_zd_pgl2(d, f),
        target_chi=-pq,
        target_type={d * m, n},
        config=config,
    )
    if hits:
        desc.status = "search-confirmed"
        desc.witness = hits[0].map
        desc.orientable = hits[0].map.orientable
        desc.note = "found by direct search (no lift base)"
    else:
        desc.status = "search-refuted"
    return desc


def _cases_vi_rest(p: int, q: int, config: SearchConfig) -> list[MapDescriptor]:
    pq = p * q
    out = []
    if p * p - 4 * p - 1 == 4 * q:
        out.append(
            _searched(
                "vi2",
                {"d": 1, "f": p, "m": p - 1, "n": p + 1},
                build_pgl2(p),
                {p - 1, p + 1},
                pq,
                config,
            )
        )
    if (p, q) == (5, 7):
        out.append(
            _searched(
                "vi3", {"d": 1, "f": 7, "m": 6, "n": 8}, build_pgl2(7), {6, 8}, pq, config
            )
        )
    for (x, y), tp, tq in TABLE4:
        if (tp, tq) == (p, q):
            out.append(
                _searched(
                    "vi4",
                    {"d": 1, "f": q, "x": x, "y": y},
                    build_pgl2(q),
                    {x, y},
                    pq,
                    config,
                )
            )
    return out


def enumerate_cases(
    p: int, q: int, config: Optional[SearchConfig] = None
) -> ClassifyReport:
    """Solve every case's side conditions for (p, q) and verify the results.

    Constructed witnesses are re-validated (chi = -pq exactly, and the three
    solvable families must come out non-orientable); searched cases report
    confirmed/refuted/conditional per the search limit in ``config``.
    """
    config = config or SearchConfig()
    if not (is_prime(p) and is_prime(q)):
        raise ValueError(f"p and q must be prime, got ({p}, {q})")
    if not (5 <= p < q):
        raise ValueError(f"need q > p >= 5, got ({p}, {q})")
    descriptors: list[MapDescriptor] = []
    descriptors += _case_i(p, q)
    descriptors += _case_ii(p, q)
    descriptors += _case_iii(p, q)
    descriptors += _case_iv(p, q)
    descriptors += _cases_v(p, q, config)
    descriptors += _case_vi1(p, q, config)
    descriptors += _cases_vi_rest(p, q, config)

    for d in descriptors:
        if d.case in ("i", "ii", "iii", "iv") and d.witness is not None:
            if d.witness.orientable:
                raise InternalInvariantError(
                    f"{d.descriptor_id}: solvable-family map came out orientable"
                )

    verification = {
        "constructed": sum(1 for d in descriptors if d.status == "constructed"),
        "search_confirmed": sum(1 for d in descriptors if d.status == "search-confirmed"),
        "search_refuted": sum(1 for d in descriptors if d.status == "search-refuted"),
        "conditional": sum(1 for d in descriptors if d.status == "conditional"),
        "details": {
            d.descriptor_id: {
                "chi": d.witness.chi,
                "chi_orbits": orbit_invariants(d.witness).chi,
                "type": [d.witness.x, d.witness.y],
                "orientable": d.witness.orientable,
                "genus": d.witness.genus,
            }
            for d in descriptors
            if d.witness is not None and d.witness.group.order <= config.search_order_limit
        },
    }
    return ClassifyReport(p, q, descriptors, verification)
