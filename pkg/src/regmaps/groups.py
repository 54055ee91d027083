"""Uniform element algebra over the concrete group families the classifier uses.

Every group is built from one of five element kinds: cyclic rotations,
dihedral flip/rotation pairs, direct-product pairs, semidirect pairs with an
explicit action, and projective 2x2 matrices over F_f.  Elements are
immutable, hashable, and multiply through ``*``; a :class:`FiniteGroup`
bundles an identity, named generators, a declared order and a deterministic
enumerator.

Serialization format (version 1), one string per element, used for hashing
canonical representatives and in JSON reports:

    cyclic      z{n}:{k}
    dihedral    d{n}:{flip}:{k}          element sigma^flip * rho^k
    pair        ({left}|{right})
    semidirect  [{normal};{actor}]
    projective  m{p}:{a},{b},{c},{d}     normalized so the first nonzero
                                         entry in row-major order is 1
    quotient    q{id}:{rep}
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

from .errors import (
    FamilyMismatchError,
    InternalInvariantError,
    OrderLimitError,
)
from .fields import factorize, p_part

SERIALIZATION_VERSION = 1

#: Groups larger than this refuse full enumeration unless overridden.
DEFAULT_MAX_ENUMERABLE = 2_000_000


class CapExceeded:
    """Sentinel returned by :func:`closure` when the cap is passed."""

    def __repr__(self) -> str:  # pragma: no cover
        return "CAP_EXCEEDED"


CAP_EXCEEDED = CapExceeded()


# ---------------------------------------------------------------------------
# element kinds
# ---------------------------------------------------------------------------


class CyclicElement:
    __slots__ = ("k", "n")

    def __init__(self, k: int, n: int):
        if n < 1:
            raise ValueError("cyclic modulus must be positive")
        self.k = k % n
        self.n = n

    def __mul__(self, other):
        if not isinstance(other, CyclicElement) or other.n != self.n:
            raise FamilyMismatchError(f"cannot multiply {self!r} by {other!r}")
        return CyclicElement(self.k + other.k, self.n)

    def inverse(self):
        return CyclicElement(-self.k, self.n)

    def is_identity(self) -> bool:
        return self.k == 0

    def __eq__(self, other):
        return (
            isinstance(other, CyclicElement) and self.k == other.k and self.n == other.n
        )

    def __hash__(self):
        return hash(("z", self.n, self.k))

    def serialize(self) -> str:
        return f"z{self.n}:{self.k}"

    __repr__ = serialize


class DihedralElement:
    """sigma^flip * rho^k in the dihedral group of order 2n (rho^n = 1)."""

    __slots__ = ("flip", "k", "n")

    def __init__(self, flip: int, k: int, n: int):
        if n < 1:
            raise ValueError("dihedral parameter must be positive")
        self.flip = flip & 1
        self.k = k % n
        self.n = n

    def __mul__(self, other):
        if not isinstance(other, DihedralElement) or other.n != self.n:
            raise FamilyMismatchError(f"cannot multiply {self!r} by {other!r}")
        # rho^k * sigma = sigma * rho^-k
        k = (-self.k if other.flip else self.k) + other.k
        return DihedralElement(self.flip ^ other.flip, k, self.n)

    def inverse(self):
        if self.flip:
            return self
        return DihedralElement(0, -self.k, self.n)

    def is_identity(self) -> bool:
        return self.flip == 0 and self.k == 0

    def __eq__(self, other):
        return (
            isinstance(other, DihedralElement)
            and self.flip == other.flip
            and self.k == other.k
            and self.n == other.n
        )

    def __hash__(self):
        return hash(("d", self.n, self.flip, self.k))

    def serialize(self) -> str:
        return f"d{self.n}:{self.flip}:{self.k}"

    __repr__ = serialize


class PairElement:
    """Direct-product pair; coordinates multiply independently."""

    __slots__ = ("left", "right", "_hash")

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self._hash = hash(("pair", left, right))

    def __mul__(self, other):
        if not isinstance(other, PairElement):
            raise FamilyMismatchError(f"cannot multiply {self!r} by {other!r}")
        return PairElement(self.left * other.left, self.right * other.right)

    def inverse(self):
        return PairElement(self.left.inverse(), self.right.inverse())

    def is_identity(self) -> bool:
        return self.left.is_identity() and self.right.is_identity()

    def __eq__(self, other):
        return (
            isinstance(other, PairElement)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return self._hash

    def serialize(self) -> str:
        return f"({self.left.serialize()}|{self.right.serialize()})"

    __repr__ = serialize


class ProjectiveElement:
    """Element of PGL(2, p): an invertible 2x2 matrix mod p up to scalars.

    The stored representative is normalized so that its first nonzero entry
    in row-major order equals 1, which makes equality and hashing canonical.
    PSL membership is decided by whether det of the representative is a
    square mod p; scaling changes det by a square, so this is well defined.
    """

    __slots__ = ("m", "p", "_hash")

    def __init__(self, a: int, b: int, c: int, d: int, p: int):
        a %= p
        b %= p
        c %= p
        d %= p
        if (a * d - b * c) % p == 0:
            raise ValueError("singular matrix")
        first = a or b or c or d
        if first != 1:
            s = pow(first, p - 2, p)
            a = a * s % p
            b = b * s % p
            c = c * s % p
            d = d * s % p
        self.m = (a, b, c, d)
        self.p = p
        self._hash = hash(("m", p, self.m))

    @classmethod
    def _normalized(cls, a, b, c, d, p):
        """Build from a known-invertible matrix, skipping the singular check."""
        self = object.__new__(cls)
        first = a or b or c or d
        if first != 1:
            s = pow(first, p - 2, p)
            a = a * s % p
            b = b * s % p
            c = c * s % p
            d = d * s % p
        self.m = (a, b, c, d)
        self.p = p
        self._hash = hash(("m", p, self.m))
        return self

    def __mul__(self, other):
        if not isinstance(other, ProjectiveElement) or other.p != self.p:
            raise FamilyMismatchError(f"cannot multiply {self!r} by {other!r}")
        p = self.p
        a, b, c, d = self.m
        e, f, g, h = other.m
        return ProjectiveElement._normalized(
            (a * e + b * g) % p,
            (a * f + b * h) % p,
            (c * e + d * g) % p,
            (c * f + d * h) % p,
            p,
        )

    def inverse(self):
        a, b, c, d = self.m
        return ProjectiveElement._normalized(d % self.p, -b % self.p, -c % self.p, a % self.p, self.p)

    def is_identity(self) -> bool:
        return self.m == (1, 0, 0, 1)

    def det(self) -> int:
        a, b, c, d = self.m
        return (a * d - b * c) % self.p

    def in_psl(self) -> bool:
        return pow(self.det(), (self.p - 1) // 2, self.p) == 1

    def __eq__(self, other):
        return (
            isinstance(other, ProjectiveElement)
            and self.p == other.p
            and self.m == other.m
        )

    def __hash__(self):
        return self._hash

    def serialize(self) -> str:
        a, b, c, d = self.m
        return f"m{self.p}:{a},{b},{c},{d}"

    __repr__ = serialize


# ---------------------------------------------------------------------------
# semidirect products and their actions
# ---------------------------------------------------------------------------


class DihedralMatrixAction:
    """Dihedral group acting on a pair of cyclics (Z_m x Z_m) through matrices.

    Constructed from the images of the normal part's two generators under the
    reflection generators c = sigma and d = sigma*rho, i.e. from presentation
    data of the form a^c = ..., b^c = ..., a^d = ..., b^d = ... .  The images
    are validated to extend to an action of the whole dihedral group.
    """

    __slots__ = ("action_id", "modulus", "n", "_mats")

    def __init__(self, modulus: int, n: int, c_images, d_images):
        # column matrices: psi(w) is the matrix of v -> w v w^{-1}; for the
        # involutions c, d this coincides with the matrix read off from the
        # presentation's conjugation relations.
        mc = (c_images[0][0], c_images[1][0], c_images[0][1], c_images[1][1])
        md = (d_images[0][0], d_images[1][0], d_images[0][1], d_images[1][1])
        self.modulus = modulus
        self.n = n
        self.action_id = f"dmat:m={modulus},n={n},c={mc},d={md}"
        ident = (1, 0, 0, 1)
        if self._matmul(mc, mc) != ident or self._matmul(md, md) != ident:
            raise ValueError("generator images are not involutions of the normal part")
        rho = self._matmul(mc, md)
        acc = ident
        mats = {}
        for k in range(n):
            mats[(0, k)] = acc
            mats[(1, k)] = self._matmul(mc, acc)
            acc = self._matmul(acc, rho)
        if acc != ident:
            raise ValueError("generator images do not satisfy (cd)^n = 1")
        for m in mats.values():
            if _gcd((m[0] * m[3] - m[1] * m[2]) % modulus, modulus) != 1:
                raise ValueError("image is not an automorphism of the normal part")
        self._mats = mats

    def _matmul(self, x, y):
        m = self.modulus
        return (
            (x[0] * y[0] + x[1] * y[2]) % m,
            (x[0] * y[1] + x[1] * y[3]) % m,
            (x[2] * y[0] + x[3] * y[2]) % m,
            (x[2] * y[1] + x[3] * y[3]) % m,
        )

    def apply(self, actor: DihedralElement, v: PairElement) -> PairElement:
        m00, m01, m10, m11 = self._mats[(actor.flip, actor.k)]
        i, j = v.left.k, v.right.k
        return PairElement(
            CyclicElement(m00 * i + m01 * j, self.modulus),
            CyclicElement(m10 * i + m11 * j, self.modulus),
        )


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class InversionAction:
    """Projective group acting on Z_d: elements outside PSL invert, PSL fixes."""

    __slots__ = ("action_id", "d", "f")

    def __init__(self, d: int, f: int):
        self.d = d
        self.f = f
        self.action_id = f"inv:d={d},f={f}"

    def apply(self, actor: ProjectiveElement, v: CyclicElement) -> CyclicElement:
        return v if actor.in_psl() else v.inverse()


class SemiElement:
    """Element (normal, actor) of a semidirect product with a shared action."""

    __slots__ = ("normal", "actor", "action", "_hash")

    def __init__(self, normal, actor, action):
        self.normal = normal
        self.actor = actor
        self.action = action
        self._hash = hash(("semi", action.action_id, normal, actor))

    def __mul__(self, other):
        if (
            not isinstance(other, SemiElement)
            or other.action.action_id != self.action.action_id
        ):
            raise FamilyMismatchError(f"cannot multiply {self!r} by {other!r}")
        return SemiElement(
            self.normal * self.action.apply(self.actor, other.normal),
            self.actor * other.actor,
            self.action,
        )

    def inverse(self):
        ai = self.actor.inverse()
        return SemiElement(self.action.apply(ai, self.normal.inverse()), ai, self.action)

    def is_identity(self) -> bool:
        return self.normal.is_identity() and self.actor.is_identity()

    def __eq__(self, other):
        return (
            isinstance(other, SemiElement)
            and self.action.action_id == other.action.action_id
            and self.normal == other.normal
            and self.actor == other.actor
        )

    def __hash__(self):
        return self._hash

    def serialize(self) -> str:
        return f"[{self.normal.serialize()};{self.actor.serialize()}]"

    __repr__ = serialize


# ---------------------------------------------------------------------------
# quotient elements
# ---------------------------------------------------------------------------

_quotient_counter = itertools.count()


class QuotientContext:
    """Coset table of a normal subgroup: parent element -> canonical rep."""

    __slots__ = ("qid", "rep_of", "identity_rep")

    def __init__(self, rep_of: dict, identity_rep):
        self.qid = next(_quotient_counter)
        self.rep_of = rep_of
        self.identity_rep = identity_rep


class QuotientElement:
    """Coset gN, carried by its canonical representative.

    Multiplication multiplies representatives in the parent group and
    re-canonicalizes through the shared coset table.  Elements from two
    independently built quotients never compare equal.
    """

    __slots__ = ("rep", "ctx", "_hash")

    def __init__(self, rep, ctx: QuotientContext):
        self.rep = rep
        self.ctx = ctx
        self._hash = hash(("q", ctx.qid, rep))

    def __mul__(self, other):
        if not isinstance(other, QuotientElement) or other.ctx is not self.ctx:
            raise FamilyMismatchError(f"cannot multiply {self!r} by {other!r}")
        return QuotientElement(self.ctx.rep_of[self.rep * other.rep], self.ctx)

    def inverse(self):
        return QuotientElement(self.ctx.rep_of[self.rep.inverse()], self.ctx)

    def is_identity(self) -> bool:
        return self.rep == self.ctx.identity_rep

    def __eq__(self, other):
        return (
            isinstance(other, QuotientElement)
            and self.ctx is other.ctx
            and self.rep == other.rep
        )

    def __hash__(self):
        return self._hash

    def serialize(self) -> str:
        return f"q{self.ctx.qid}:{self.rep.serialize()}"

    __repr__ = serialize


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------


class FiniteGroup:
    """A named finite group: identity, generators, declared order, enumerator.

    ``family`` tags which constructor produced the group ("cyclic",
    "dihedral", "g1", "g2", "g3", "psl", "pgl", "zdpgl", "quotient") and
    ``params`` holds its defining parameters.  ``elements()`` enumerates the
    whole group deterministically and verifies the count against the declared
    order the first time it runs.
    """

    def __init__(
        self,
        family: str,
        params: dict,
        identity,
        generators: dict,
        order: int,
        enumerator=None,
        name: Optional[str] = None,
    ):
        self.family = family
        self.params = dict(params)
        self.identity = identity
        self.generators = dict(generators)
        self.order = order
        self._enumerator = enumerator
        self.name = name or self.spec_string()
        self._elements: Optional[tuple] = None
        self._element_set: Optional[frozenset] = None

    def spec_string(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}:{inner}" if inner else self.family

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def elements(self, limit: Optional[int] = None) -> tuple:
        if self._elements is None:
            cap = DEFAULT_MAX_ENUMERABLE if limit is None else limit
            if self.order > cap:
                raise OrderLimitError(
                    f"|{self.name}| = {self.order} exceeds enumeration limit {cap}"
                )
            if self._enumerator is not None:
                elems = tuple(self._enumerator())
            else:
                got = closure([self.identity] + list(self.generators.values()))
                elems = tuple(sorted(got, key=lambda g: g.serialize()))
            if len(elems) != self.order:
                raise InternalInvariantError(
                    f"{self.name}: enumerated {len(elems)} elements, declared {self.order}"
                )
            self._elements = elems
            self._element_set = frozenset(elems)
        return self._elements

    def element_set(self, limit: Optional[int] = None) -> frozenset:
        self.elements(limit)
        return self._element_set


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(
        "cyclic",
        {"n": n},
        CyclicElement(0, n),
        {"g": CyclicElement(1, n)},
        n,
        enumerator=lambda: (CyclicElement(k, n) for k in range(n)),
    )


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n with reflection generators c and d = c*rho."""
    if n < 2:
        raise ValueError("dihedral_group needs n >= 2")
    return FiniteGroup(
        "dihedral",
        {"n": n},
        DihedralElement(0, 0, n),
        {"c": DihedralElement(1, 0, n), "d": DihedralElement(1, 1, n)},
        2 * n,
        enumerator=lambda: (
            DihedralElement(f, k, n) for f in (0, 1) for k in range(n)
        ),
    )


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    gens = {f"l.{k}": PairElement(v, h.identity) for k, v in g.generators.items()}
    gens.update({f"r.{k}": PairElement(g.identity, v) for k, v in h.generators.items()})
    return FiniteGroup(
        "product",
        {"left": g.name, "right": h.name},
        PairElement(g.identity, h.identity),
        gens,
        g.order * h.order,
        enumerator=lambda: (
            PairElement(a, b) for a in g.elements() for b in h.elements()
        ),
    )


# ---------------------------------------------------------------------------
# generic operations
# ---------------------------------------------------------------------------


def element_order(g) -> int:
    """Least e >= 1 with g^e = identity."""
    e = 1
    acc = g
    while not acc.is_identity():
        acc = acc * g
        e += 1
        if e > 10_000_000:
            raise InternalInvariantError("element order runaway; broken arithmetic?")
    return e


def closure(seeds: Sequence, cap: Optional[int] = None):
    """Subgroup generated by the seeds, by breadth-first products.

    Returns the element set as a frozenset, or :data:`CAP_EXCEEDED` as soon
    as the partial closure grows past ``cap`` elements.
    """
    seeds = [s for s in seeds if not s.is_identity()]
    if not seeds:
        raise ValueError("closure needs at least one non-identity seed")
    ident = seeds[0] * seeds[0].inverse()
    seen = {ident}
    frontier = [ident]
    add = seen.add
    while frontier:
        new = []
        for g in frontier:
            for s in seeds:
                h = g * s
                if h not in seen:
                    add(h)
                    new.append(h)
        if cap is not None and len(seen) > cap:
            return CAP_EXCEEDED
        frontier = new
    return frozenset(seen)


def subgroup_closure(seeds: Sequence, identity, cap: Optional[int] = None):
    """Like :func:`closure` but tolerates an all-identity seed list."""
    nontrivial = [s for s in seeds if not s.is_identity()]
    if not nontrivial:
        return frozenset([identity])
    return closure(nontrivial, cap)


def dickson_bound(f: int) -> int:
    """Upper bound on proper-subgroup order in PSL(2, f), f an odd prime >= 5."""
    return max(f * (f - 1) // 2, 2 * (f + 1), 120, 48)


def generates(group: FiniteGroup, seeds: Sequence, use_dickson: bool = True) -> bool:
    """True iff the seeds generate the whole group.

    For the projective families a closure that outgrows the largest possible
    proper subgroup is accepted early: any proper subgroup of PSL(2, f) has
    order at most dickson_bound(f), and any proper subgroup of PGL(2, f) not
    contained in PSL (the seeds are first checked to leave PSL) has order at
    most twice that.
    """
    if group.family in ("psl", "pgl") and use_dickson:
        f = group.params["f"]
        bound = dickson_bound(f)
        if group.family == "pgl":
            if all(s.in_psl() for s in seeds):
                return False
            bound *= 2
        got = subgroup_closure(seeds, group.identity, cap=bound)
        if got is CAP_EXCEEDED:
            return True
        return len(got) == group.order
    got = subgroup_closure(seeds, group.identity)
    return len(got) == group.order


def involutions(group: FiniteGroup, limit: Optional[int] = None) -> list:
    """All elements g != 1 with g^2 = 1, in enumeration order."""
    return [
        g
        for g in group.elements(limit)
        if not g.is_identity() and (g * g).is_identity()
    ]


def is_almost_sylow_cyclic(group: FiniteGroup, limit: Optional[int] = None) -> bool:
    """Odd Sylow subgroups cyclic; Sylow 2 trivial or with a cyclic index-2 part.

    Decided by an element-order scan: an odd Sylow s-subgroup is cyclic iff
    some element has order |G|_s, and a Sylow 2-subgroup has a cyclic
    subgroup of index 2 iff some element has order |G|_2 / 2 (or |G|_2).
    """
    facts = factorize(group.order)
    max_power = {s: 1 for s in facts}
    for g in group.elements(limit):
        o = element_order(g)
        for s in facts:
            sp = p_part(o, s)
            if sp > max_power[s]:
                max_power[s] = sp
    for s, e in facts.items():
        full = s ** e
        if s == 2:
            if full > 2 and max_power[2] * 2 < full:
                return False
        elif max_power[s] != full:
            return False
    return True


def triple_isomorphic(
    group1: FiniteGroup,
    triple1: Sequence,
    group2: FiniteGroup,
    triple2: Sequence,
    limit: Optional[int] = None,
) -> bool:
    """Whether the generator assignment triple1 -> triple2 extends to an iso.

    Both triples must generate their groups.  The check runs a parallel
    closure on pairs; any pair of equal first components with different
    second components kills the candidate map.  Cheap order comparisons of
    the generators and their pairwise products short-circuit first.
    """
    if group1.order != group2.order:
        return False
    for x, y in zip(triple1, triple2):
        if element_order(x) != element_order(y):
            return False
    for (i, j) in ((0, 1), (0, 2), (1, 2)):
        if element_order(triple1[i] * triple1[j]) != element_order(triple2[i] * triple2[j]):
            return False
    if group1.order > (DEFAULT_MAX_ENUMERABLE if limit is None else limit):
        raise OrderLimitError(f"triple_isomorphic on |G| = {group1.order}")
    pairs = list(zip(triple1, triple2))
    ident = (group1.identity, group2.identity)
    mapping = {ident[0]: ident[1]}
    frontier = [ident]
    while frontier:
        new = []
        for g, h in frontier:
            for sg, sh in pairs:
                ng = g * sg
                nh = h * sh
                known = mapping.get(ng)
                if known is None:
                    mapping[ng] = nh
                    new.append((ng, nh))
                elif known != nh:
                    return False
        frontier = new
    return len(mapping) == group1.order


def canonical_code(group: FiniteGroup, triple: Sequence) -> tuple:
    """Canonical form of a generating triple under triple isomorphism.

    Elements are relabelled 0..|G|-1 by breadth-first visit order from the
    identity, multiplying on the left by the triple in order; the code lists,
    for each label, the labels of the three left translates.  Two triples get
    equal codes iff the generator assignment extends to a group isomorphism,
    which makes the code a dictionary key for isomorphism-class dedup.
    """
    label = {group.identity: 0}
    order_list = [group.identity]
    frontier = [group.identity]
    while frontier:
        new = []
        for g in frontier:
            for s in triple:
                h = s * g
                if h not in label:
                    label[h] = len(order_list)
                    order_list.append(h)
                    new.append(h)
        frontier = new
    if len(order_list) != group.order:
        raise ValueError("triple does not generate; canonical code undefined")
    return tuple(
        (label[triple[0] * g], label[triple[1] * g], label[triple[2] * g])
        for g in order_list
    )


def conjugate(g, by):
    return by * g * by.inverse()


def normal_closure(group: FiniteGroup, seed, gens: Optional[Sequence] = None) -> frozenset:
    """Smallest normal subgroup containing ``seed``.

    Closes alternately under group products and conjugation by the given
    generators (defaulting to the group's own).
    """
    if gens is None:
        gens = list(group.generators.values())
    current = subgroup_closure([seed], group.identity)
    while True:
        extra = []
        for n in current:
            for g in gens:
                c = g * n * g.inverse()
                if c not in current:
                    extra.append(c)
        if not extra:
            return current
        current = subgroup_closure(list(current) + extra, group.identity)


def klein_four_subgroups(group: FiniteGroup, limit: Optional[int] = None) -> list:
    """All Klein four-subgroups, each as a frozenset of 4 elements."""
    invs = involutions(group, limit)
    seen = set()
    out = []
    for i, t in enumerate(invs):
        for l in invs[i + 1:]:
            if (t * l) == (l * t):
                v = frozenset([group.identity, t, l, t * l])
                if len(v) == 4 and v not in seen:
                    seen.add(v)
                    out.append(v)
    return out


def klein_orbit_representatives(
    group: FiniteGroup, limit: Optional[int] = None
) -> list:
    """One Klein four-subgroup per conjugacy orbit, via BFS on generators."""
    subs = klein_four_subgroups(group, limit)
    gens = list(group.generators.values())
    unseen = set(subs)
    reps = []
    for v in subs:
        if v not in unseen:
            continue
        reps.append(v)
        frontier = [v]
        unseen.discard(v)
        while frontier:
            new = []
            for w in frontier:
                for g in gens:
                    c = frozenset(conjugate(x, g) for x in w)
                    if c in unseen:
                        unseen.discard(c)
                        new.append(c)
            frontier = new
    return reps


def commuting_involution_pairs(
    group: FiniteGroup,
    klein_reduction: bool = True,
    limit: Optional[int] = None,
) -> list:
    """Ordered pairs (t, l) of distinct commuting involutions with t*l != 1.

    With ``klein_reduction`` the pairs are drawn only from one representative
    Klein four-subgroup per conjugacy orbit; conjugating a map triple is a
    map isomorphism, so searches lose nothing by the reduction.
    """
    if klein_reduction:
        pairs = []
        for v in klein_orbit_representatives(group, limit):
            invs = sorted(
                (x for x in v if not x.is_identity()), key=lambda g: g.serialize()
            )
            for t in invs:
                for l in invs:
                    if t != l:
                        pairs.append((t, l))
        return pairs
    invs = involutions(group, limit)
    return [
        (t, l)
        for t in invs
        for l in invs
        if t != l and (t * l) == (l * t)
    ]
