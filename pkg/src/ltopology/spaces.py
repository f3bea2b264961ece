"""L-topological spaces over a finite frame and the maps between them.

An L-set on a space with ``n`` points is stored as a tuple of ``n`` frame
element indices.  A space keeps its opens deduplicated and sorted, so two
spaces built from the same data compare equal.
"""

from __future__ import annotations

import itertools
from dataclasses import InitVar, dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import CapExceeded, Check, PreconditionError, TopologyError
from .frames import Frame, generated_closure

LSet = tuple[int, ...]

DEFAULT_POINT_CAP = 10**4
DEFAULT_SEARCH_CAP = 10**6


# -- L-sets -------------------------------------------------------------------

def constant_lset(L: Frame, n: int, value: int) -> LSet:
    return (value,) * n


def characteristic(L: Frame, n: int, subset: Iterable[int]) -> LSet:
    """1_Y: top on ``subset``, bottom elsewhere."""
    subset = set(subset)
    return tuple(L.top if x in subset else L.bottom for x in range(n))


def lset_meet(L: Frame, a: LSet, b: LSet) -> LSet:
    mt = L.meet_table
    return tuple(mt[u][v] for u, v in zip(a, b))


def lset_join(L: Frame, a: LSet, b: LSet) -> LSet:
    jt = L.join_table
    return tuple(jt[u][v] for u, v in zip(a, b))


def lset_le(L: Frame, a: LSet, b: LSet) -> bool:
    return all(L.leq[u][v] for u, v in zip(a, b))


def preimage_lset(mapping: Sequence[int], nu: LSet) -> LSet:
    """f<-(nu) = nu o f."""
    return tuple(nu[y] for y in mapping)


def image_lset(mapping: Sequence[int], mu: LSet, L: Frame, n_target: int) -> LSet:
    """f->(mu)(y) = join of mu over the fibre of y; empty fibres give bottom."""
    out = [L.bottom] * n_target
    jt = L.join_table
    for x, y in enumerate(mapping):
        out[y] = jt[out[y]][mu[x]]
    return tuple(out)


def generate_topology(L: Frame, n: int, generators: Iterable[LSet]) -> set[LSet]:
    """<zeta> inside L^n: every join of finite meets of the generators."""
    return generated_closure(
        generators,
        lambda a, b: lset_meet(L, a, b),
        lambda a, b: lset_join(L, a, b),
        constant_lset(L, n, L.bottom),
        constant_lset(L, n, L.top),
    )


def is_ltopology(L: Frame, n_points: int, candidates: Iterable[LSet]) -> Check:
    """Is the family a subframe of L^X?"""
    opens = list(dict.fromkeys(tuple(c) for c in candidates))
    for c in opens:
        if len(c) != n_points or any(not 0 <= v < L.size for v in c):
            return Check(False, "not an L-set on these points", c)
    members = set(opens)
    for a, b in itertools.combinations(opens, 2):
        m = lset_meet(L, a, b)
        if m not in members:
            return Check(False, "missing meet", (a, b, m))
        j = lset_join(L, a, b)
        if j not in members:
            return Check(False, "missing join", (a, b, j))
    bottom = constant_lset(L, n_points, L.bottom)
    if bottom not in members:
        return Check(False, "missing constant bottom", bottom)
    top = constant_lset(L, n_points, L.top)
    if top not in members:
        return Check(False, "missing constant top", top)
    return Check(True)


# -- spaces -------------------------------------------------------------------

@dataclass(frozen=True)
class LTopSpace:
    frame: Frame
    points: tuple
    opens: tuple
    check: InitVar[bool] = True

    def __post_init__(self, check):
        points = tuple(self.points)
        if len(set(points)) != len(points):
            raise ValueError("point labels must be distinct")
        opens = tuple(sorted({tuple(o) for o in self.opens}))
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "opens", opens)
        if check:
            verdict = is_ltopology(self.frame, len(points), opens)
            if not verdict:
                raise TopologyError(verdict)

    @property
    def n_points(self) -> int:
        return len(self.points)

    @cached_property
    def open_set(self) -> frozenset:
        return frozenset(self.opens)

    @cached_property
    def _point_index(self) -> dict:
        return {p: i for i, p in enumerate(self.points)}

    def is_open(self, nu: LSet) -> bool:
        return tuple(nu) in self.open_set

    def point_index(self, label: Hashable) -> int:
        try:
            return self._point_index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not a point of this space") from None

    def lset_labels(self, nu: LSet) -> tuple:
        return tuple(self.frame.label(v) for v in nu)

    def __repr__(self):
        return f"LTopSpace(points={list(self.points)!r}, {len(self.opens)} opens over {self.frame!r})"


def indiscrete_space(L: Frame, points: Sequence) -> LTopSpace:
    n = len(points)
    return LTopSpace(L, tuple(points), {constant_lset(L, n, L.bottom), constant_lset(L, n, L.top)})


def discrete_space(L: Frame, points: Sequence, cap: int = DEFAULT_POINT_CAP) -> LTopSpace:
    """All of L^X open."""
    n = len(points)
    if L.size ** n > cap:
        raise CapExceeded("discrete_space", cap, L.size ** n)
    return LTopSpace(L, tuple(points), itertools.product(range(L.size), repeat=n), check=False)


def sierpinski_space(L: Frame) -> LTopSpace:
    """L with the L-topology generated by the identity L-set."""
    ident = tuple(range(L.size))
    return LTopSpace(L, L.labels, generate_topology(L, L.size, [ident]), check=False)


class SierpinskiPower:
    """The product of copies of the Sierpinski space indexed by ``index``.

    Points are tuples of frame elements, numbered in the same mixed-radix
    order that :func:`product_space` uses, but never listed: the carrier of a
    power is usually far too large.  The topology is known through its
    generating projections, which is enough to build subspaces on small sets
    of points.
    """

    def __init__(self, frame: Frame, index: Sequence):
        self.frame = frame
        self.index = tuple(index)

    @property
    def arity(self) -> int:
        return len(self.index)

    @property
    def n_points(self) -> int:
        return self.frame.size ** self.arity

    def encode(self, coords: Sequence[int]) -> int:
        i = 0
        for c in coords:
            i = i * self.frame.size + c
        return i

    def decode(self, i: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.arity):
            i, c = divmod(i, self.frame.size)
            out.append(c)
        return tuple(reversed(out))

    def point_label(self, i: int) -> tuple:
        return tuple(self.frame.label(c) for c in self.decode(i))

    def subspace(self, point_indices: Iterable[int]) -> LTopSpace:
        """Subspace on the given points, generated by the restricted projections."""
        chosen = sorted(set(point_indices))
        coords = [self.decode(i) for i in chosen]
        gens = [tuple(c[k] for c in coords) for k in range(self.arity)]
        opens = generate_topology(self.frame, len(chosen), gens)
        return LTopSpace(self.frame, [self.point_label(i) for i in chosen], opens, check=False)

    def materialize(self, cap: int = DEFAULT_POINT_CAP) -> LTopSpace:
        S = sierpinski_space(self.frame)
        space, _ = product_space([S] * self.arity, frame=self.frame, cap=cap)
        return space

    def __repr__(self):
        return f"SierpinskiPower({self.frame!r}, arity={self.arity})"


# -- maps ---------------------------------------------------------------------

@dataclass(frozen=True)
class StructuredMap:
    source: LTopSpace
    target: LTopSpace | SierpinskiPower
    mapping: tuple
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        mapping = tuple(self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if len(mapping) != self.source.n_points:
            raise ValueError("mapping must be total on the source points")
        n = self.target.n_points
        if any(not (isinstance(y, int) and 0 <= y < n) for y in mapping):
            raise ValueError("mapping values must be target point indices")
        if self.source.frame != self.target.frame:
            raise ValueError("source and target must share a frame")

    @classmethod
    def identity(cls, space: LTopSpace) -> "StructuredMap":
        return cls(space, space, tuple(range(space.n_points)))

    @classmethod
    def from_labels(cls, source: LTopSpace, target: LTopSpace, assignment: dict) -> "StructuredMap":
        return cls(source, target,
                   tuple(target.point_index(assignment[p]) for p in source.points))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def compose(self, inner: "StructuredMap") -> "StructuredMap":
        """self o inner."""
        return StructuredMap(inner.source, self.target, tuple(self.mapping[x] for x in inner.mapping))

    def preimage(self, nu: LSet) -> LSet:
        return preimage_lset(self.mapping, nu)

    def image(self, mu: LSet) -> LSet:
        return image_lset(self.mapping, mu, self.source.frame, self.target.n_points)

    def image_points(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.mapping)))

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.n_points

    def as_labels(self) -> dict:
        tgt = self.target
        label = tgt.point_label if isinstance(tgt, SierpinskiPower) else tgt.points.__getitem__
        return {p: label(y) for p, y in zip(self.source.points, self.mapping)}


MAP_KINDS = ("continuous", "open", "embedding", "homeomorphism", "quotient")


def map_predicate(f: StructuredMap, kind: str) -> Check:
    if kind not in MAP_KINDS:
        raise ValueError(f"unknown map predicate {kind!r}")
    if kind not in f._cache:
        f._cache[kind] = _PREDICATES[kind](f)
    return f._cache[kind]


def _explicit(f: StructuredMap) -> StructuredMap:
    if isinstance(f.target, SierpinskiPower):
        return StructuredMap(f.source, f.target.materialize(), f.mapping)
    return f


def _corestriction(f: StructuredMap) -> StructuredMap:
    image = f.image_points()
    if isinstance(f.target, SierpinskiPower):
        sub = f.target.subspace(image)
    else:
        sub = subspace(f.target, image)
    pos = {y: i for i, y in enumerate(image)}
    return StructuredMap(f.source, sub, tuple(pos[y] for y in f.mapping))


def _continuous(f: StructuredMap) -> Check:
    if isinstance(f.target, SierpinskiPower):
        return _continuous(_corestriction(f))
    for nu in f.target.opens:
        if not f.source.is_open(f.preimage(nu)):
            return Check(False, "preimage of an open is not open", f.target.lset_labels(nu))
    return Check(True)


def _open(f: StructuredMap) -> Check:
    f = _explicit(f)
    for mu in f.source.opens:
        if not f.target.is_open(f.image(mu)):
            return Check(False, "image of an open is not open", f.source.lset_labels(mu))
    return Check(True)


def _first_collision(f: StructuredMap):
    seen = {}
    for x, y in enumerate(f.mapping):
        if y in seen:
            return (f.source.points[seen[y]], f.source.points[x])
        seen[y] = x
    return None


def _homeomorphism(f: StructuredMap) -> Check:
    f = _explicit(f)
    clash = _first_collision(f)
    if clash is not None:
        return Check(False, "not injective", clash)
    if not f.is_surjective():
        missed = next(y for y in range(f.target.n_points) if y not in set(f.mapping))
        return Check(False, "not surjective", f.target.points[missed])
    c = _continuous(f)
    if not c:
        return c
    inverse = [0] * len(f.mapping)
    for x, y in enumerate(f.mapping):
        inverse[y] = x
    c = _continuous(StructuredMap(f.target, f.source, tuple(inverse)))
    if not c:
        return Check(False, "inverse not continuous", c.witness)
    return Check(True)


def _embedding(f: StructuredMap) -> Check:
    clash = _first_collision(f)
    if clash is not None:
        return Check(False, "not injective", clash)
    return _homeomorphism(_corestriction(f))


def _quotient(f: StructuredMap) -> Check:
    f = _explicit(f)
    if not f.is_surjective():
        missed = next(y for y in range(f.target.n_points) if y not in set(f.mapping))
        return Check(False, "not surjective", f.target.points[missed])
    c = _continuous(f)
    if not c:
        return c
    for nu in quotient_opens(f.source, f.mapping, f.target.n_points):
        if not f.target.is_open(nu):
            return Check(False, "open of the quotient topology missing", f.target.lset_labels(nu))
    return Check(True)


_PREDICATES = {
    "continuous": _continuous,
    "open": _open,
    "embedding": _embedding,
    "homeomorphism": _homeomorphism,
    "quotient": _quotient,
}


def pullback_collision(f: StructuredMap):
    """First pair of distinct target opens with equal preimages, or None."""
    seen: dict = {}
    for nu in f.target.opens:
        pre = f.preimage(nu)
        if pre in seen:
            return seen[pre], nu
        seen[pre] = nu
    return None


# -- map search ---------------------------------------------------------------

def continuous_map_tables(
    A: LTopSpace,
    B: LTopSpace,
    fixed: dict[int, int] | None = None,
    injective: bool = False,
    cap: int = DEFAULT_SEARCH_CAP,
) -> Iterator[tuple[int, ...]]:
    """Continuous point functions A -> B, lexicographic by table.

    Points are assigned with the ``fixed`` ones first.  A branch is cut as
    soon as some open of B pulls back to an L-set that agrees with no open of
    A on the points assigned so far.
    """
    n = A.n_points
    fixed = dict(fixed or {})
    order = sorted(fixed) + [i for i in range(n) if i not in fixed]
    prefixes = [set() for _ in range(n + 1)]
    for mu in A.opens:
        for k in range(n + 1):
            prefixes[k].add(tuple(mu[order[j]] for j in range(k)))
    deltas = B.opens
    table = [0] * n
    used: set[int] = set()
    nodes = 0

    def extend(k: int, partial: list[tuple]):
        nonlocal nodes
        if k == n:
            yield tuple(table)
            return
        x = order[k]
        choices = [fixed[x]] if x in fixed else range(B.n_points)
        for v in choices:
            nodes += 1
            if nodes > cap:
                raise CapExceeded("continuous map search", cap)
            if injective and v in used:
                continue
            nxt = [p + (nu[v],) for p, nu in zip(partial, deltas)]
            if all(p in prefixes[k + 1] for p in nxt):
                table[x] = v
                used.add(v)
                yield from extend(k + 1, nxt)
                used.discard(v)

    yield from extend(0, [()] * len(deltas))


def find_homeomorphism(A: LTopSpace, B: LTopSpace, max_points: int = 8) -> StructuredMap | None:
    """Search for a homeomorphism A -> B by bijection search."""
    if A.frame != B.frame or A.n_points != B.n_points or len(A.opens) != len(B.opens):
        return None
    if A.n_points > max_points:
        raise CapExceeded("find_homeomorphism", max_points, A.n_points)
    # a continuous bijection between finite spaces with equally many opens is a homeomorphism
    for table in continuous_map_tables(A, B, injective=True):
        return StructuredMap(A, B, table)
    return None


# -- constructions ------------------------------------------------------------

def subspace(S: LTopSpace, Y: Iterable[int]) -> LTopSpace:
    chosen = sorted(set(Y))
    for y in chosen:
        if not 0 <= y < S.n_points:
            raise KeyError(f"{y!r} is not a point index")
    opens = {tuple(mu[y] for y in chosen) for mu in S.opens}
    return LTopSpace(S.frame, [S.points[y] for y in chosen], opens, check=False)


def inclusion(S: LTopSpace, Y: Iterable[int]) -> StructuredMap:
    chosen = sorted(set(Y))
    return StructuredMap(subspace(S, chosen), S, tuple(chosen))


def initial_topology(points: Sequence, L: Frame, family: Iterable[tuple[Sequence[int], LTopSpace]]) -> LTopSpace:
    """Initial L-topology on ``points`` induced by (point function, target space) pairs."""
    n = len(points)
    gens = []
    for mapping, target in family:
        if target.frame != L:
            raise ValueError("every target must be over the same frame")
        if len(mapping) != n:
            raise ValueError("every point function must be total on the points")
        gens.extend(preimage_lset(mapping, nu) for nu in target.opens)
    return LTopSpace(L, tuple(points), generate_topology(L, n, gens), check=False)


def product_space(
    spaces: Sequence[LTopSpace],
    frame: Frame | None = None,
    cap: int = DEFAULT_POINT_CAP,
) -> tuple[LTopSpace, list[StructuredMap]]:
    """Product with the initial topology of the projections."""
    spaces = list(spaces)
    if frame is None:
        if not spaces:
            raise ValueError("the empty product needs an explicit frame")
        frame = spaces[0].frame
    if any(s.frame != frame for s in spaces):
        raise ValueError("factors must share a frame")
    size = 1
    for s in spaces:
        size *= s.n_points
    if size > cap:
        raise CapExceeded("product_space", cap, size)
    tuples = list(itertools.product(*(range(s.n_points) for s in spaces)))
    labels = [tuple(s.points[i] for s, i in zip(spaces, t)) for t in tuples]
    family = [(tuple(t[k] for t in tuples), s) for k, s in enumerate(spaces)]
    prod = initial_topology(labels, frame, family)
    projections = [StructuredMap(prod, s, mapping) for mapping, s in family]
    return prod, projections


def quotient_opens(S: LTopSpace, mapping: Sequence[int], n_target: int) -> set[LSet]:
    """tau/f for surjective f: the opens constant on fibres, pushed down."""
    reps = {}
    for x, y in enumerate(mapping):
        reps.setdefault(y, x)
    if len(reps) != n_target:
        raise PreconditionError("quotient map must be surjective")
    out = set()
    for mu in S.opens:
        if all(mu[x] == mu[reps[y]] for x, y in enumerate(mapping)):
            out.add(tuple(mu[reps[y]] for y in range(n_target)))
    return out


def quotient_opens_bruteforce(S: LTopSpace, mapping: Sequence[int], n_target: int,
                              cap: int = DEFAULT_SEARCH_CAP) -> set[LSet]:
    """tau/f by filtering every L-set on the target."""
    L = S.frame
    if L.size ** n_target > cap:
        raise CapExceeded("quotient_opens_bruteforce", cap, L.size ** n_target)
    return {nu for nu in itertools.product(range(L.size), repeat=n_target)
            if S.is_open(preimage_lset(mapping, nu))}


def quotient_space(S: LTopSpace, mapping: Sequence[int], points: Sequence | None = None) -> LTopSpace:
    mapping = tuple(mapping)
    n_target = len(points) if points is not None else (max(mapping) + 1 if mapping else 0)
    if points is None:
        points = tuple(range(n_target))
    return LTopSpace(S.frame, tuple(points), quotient_opens(S, mapping, n_target), check=False)


def is_t0(S: LTopSpace) -> Check:
    seen = {}
    for x in range(S.n_points):
        sig = tuple(mu[x] for mu in S.opens)
        if sig in seen:
            return Check(False, "points not separated by any open", (S.points[seen[sig]], S.points[x]))
        seen[sig] = x
    return Check(True)


def t0_reflection(S: LTopSpace) -> tuple[LTopSpace, StructuredMap]:
    """Quotient by 'no open separates x and y'; classes labelled by their member tuples."""
    classes: dict[tuple, int] = {}
    members: list[list] = []
    mapping = []
    for x in range(S.n_points):
        sig = tuple(mu[x] for mu in S.opens)
        if sig not in classes:
            classes[sig] = len(members)
            members.append([])
        members[classes[sig]].append(S.points[x])
        mapping.append(classes[sig])
    quotient = quotient_space(S, mapping, [tuple(m) for m in members])
    return quotient, StructuredMap(S, quotient, tuple(mapping))


def evaluation_embedding(S: LTopSpace, require_t0: bool = True) -> StructuredMap:
    """x |-> (mu(x))_mu into the power of the Sierpinski space indexed by the opens."""
    if require_t0:
        verdict = is_t0(S)
        if not verdict:
            raise PreconditionError(f"space is not T0: {verdict.witness!r}")
    power = SierpinskiPower(S.frame, [S.lset_labels(mu) for mu in S.opens])
    mapping = tuple(power.encode([mu[x] for mu in S.opens]) for x in range(S.n_points))
    return StructuredMap(S, power, mapping)
