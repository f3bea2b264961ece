"""Finite frames, frame maps and generated subframes.

A finite frame is a finite distributive lattice; arbitrary joins reduce to
binary joins plus the empty join, so everything here is decidable by
scanning tables.  Elements are addressed by index; labels are only used for
input and output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .errors import CapExceeded, Check, FrameError

DEFAULT_MAP_CAP = 10**6


class Frame:
    """A validated finite frame.

    Use :func:`validate_frame` (or one of the named constructors) rather
    than calling the constructor, which trusts its tables.
    """

    __slots__ = ("labels", "leq", "meet_table", "join_table", "bottom", "top", "_index")

    def __init__(self, labels, leq, meet_table, join_table, bottom, top):
        self.labels = tuple(labels)
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self.meet_table = tuple(tuple(row) for row in meet_table)
        self.join_table = tuple(tuple(row) for row in join_table)
        self.bottom = bottom
        self.top = top
        self._index = {label: i for i, label in enumerate(self.labels)}

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(range(len(self.labels)))

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not an element of this frame") from None

    def label(self, i: int):
        return self.labels[i]

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet_all(self, elements: Iterable[int]) -> int:
        out = self.top
        for e in elements:
            out = self.meet_table[out][e]
        return out

    def join_all(self, elements: Iterable[int]) -> int:
        out = self.bottom
        for e in elements:
            out = self.join_table[out][e]
        return out

    def __eq__(self, other):
        if not isinstance(other, Frame):
            return NotImplemented
        return self.labels == other.labels and self.leq == other.leq

    def __hash__(self):
        return hash((self.labels, self.leq))

    def __repr__(self):
        return f"Frame({list(self.labels)!r})"


def validate_frame(labels: Sequence[Hashable], leq: Sequence[Sequence[bool]]) -> Frame:
    """Build a Frame from a carrier and an order matrix.

    Meets and joins are derived from the order.  Raises FrameError naming the
    first violated axiom and a witnessing tuple of labels.
    """
    labels = tuple(labels)
    n = len(labels)
    if n == 0:
        raise FrameError("empty-carrier", (), "a frame needs at least one element")
    if len(set(labels)) != n:
        dup = next(l for l in labels if labels.count(l) > 1)
        raise FrameError("duplicate-label", (dup,))
    if len(leq) != n or any(len(row) != n for row in leq):
        raise FrameError("not-square", (), "order matrix must be |elements| x |elements|")
    le = [[bool(v) for v in row] for row in leq]

    for a in range(n):
        if not le[a][a]:
            raise FrameError("not-a-poset", (labels[a],), "order is not reflexive")
    for a, b in itertools.combinations(range(n), 2):
        if le[a][b] and le[b][a]:
            raise FrameError("not-a-poset", (labels[a], labels[b]), "order is not antisymmetric")
    for a, b, c in itertools.product(range(n), repeat=3):
        if le[a][b] and le[b][c] and not le[a][c]:
            raise FrameError("not-a-poset", (labels[a], labels[b], labels[c]),
                             "order is not transitive")

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            m = _extremum([c for c in range(n) if le[c][a] and le[c][b]], le, greatest=True)
            if m is None:
                raise FrameError("missing-meet", (labels[a], labels[b]))
            j = _extremum([c for c in range(n) if le[a][c] and le[b][c]], le, greatest=False)
            if j is None:
                raise FrameError("missing-join", (labels[a], labels[b]))
            meet[a][b] = meet[b][a] = m
            join[a][b] = join[b][a] = j

    bottom = next(c for c in range(n) if all(le[c][x] for x in range(n)))
    top = next(c for c in range(n) if all(le[x][c] for x in range(n)))

    for a, b, c in itertools.product(range(n), repeat=3):
        lhs = meet[a][join[b][c]]
        rhs = join[meet[a][b]][meet[a][c]]
        if lhs != rhs:
            raise FrameError(
                "distributivity", (labels[a], labels[b], labels[c]),
                f"{labels[a]}^({labels[b]}v{labels[c]})={labels[lhs]} but "
                f"({labels[a]}^{labels[b]})v({labels[a]}^{labels[c]})={labels[rhs]}",
            )
    return Frame(labels, le, meet, join, bottom, top)


def _extremum(candidates, le, greatest):
    for c in candidates:
        if all((le[d][c] if greatest else le[c][d]) for d in candidates):
            return c
    return None


def frame_from_covers(labels: Sequence[Hashable], covers: Iterable[tuple]) -> Frame:
    """Validate the frame whose order is the reflexive-transitive closure of ``covers``."""
    labels = tuple(labels)
    n = len(labels)
    idx = {l: i for i, l in enumerate(labels)}
    le = [[i == j for j in range(n)] for i in range(n)]
    for a, b in covers:
        le[idx[a]][idx[b]] = True
    for k in range(n):
        for i in range(n):
            if le[i][k]:
                for j in range(n):
                    if le[k][j]:
                        le[i][j] = True
    return validate_frame(labels, le)


def chain(n: int, labels: Sequence[Hashable] | None = None) -> Frame:
    if labels is None:
        labels = [str(i) for i in range(n)]
    return validate_frame(labels, [[i <= j for j in range(n)] for i in range(n)])


def one_element_frame() -> Frame:
    return chain(1, ["*"])


def two_chain() -> Frame:
    return chain(2, ["0", "1"])


def three_chain() -> Frame:
    return chain(3, ["0", "m", "1"])


def diamond() -> Frame:
    return frame_from_covers(["0", "a", "b", "1"],
                             [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


PENTAGON_LABELS = ("0", "a", "b", "c", "1")


def pentagon_order() -> list[list[bool]]:
    """Order matrix of the pentagon 0<a<c<1, 0<b<1 (not distributive)."""
    up = {"0": set(PENTAGON_LABELS), "a": {"a", "c", "1"}, "b": {"b", "1"},
          "c": {"c", "1"}, "1": {"1"}}
    return [[y in up[x] for y in PENTAGON_LABELS] for x in PENTAGON_LABELS]


NAMED_FRAMES: dict[str, Callable[[], Frame]] = {
    "F1": one_element_frame,
    "F2": two_chain,
    "F3": three_chain,
    "D4": diamond,
}


def named_frame(name: str) -> Frame:
    if name in NAMED_FRAMES:
        return NAMED_FRAMES[name]()
    if name.startswith("C") and name[1:].isdigit():
        return chain(int(name[1:]))
    raise KeyError(f"unknown frame name {name!r}")


def builtin_name(frame: Frame) -> str | None:
    for name, make in NAMED_FRAMES.items():
        if make() == frame:
            return name
    return None


def power_frame(L: Frame, n: int, cap: int = 1024) -> Frame:
    """The frame L^n of n-tuples under the pointwise order."""
    size = L.size ** n
    if size > cap:
        raise CapExceeded("power_frame", cap, size)
    tuples = list(itertools.product(range(L.size), repeat=n))
    pos = {t: i for i, t in enumerate(tuples)}
    labels = [tuple(L.labels[v] for v in t) for t in tuples]
    le = [[all(L.le(a, b) for a, b in zip(s, t)) for t in tuples] for s in tuples]
    meet = [[pos[tuple(L.meet(a, b) for a, b in zip(s, t))] for t in tuples] for s in tuples]
    join = [[pos[tuple(L.join(a, b) for a, b in zip(s, t))] for t in tuples] for s in tuples]
    return Frame(labels, le, meet, join, pos[(L.bottom,) * n], pos[(L.top,) * n])


def lattice_ops(F: Frame, elements: Iterable[int], kind: str) -> int:
    """n-ary meet or join of element indices; the empty meet is top, the empty join bottom."""
    elements = list(elements)
    for e in elements:
        if not (isinstance(e, int) and 0 <= e < F.size):
            raise KeyError(f"{e!r} is not an element index of {F!r}")
    if kind == "meet":
        return F.meet_all(elements)
    if kind == "join":
        return F.join_all(elements)
    raise ValueError(f"kind must be 'meet' or 'join', got {kind!r}")


# -- frame maps ---------------------------------------------------------------

@dataclass(frozen=True)
class FrameMap:
    source: Frame
    target: Frame
    table: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.table[a]

    def compose(self, inner: "FrameMap") -> "FrameMap":
        """self after inner."""
        return FrameMap(inner.source, self.target, tuple(self.table[v] for v in inner.table))

    @classmethod
    def identity(cls, F: Frame) -> "FrameMap":
        return cls(F, F, tuple(range(F.size)))


def is_frame_map(table: Sequence[int], A: Frame, B: Frame) -> Check:
    if len(table) != A.size or any(not (0 <= v < B.size) for v in table):
        raise ValueError("assignment must send every element of the source to a target element")
    if table[A.bottom] != B.bottom:
        return Check(False, "bottom not preserved", (A.label(A.bottom),))
    if table[A.top] != B.top:
        return Check(False, "top not preserved", (A.label(A.top),))
    for a, b in itertools.combinations_with_replacement(range(A.size), 2):
        if table[A.meet(a, b)] != B.meet(table[a], table[b]):
            return Check(False, "meet not preserved", (A.label(a), A.label(b)))
        if table[A.join(a, b)] != B.join(table[a], table[b]):
            return Check(False, "join not preserved", (A.label(a), A.label(b)))
    return Check(True)


def enumerate_frame_maps(A: Frame, B: Frame, cap: int = DEFAULT_MAP_CAP) -> list[FrameMap]:
    """All frame maps A -> B, sorted lexicographically by table.

    Backtracking over A's elements in index order; every constraint
    (order, meet, join) is checked as soon as all the elements it mentions
    are assigned, so each leaf is a frame map.
    """
    n = A.size
    table: list[int | None] = [None] * n
    table[A.bottom] = B.bottom
    if table[A.top] is not None and table[A.top] != B.top:
        return []
    table[A.top] = B.top
    free = [i for i in range(n) if table[i] is None]

    # constraints (x, y, result) with the operation to apply
    triples = [(a, b, A.meet(a, b), B.meet) for a in range(n) for b in range(a, n)]
    triples += [(a, b, A.join(a, b), B.join) for a in range(n) for b in range(a, n)]
    # each constraint is checked when its last variable is assigned
    rank = {i: -1 for i in range(n) if i not in free}
    rank.update({v: k for k, v in enumerate(free)})
    due: list[list] = [[] for _ in free]
    initial = []
    for a, b, r, op in triples:
        last = max(rank[a], rank[b], rank[r])
        (initial if last < 0 else due[last]).append((a, b, r, op))
    order_due: list[list] = [[] for _ in free]
    for a in range(n):
        for b in range(n):
            if a != b and A.le(a, b):
                last = max(rank[a], rank[b])
                if last >= 0:
                    order_due[last].append((a, b))
    if any(table[r] != op(table[a], table[b]) for a, b, r, op in initial):
        return []

    out: list[FrameMap] = []
    nodes = 0

    def extend(k: int):
        nonlocal nodes
        if k == len(free):
            out.append(FrameMap(A, B, tuple(table)))
            return
        i = free[k]
        for v in range(B.size):
            nodes += 1
            if nodes > cap:
                raise CapExceeded("enumerate_frame_maps", cap)
            table[i] = v
            if all(B.le(table[a], table[b]) for a, b in order_due[k]) and all(
                table[r] == op(table[a], table[b]) for a, b, r, op in due[k]
            ):
                extend(k + 1)
        table[i] = None

    extend(0)
    return out


# -- generated subframes ------------------------------------------------------

def generated_closure(generators: Iterable, meet, join, bottom, top) -> set:
    """All joins of finite meets of ``generators`` (empty meet and empty join included)."""
    gens = list(dict.fromkeys(generators))
    meets = {top}
    frontier = [top]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                m = meet(a, g)
                if m not in meets:
                    meets.add(m)
                    fresh.append(m)
        frontier = fresh
    meets_list = list(meets)
    joins = {bottom}
    frontier = [bottom]
    while frontier:
        fresh = []
        for a in frontier:
            for m in meets_list:
                j = join(a, m)
                if j not in joins:
                    joins.add(j)
                    fresh.append(j)
        frontier = fresh
    return joins


@dataclass(frozen=True)
class SubframeSubset:
    ambient: Frame
    members: frozenset[int]

    def __contains__(self, a):
        return a in self.members

    def __len__(self):
        return len(self.members)

    def labels(self) -> list:
        return [self.ambient.label(i) for i in sorted(self.members)]


def generate_subframe(F: Frame, zeta: Iterable[int]) -> SubframeSubset:
    zeta = list(zeta)
    for z in zeta:
        if not 0 <= z < F.size:
            raise KeyError(f"{z!r} is not an element index of {F!r}")
    members = generated_closure(zeta, F.meet, F.join, F.bottom, F.top)
    return SubframeSubset(F, frozenset(members))


def is_subframe(F: Frame, members: Iterable[int]) -> Check:
    members = set(members)
    for a, b in itertools.combinations_with_replacement(sorted(members), 2):
        if F.meet(a, b) not in members:
            return Check(False, "not closed under meet", (F.label(a), F.label(b)))
        if F.join(a, b) not in members:
            return Check(False, "not closed under join", (F.label(a), F.label(b)))
    if F.bottom not in members:
        return Check(False, "missing bottom", (F.label(F.bottom),))
    if F.top not in members:
        return Check(False, "missing top", (F.label(F.top),))
    return Check(True)
