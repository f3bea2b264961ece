"""Points of an L-topology, the spectrum space and sobrification."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Check, PreconditionError
from .frames import DEFAULT_MAP_CAP, Frame, FrameMap, enumerate_frame_maps
from .spaces import (
    LSet,
    LTopSpace,
    StructuredMap,
    is_t0,
    lset_join,
    lset_le,
    lset_meet,
    map_predicate,
    pullback_collision,
)


def topology_frame(S: LTopSpace) -> Frame:
    """The opens of S as a frame under the pointwise order, indexed like ``S.opens``."""
    L = S.frame
    opens = S.opens
    pos = {mu: i for i, mu in enumerate(opens)}
    le = [[lset_le(L, a, b) for b in opens] for a in opens]
    meet = [[pos[lset_meet(L, a, b)] for b in opens] for a in opens]
    join = [[pos[lset_join(L, a, b)] for b in opens] for a in opens]
    n = S.n_points
    return Frame(opens, le, meet, join, pos[(L.bottom,) * n], pos[(L.top,) * n])


def points(S: LTopSpace, cap: int = DEFAULT_MAP_CAP) -> list[FrameMap]:
    """pt_L of the topology: every frame map from the opens into L."""
    return enumerate_frame_maps(topology_frame(S), S.frame, cap=cap)


def _evaluation(S: LTopSpace, x: int) -> tuple[int, ...]:
    return tuple(mu[x] for mu in S.opens)


@dataclass(frozen=True)
class PointSpace:
    """The spectrum (pt_L tau, phi_L(tau)) of a space.

    ``space.points`` are labels ``p0, p1, ...`` in canonical order; the frame
    map behind each label is ``points[i]``.
    """

    base: LTopSpace
    points: tuple[FrameMap, ...]
    space: LTopSpace

    def table(self, i: int) -> tuple[int, ...]:
        return self.points[i].table

    def tables_by_label(self) -> dict:
        L = self.base.frame
        return {label: [L.label(v) for v in p.table] for label, p in zip(self.space.points, self.points)}


def phi_values(S: LTopSpace, pts: list[FrameMap], k: int) -> LSet:
    return tuple(p.table[k] for p in pts)


def point_space(S: LTopSpace, cap: int = DEFAULT_MAP_CAP) -> PointSpace:
    pts = points(S, cap=cap)
    opens = [phi_values(S, pts, k) for k in range(len(S.opens))]
    labels = [f"p{i}" for i in range(len(pts))]
    return PointSpace(S, tuple(pts), LTopSpace(S.frame, labels, opens, check=False))


def phi(S: LTopSpace, mu: LSet, ps: PointSpace | None = None) -> LSet:
    """phi_L(mu)(p) = p(mu)."""
    mu = tuple(mu)
    if not S.is_open(mu):
        raise PreconditionError("phi is only defined on opens")
    ps = ps or point_space(S)
    return phi_values(S, list(ps.points), S.opens.index(mu))


def eta(S: LTopSpace, ps: PointSpace | None = None) -> StructuredMap:
    """x |-> evaluation at x, a point of the opens."""
    ps = ps or point_space(S)
    where = {p.table: i for i, p in enumerate(ps.points)}
    mapping = []
    for x in range(S.n_points):
        ev = _evaluation(S, x)
        if ev not in where:
            raise AssertionError(f"evaluation at {S.points[x]!r} is not an enumerated frame map")
        mapping.append(where[ev])
    return StructuredMap(S, ps.space, tuple(mapping))


def is_sober(S: LTopSpace, ps: PointSpace | None = None) -> Check:
    ps = ps or point_space(S)
    L = S.frame
    realizers: dict[tuple, list] = {p.table: [] for p in ps.points}
    for x in range(S.n_points):
        realizers[_evaluation(S, x)].append(S.points[x])
    for label, p in zip(ps.space.points, ps.points):
        found = realizers[p.table]
        if not found:
            return Check(False, "point of the opens not realized",
                         (label, tuple(L.label(v) for v in p.table)))
        if len(found) > 1:
            return Check(False, "point of the opens realized more than once", (label, tuple(found)))
    return Check(True)


def sobrify(S: LTopSpace, cap: int = DEFAULT_MAP_CAP) -> tuple[LTopSpace, StructuredMap]:
    ps = point_space(S, cap=cap)
    return ps.space, eta(S, ps)


def firm_factorization(f: StructuredMap, ps: PointSpace | None = None) -> tuple[StructuredMap, StructuredMap]:
    """For an epimorphic embedding f: X -> Y of T0 spaces with Y sober, return (f*, g).

    f*: pt(X) -> Y sends p to the unique y with p(nu o f) = nu(y); g sends y
    to the point mu |-> mu_f(y), where mu_f is the unique open of Y pulling
    back to mu.
    """
    X, Y = f.source, f.target
    for name, space in (("source", X), ("target", Y)):
        if not is_t0(space):
            raise PreconditionError(f"{name} is not T0")
    if not map_predicate(f, "embedding"):
        raise PreconditionError("f is not an embedding")
    clash = pullback_collision(f)
    if clash is not None:
        raise PreconditionError(f"f is not an epimorphism of T0 spaces: {clash!r} pull back equally")
    if not is_sober(Y):
        raise PreconditionError("target is not sober")

    ps = ps or point_space(X)
    pos = {mu: i for i, mu in enumerate(X.opens)}
    pulled = [pos[f.preimage(nu)] for nu in Y.opens]

    fstar = []
    for p in ps.points:
        want = tuple(p.table[k] for k in pulled)
        hits = [y for y in range(Y.n_points) if all(nu[y] == w for nu, w in zip(Y.opens, want))]
        if len(hits) != 1:
            raise AssertionError(f"{len(hits)} realizers of a point in a sober target")
        fstar.append(hits[0])

    mu_f = []
    for mu in X.opens:
        hits = [nu for nu in Y.opens if f.preimage(nu) == mu]
        if len(hits) != 1:
            raise AssertionError(f"{len(hits)} opens of the target pull back to {mu!r}")
        mu_f.append(hits[0])
    where = {p.table: i for i, p in enumerate(ps.points)}
    g = []
    for y in range(Y.n_points):
        table = tuple(nu[y] for nu in mu_f)
        if table not in where:
            raise AssertionError("g(y) is not a frame map")
        g.append(where[table])
    return StructuredMap(ps.space, Y, tuple(fstar)), StructuredMap(Y, ps.space, tuple(g))
