"""Exhaustive categorical checks over finite universes of spaces.

Quantifiers over "every space" are replaced by an explicit TestFamily, and
every report names the universe it ran over: a pass certifies that universe
and nothing more.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .documents import WorkbenchDocument, document_to_dict
from .errors import Check, PreconditionError
from .fixtures import fixture_spaces
from .frames import Frame, enumerate_frame_maps, is_frame_map, named_frame
from .sober import firm_factorization, is_sober, point_space, sobrify, eta
from .spaces import (
    DEFAULT_POINT_CAP,
    DEFAULT_SEARCH_CAP,
    LTopSpace,
    SierpinskiPower,
    StructuredMap,
    continuous_map_tables,
    find_homeomorphism,
    generate_topology,
    indiscrete_space,
    initial_topology,
    is_ltopology,
    is_t0,
    lset_join,
    lset_meet,
    map_predicate,
    product_space,
    pullback_collision,
    sierpinski_space,
    t0_reflection,
    evaluation_embedding,
)


# -- universes and reports ------------------------------------------------------

@dataclass(frozen=True)
class Member:
    name: str
    space: LTopSpace
    t0: bool | None = None      # declared membership; None means "compute it"
    sober: bool | None = None


@dataclass(frozen=True)
class TestFamily:
    __test__ = False  # not a pytest class

    frame: Frame
    members: tuple[Member, ...]
    max_maps: int = DEFAULT_SEARCH_CAP

    @classmethod
    def of(cls, frame: Frame, spaces: dict[str, LTopSpace], **kw) -> "TestFamily":
        return cls(frame, tuple(Member(n, s) for n, s in spaces.items()), **kw)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def declared_t0(self, m: Member) -> bool:
        return bool(is_t0(m.space)) if m.t0 is None else m.t0

    def declared_sober(self, m: Member) -> bool:
        return bool(is_sober(m.space)) if m.sober is None else m.sober

    def t0_part(self) -> "TestFamily":
        return self.restrict(m for m in self.members if self.declared_t0(m))

    def sober_part(self) -> "TestFamily":
        return self.restrict(m for m in self.members if self.declared_sober(m))

    def restrict(self, members: Iterable[Member]) -> "TestFamily":
        return TestFamily(self.frame, tuple(members), self.max_maps)

    def describe(self) -> str:
        return f"{_frame_name(self.frame)}{{{','.join(m.name for m in self.members)}}}"


def fixture_family(frame: Frame | str, max_points: int = 3, max_maps: int = DEFAULT_SEARCH_CAP) -> TestFamily:
    L = named_frame(frame) if isinstance(frame, str) else frame
    return TestFamily.of(L, fixture_spaces(L, max_points), max_maps=max_maps)


def _frame_name(L: Frame) -> str:
    from .frames import builtin_name
    return builtin_name(L) or f"L{L.size}"


@dataclass
class VerificationReport:
    claim: str
    passed: bool
    cases: int
    universe: str
    counterexample: dict | None = None
    parts: list["VerificationReport"] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def lines(self, indent: str = "") -> list[str]:
        out = [f"{indent}{self.status.upper()} {self.claim}: {self.cases} cases over {self.universe}"]
        for part in self.parts:
            out.extend(part.lines(indent + "  "))
        return out

    def to_dict(self) -> dict:
        d = {"claim": self.claim, "status": self.status, "cases": self.cases, "universe": self.universe}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.parts:
            d["parts"] = [p.to_dict() for p in self.parts]
        return d

    def first_failure(self) -> "VerificationReport | None":
        if self.passed:
            return None
        for p in self.parts:
            hit = p.first_failure()
            if hit is not None:
                return hit
        return self


def _combine(claim: str, universe: str, parts: list[VerificationReport]) -> VerificationReport:
    return VerificationReport(claim, all(p.passed for p in parts), sum(p.cases for p in parts), universe,
                              parts=parts)


def counterexample(note: str, spaces: dict[str, LTopSpace], maps: dict[str, StructuredMap] | None = None,
                   **extra) -> dict:
    """A replayable payload: a workbench document plus a note."""
    wb = WorkbenchDocument(spaces=dict(spaces), maps=dict(maps or {}))
    out = {"note": note, "document": document_to_dict(wb)}
    out.update(extra)
    return out


def _map_doc(f: StructuredMap, names=("X", "Y")) -> dict:
    return {names[0]: f.source, names[1]: f.target}


# -- morphism enumeration and categorical predicates ------------------------------

def enumerate_continuous_maps(A: LTopSpace, B: LTopSpace, cap: int = DEFAULT_SEARCH_CAP) -> list[StructuredMap]:
    return [StructuredMap(A, B, t) for t in continuous_map_tables(A, B, cap=cap)]


CATEGORIES = ("LTop", "LTop0")


def _require_t0(*spaces):
    for s in spaces:
        v = is_t0(s)
        if not v:
            raise PreconditionError(f"category LTop0 needs T0 spaces; {v.witness!r} are not separated")


def is_epimorphism(f: StructuredMap, category: str = "LTop") -> Check:
    if category == "LTop":
        if f.is_surjective():
            return Check(True)
        missed = sorted(set(range(f.target.n_points)) - set(f.mapping))[0]
        return Check(False, "not surjective", f.target.points[missed])
    if category == "LTop0":
        _require_t0(f.source, f.target)
        clash = pullback_collision(f)
        if clash is None:
            return Check(True)
        return Check(False, "distinct opens with equal preimages",
                     tuple(f.target.lset_labels(nu) for nu in clash))
    raise ValueError(f"unknown category {category!r}")


def is_epimorphism_bruteforce(f: StructuredMap, codomains: Iterable[LTopSpace],
                              cap: int = DEFAULT_SEARCH_CAP) -> Check:
    """No two distinct continuous maps out of f's target agree after f, for any given codomain."""
    for Z in codomains:
        seen: dict = {}
        for g in continuous_map_tables(f.target, Z, cap=cap):
            key = tuple(g[y] for y in f.mapping)
            if key in seen:
                return Check(False, "distinct maps coequalized", (Z, seen[key], g))
            seen[key] = g
    return Check(True)


def bracket_closure(S: LTopSpace, M: Iterable[int]) -> frozenset[int]:
    """[M]: points where every pair of opens agreeing on M also agrees.

    Opens are the continuous maps into the Sierpinski space, which is T0 and
    separates parallel maps into any T0 space, so pairs of opens realize
    every equalizer the closure is taken over.
    """
    M = sorted(set(M))
    groups: dict[tuple, list] = {}
    for mu in S.opens:
        groups.setdefault(tuple(mu[x] for x in M), []).append(mu)
    keep = set(range(S.n_points))
    for members in groups.values():
        first = members[0]
        for mu in members[1:]:
            keep = {x for x in keep if mu[x] == first[x]}
    return frozenset(keep)


def bracket_closure_bruteforce(S: LTopSpace, M: Iterable[int], codomains: Iterable[LTopSpace],
                               cap: int = DEFAULT_SEARCH_CAP) -> frozenset[int]:
    """Intersection of Eq(f, g) over continuous pairs into the given T0 codomains agreeing on M."""
    M = sorted(set(M))
    keep = set(range(S.n_points))
    for Y in codomains:
        maps = list(continuous_map_tables(S, Y, cap=cap))
        by_restriction: dict[tuple, list] = {}
        for f in maps:
            by_restriction.setdefault(tuple(f[x] for x in M), []).append(f)
        for group in by_restriction.values():
            for f, g in itertools.combinations(group, 2):
                keep = {x for x in keep if f[x] == g[x]}
    return frozenset(keep)


def is_extremal_mono(f: StructuredMap, category: str = "LTop") -> Check:
    if category not in CATEGORIES:
        raise ValueError(f"unknown category {category!r}")
    emb = map_predicate(f, "embedding")
    if not emb:
        return emb
    if category == "LTop":
        return Check(True)
    _require_t0(f.source, f.target)
    image = frozenset(f.image_points())
    closure = bracket_closure(f.target, image)
    if closure != image:
        extra = sorted(closure - image)[0]
        return Check(False, "image is not [ ]-closed", f.target.points[extra])
    return Check(True)


# -- theorem-level checks ---------------------------------------------------------

def _count_factorizations(r: StructuredMap, f_table: Sequence[int], Y: LTopSpace, cap: int) -> int:
    fixed: dict[int, int] = {}
    for x, y in enumerate(r.mapping):
        if fixed.setdefault(y, f_table[x]) != f_table[x]:
            return 0
    return sum(1 for _ in continuous_map_tables(r.target, Y, fixed=fixed, cap=cap))


REFLECTORS = {
    "t0": (t0_reflection, is_t0, "LTop"),
    "sober": (sobrify, is_sober, "LTop0"),
}


def verify_epireflection(
    reflector: str | Callable[[LTopSpace], tuple[LTopSpace, StructuredMap]],
    domains: TestFamily,
    codomains: TestFamily,
    member: Callable[[LTopSpace], Check] | None = None,
    category: str | None = None,
    claim: str | None = None,
) -> VerificationReport:
    """Every continuous f: S -> Y (Y in the subcategory) factors uniquely through the reflection of S."""
    if isinstance(reflector, str):
        claim = claim or f"{reflector}-reflection"
        reflector, default_member, default_cat = REFLECTORS[reflector]
        member = member or default_member
        category = category or default_cat
    claim = claim or "epireflection"
    member = member or (lambda s: Check(True))
    category = category or "LTop"
    universe = f"domains {domains.describe()} x codomains {codomains.describe()}"
    cap = domains.max_maps

    def fail(cases, note, spaces, maps=None, **extra):
        return VerificationReport(claim, False, cases, universe, counterexample(note, spaces, maps, **extra))

    for m in codomains:
        if not member(m.space):
            return fail(0, f"codomain {m.name} is not in the reflective subcategory", {m.name: m.space})
    cases = 0
    for d in domains:
        R, r = reflector(d.space)
        if not member(R):
            return fail(cases, f"reflection of {d.name} is not in the subcategory", {d.name: d.space, "R": R})
        epi = r.is_surjective() if category == "LTop" else pullback_collision(r) is None
        if not epi:
            return fail(cases, f"reflection morphism of {d.name} is not an epimorphism",
                        {d.name: d.space, "R": R}, {"r": r})
        for c in codomains:
            for f in continuous_map_tables(d.space, c.space, cap=cap):
                cases += 1
                n = _count_factorizations(r, f, c.space, cap)
                if n != 1:
                    fmap = StructuredMap(d.space, c.space, f)
                    return fail(cases, f"{n} factorizations of f through the reflection of {d.name}",
                                {d.name: d.space, c.name: c.space, "R": R}, {"f": fmap, "r": r},
                                factorizations=n)
    return VerificationReport(claim, True, cases, universe)


def verify_sierpinski_object(candidate: LTopSpace, family: TestFamily) -> VerificationReport:
    """For all X, Z in the family and g: Z -> X, g is continuous iff f o g is, for every continuous f: X -> candidate."""
    claim = "sierpinski-object"
    universe = family.describe()
    cases = 0
    for mx in family:
        X = mx.space
        if X.frame != candidate.frame:
            raise ValueError("family and candidate must share a frame")
        to_cand = list(continuous_map_tables(X, candidate, cap=family.max_maps))
        for mz in family:
            Z = mz.space
            for g in itertools.product(range(X.n_points), repeat=Z.n_points):
                cases += 1
                gmap = StructuredMap(Z, X, g)
                lhs = bool(map_predicate(gmap, "continuous"))
                rhs = all(map_predicate(StructuredMap(Z, candidate, tuple(f[y] for y in g)), "continuous")
                          for f in to_cand)
                if lhs != rhs:
                    return VerificationReport(
                        claim, False, cases, universe,
                        counterexample(f"g: {mz.name} -> {mx.name} is {'' if lhs else 'not '}continuous, "
                                       f"but the composites say otherwise",
                                       {mx.name: X, mz.name: Z, "candidate": candidate}, {"g": gmap}))
    return VerificationReport(claim, True, cases, universe)


def verify_injective_cogenerator(candidate: LTopSpace, family: TestFamily) -> VerificationReport:
    universe = family.describe()
    cap = family.max_maps
    cases = 0
    inj = None
    for mx, my in itertools.product(family, repeat=2):
        X, Y = mx.space, my.space
        maps_to_cand = list(continuous_map_tables(X, candidate, cap=cap))
        for e in continuous_map_tables(X, Y, injective=True, cap=cap):
            emap = StructuredMap(X, Y, e)
            if not map_predicate(emap, "embedding"):
                continue
            for f in maps_to_cand:
                cases += 1
                fixed = {e[x]: f[x] for x in range(X.n_points)}
                if next(continuous_map_tables(Y, candidate, fixed=fixed, cap=cap), None) is None:
                    inj = VerificationReport(
                        "injective", False, cases, universe,
                        counterexample(f"f: {mx.name} -> candidate does not extend along e",
                                       {mx.name: X, my.name: Y, "candidate": candidate},
                                       {"e": emap, "f": StructuredMap(X, candidate, f)}))
                    break
            if inj:
                break
        if inj:
            break
    inj = inj or VerificationReport("injective", True, cases, universe)

    cases = 0
    cog = None
    for mx, my in itertools.product(family, repeat=2):
        X, Y = mx.space, my.space
        maps = list(continuous_map_tables(X, Y, cap=cap))
        probes = list(continuous_map_tables(Y, candidate, cap=cap))
        for f, g in itertools.combinations(maps, 2):
            cases += 1
            if not any(any(h[f[x]] != h[g[x]] for x in range(X.n_points)) for h in probes):
                cog = VerificationReport(
                    "cogenerator", False, cases, universe,
                    counterexample(f"no map {my.name} -> candidate separates f and g",
                                   {mx.name: X, my.name: Y, "candidate": candidate},
                                   {"f": StructuredMap(X, Y, f), "g": StructuredMap(X, Y, g)}))
                break
        if cog:
            break
    cog = cog or VerificationReport("cogenerator", True, cases, universe)
    return _combine("injective-cogenerator", universe, [inj, cog])


def _extremum_map(P: LTopSpace, projections: list[StructuredMap], kind: str) -> tuple[int, ...]:
    L = P.frame
    fold = L.join_all if kind == "sup" else L.meet_all
    return tuple(fold(pr.mapping[t] for pr in projections) for t in range(P.n_points))


def check_extremum_continuity(L: Frame, n: int, kind: str) -> tuple[Check, Check, bool]:
    """Continuity of sup (or inf): L_S^n -> L_S by direct preimages and via the projection identity.

    Returns (direct, identity, same LSet): the direct route pulls every open
    of L_S back along the map; the identity route forms the pointwise join
    (meet) of the projections and tests it for openness.
    """
    S = sierpinski_space(L)
    P, projections = product_space([S] * n, frame=L)
    table = _extremum_map(P, projections, kind)
    direct = map_predicate(StructuredMap(P, S, table), "continuous")
    op = lset_join if kind == "sup" else lset_meet
    start = L.bottom if kind == "sup" else L.top
    combined = (start,) * P.n_points
    for pr in projections:
        combined = op(L, combined, pr.mapping)
    all_open = all(P.is_open(pr.mapping) for pr in projections) and P.is_open(combined)
    identity = Check(True) if all_open else Check(False, f"{kind} of projections not open", combined)
    pulled_id = table  # preimage of the identity open is the map itself
    return direct, identity, pulled_id == combined


def verify_manes_conditions(L: Frame, X_sizes: Sequence[int], family: TestFamily | None = None) -> VerificationReport:
    family = family or fixture_family(L)
    universe = f"{_frame_name(L)} sizes {list(X_sizes)} / {family.describe()}"
    parts = []

    parts.append(verify_sierpinski_object(sierpinski_space(L), family))
    parts[-1].claim = "(1) sierpinski object"

    # (2) initial lifts of families into L_S
    S = sierpinski_space(L)
    cases = 0
    bad = None
    for mx in family:
        X = mx.space
        families = [list(X.opens)] + [[mu] for mu in X.opens] + [list(p) for p in itertools.combinations(X.opens, 2)]
        for fam in families:
            sigma = initial_topology(X.points, L, [(mu, S) for mu in fam])
            if not all(sigma.is_open(mu) for mu in fam):
                bad = (mx, fam, sigma, None)
                break
            for mz in family:
                Z = mz.space
                for g in itertools.product(range(X.n_points), repeat=Z.n_points):
                    cases += 1
                    lhs = bool(map_predicate(StructuredMap(Z, sigma, g), "continuous"))
                    rhs = all(Z.is_open(tuple(mu[y] for y in g)) for mu in fam)
                    if lhs != rhs:
                        bad = (mx, fam, sigma, StructuredMap(Z, sigma, g))
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    if bad:
        mx, fam, sigma, g = bad
        parts.append(VerificationReport("(2) initial lifts", False, cases, family.describe(),
                                        counterexample("initial lift fails", {mx.name: mx.space, "lift": sigma},
                                                       {"g": g} if g else None)))
    else:
        parts.append(VerificationReport("(2) initial lifts", True, cases, family.describe()))

    # (3) sup and (4) inf
    for label, kind in (("(3) sup", "sup"), ("(4) inf", "inf")):
        cases = 0
        failure = None
        for n in X_sizes:
            cases += 1
            direct, identity, same = check_extremum_continuity(L, n, kind)
            if not (direct and identity and same):
                failure = counterexample(f"{kind} on {n} coordinates: direct={bool(direct)} "
                                         f"identity={bool(identity)} agree={same}", {})
                break
        parts.append(VerificationReport(label, failure is None, cases, f"{_frame_name(L)} sizes {list(X_sizes)}",
                                        failure))

    # (5) the initial lift of all continuous maps to L_S contains every continuous map
    cases = 0
    failure = None
    for mx in family:
        X = mx.space
        F = list(continuous_map_tables(X, S, cap=family.max_maps))
        sigma = initial_topology(X.points, L, [(f, S) for f in F])
        for g in F:
            cases += 1
            if not sigma.is_open(g):
                failure = counterexample(f"continuous map not in the initial lift on {mx.name}",
                                         {mx.name: X, "lift": sigma})
                break
        if failure:
            break
    parts.append(VerificationReport("(5) lift contains all maps", failure is None, cases, family.describe(), failure))
    return _combine("manes", universe, parts)


# -- suites over a family ------------------------------------------------------------

def check_family_flags(family: TestFamily) -> VerificationReport:
    """Declared T0 / sober flags must match the computed ones."""
    cases = 0
    for m in family:
        for flag, test in (("t0", is_t0), ("sober", is_sober)):
            declared = getattr(m, flag)
            if declared is None:
                continue
            cases += 1
            actual = bool(test(m.space))
            if actual != declared:
                return VerificationReport(
                    "family-flags", False, cases, family.describe(),
                    counterexample(f"{m.name} declared {flag}={declared} but it is {actual}", {m.name: m.space}))
    return VerificationReport("family-flags", True, cases, family.describe())


def verify_t0_reflection(family: TestFamily) -> VerificationReport:
    outputs = VerificationReport("t0 outputs", True, 0, family.describe())
    for m in family:
        outputs.cases += 1
        R, _ = t0_reflection(m.space)
        if not is_t0(R):
            outputs.passed = False
            outputs.counterexample = counterexample(f"reflection of {m.name} is not T0", {m.name: m.space, "R": R})
            break
    uni = verify_epireflection("t0", family, family.t0_part())
    return _combine("t0-reflection", family.describe(), [outputs, uni])


def verify_sober_reflection(family: TestFamily) -> VerificationReport:
    return verify_epireflection("sober", family.t0_part(), family.sober_part(), claim="sober-reflection")


def verify_firmness(family: TestFamily) -> VerificationReport:
    """Epimorphic embeddings into sober spaces factor through the sobrification by an isomorphism."""
    t0s = family.t0_part()
    sobers = family.sober_part()
    universe = f"{t0s.describe()} -> {sobers.describe()} and sobrifications"
    cases = 0
    for mx in t0s:
        X = mx.space
        ps = point_space(X)
        eta_x = eta(X, ps)
        targets = [(my.name, my.space, list(continuous_map_tables(X, my.space, injective=True, cap=family.max_maps)))
                   for my in sobers]
        targets.append(("pt", ps.space, [eta_x.mapping]))
        for yname, Y, tables in targets:
            for t in tables:
                f = StructuredMap(X, Y, t)
                if not map_predicate(f, "embedding") or pullback_collision(f) is not None:
                    continue
                cases += 1
                fstar, g = firm_factorization(f, ps)
                ok = (
                    fstar.compose(eta_x).mapping == f.mapping
                    and fstar.compose(g).mapping == tuple(range(Y.n_points))
                    and g.compose(fstar).mapping == tuple(range(ps.space.n_points))
                    and map_predicate(fstar, "continuous")
                    and map_predicate(g, "continuous")
                )
                if not ok:
                    return VerificationReport(
                        "firmness", False, cases, universe,
                        counterexample(f"firm factorization fails for f: {mx.name} -> {yname}",
                                       {mx.name: X, yname: Y}, {"f": f}))
    return VerificationReport("firmness", True, cases, universe)


def verify_bracket_laws(family: TestFamily, max_points: int = 3, power_cap: int = DEFAULT_POINT_CAP) -> VerificationReport:
    """Closure-operator laws for [ ] on small members, and the spectrum of each T0
    member being a [ ]-closed subspace of the Sierpinski power indexed by its opens."""
    cases = 0
    laws = None
    for m in family:
        S = m.space
        if S.n_points > max_points:
            continue
        subsets = [frozenset(c) for k in range(S.n_points + 1) for c in itertools.combinations(range(S.n_points), k)]
        closures = {M: bracket_closure(S, M) for M in subsets}
        for M in subsets:
            cases += 1
            C = closures[M]
            if not M <= C or bracket_closure(S, C) != C:
                laws = (m, M)
                break
            for N in subsets:
                if M <= N and not C <= closures[N]:
                    laws = (m, M)
                    break
            if laws:
                break
        if laws:
            break
    if laws:
        m, M = laws
        law_report = VerificationReport("closure laws", False, cases, family.describe(),
                                        counterexample(f"[ ] law fails on {m.name} at {sorted(M)}", {m.name: m.space}))
    else:
        law_report = VerificationReport("closure laws", True, cases, family.describe())

    cases = 0
    closed = None
    for m in family.t0_part():
        ok, _ = spectrum_is_closed_in_power(m.space, power_cap)
        if ok is None:
            continue
        cases += 1
        if not ok:
            closed = m
            break
    if closed:
        closed_report = VerificationReport("spectrum [ ]-closed in power", False, cases, family.describe(),
                                           counterexample(f"spectrum of {closed.name} is not [ ]-closed",
                                                          {closed.name: closed.space}))
    else:
        closed_report = VerificationReport("spectrum [ ]-closed in power", True, cases, family.describe())
    return _combine("bracket-laws", family.describe(), [law_report, closed_report])


def spectrum_is_closed_in_power(X: LTopSpace, power_cap: int = DEFAULT_POINT_CAP):
    """Embed pt(X) into L_S^tau by p |-> (p(mu))_mu and test it is a [ ]-closed embedding.

    Also checks that the [ ]-closure of the evaluation image of X is that same
    set.  Returns (ok, detail) or (None, reason) when the power is over the cap.
    """
    L = X.frame
    power = SierpinskiPower(L, [X.lset_labels(mu) for mu in X.opens])
    if power.n_points > power_cap:
        return None, "power over cap"
    P = power.materialize(cap=power_cap)
    ps = point_space(X)
    j = StructuredMap(ps.space, P, tuple(power.encode(p.table) for p in ps.points))
    if not map_predicate(j, "embedding"):
        return False, "spectrum does not embed"
    image = frozenset(j.mapping)
    if bracket_closure(P, image) != image:
        return False, "spectrum image not [ ]-closed"
    e = evaluation_embedding(X)
    if bracket_closure(P, e.mapping) != image:
        return False, "closure of the evaluation image differs from the spectrum"
    return True, ""


def verify_prop_3_1(family: TestFamily) -> VerificationReport:
    """mu is open iff mu, read as a point function into L_S, is continuous."""
    L = family.frame
    S = sierpinski_space(L)
    cases = 0
    for m in family:
        X = m.space
        for mu in itertools.product(range(L.size), repeat=X.n_points):
            cases += 1
            cont = bool(map_predicate(StructuredMap(X, S, mu), "continuous"))
            if cont != X.is_open(mu):
                return VerificationReport("open-iff-continuous", False, cases, family.describe(),
                                          counterexample(f"L-set {X.lset_labels(mu)} on {m.name}", {m.name: X}))
    return VerificationReport("open-iff-continuous", True, cases, family.describe())


def verify_evaluation_embeddings(family: TestFamily) -> VerificationReport:
    cases = 0
    for m in family:
        cases += 1
        X = m.space
        e = evaluation_embedding(X, require_t0=False)
        t0 = bool(is_t0(X))
        ok = bool(map_predicate(e, "embedding")) if t0 else not e.is_injective()
        projections_ok = all(
            tuple(e.target.decode(y)[k] for y in e.mapping) == mu for k, mu in enumerate(X.opens))
        if not (ok and projections_ok):
            return VerificationReport("evaluation-embedding", False, cases, family.describe(),
                                      counterexample(f"evaluation map of {m.name} (T0={t0})", {m.name: X}))
    return VerificationReport("evaluation-embedding", True, cases, family.describe())


def verify_spectrum(family: TestFamily) -> VerificationReport:
    """phi(tau) is an L-topology, T0 iff eta injective, sober iff eta a homeomorphism,
    sobrification output sober and T0, and a second sobrification is trivial."""
    cases = 0
    for m in family:
        X = m.space
        cases += 1
        ps = point_space(X)
        e = eta(X, ps)
        phis = [tuple(p.table[k] for p in ps.points) for k in range(len(X.opens))]
        checks = {
            "phi topology": bool(is_ltopology(X.frame, len(ps.points), phis)),
            "t0 iff injective": bool(is_t0(X)) == e.is_injective(),
            "sober iff homeomorphism": bool(is_sober(X, ps)) == bool(map_predicate(e, "homeomorphism")),
            "eta open onto image": all(
                e.image(mu)[p] == phis[k][p] for k, mu in enumerate(X.opens) for p in set(e.mapping)),
            "output sober": bool(is_sober(ps.space)),
            "output t0": bool(is_t0(ps.space)),
        }
        if checks["t0 iff injective"] and is_t0(X):
            checks["eta epi in LTop0"] = pullback_collision(e) is None
        R2, eta2 = sobrify(ps.space)
        checks["second eta homeomorphism"] = bool(map_predicate(eta2, "homeomorphism"))
        failed = [k for k, v in checks.items() if not v]
        if failed:
            return VerificationReport("spectrum", False, cases, family.describe(),
                                      counterexample(f"{m.name}: {', '.join(failed)}", {m.name: X}))
    return VerificationReport("spectrum", True, cases, family.describe())


def verify_epi_criteria(family: TestFamily) -> VerificationReport:
    """Preimage injectivity, [f(X)] = Y and the brute-force definition agree on every
    continuous map between T0 members; eta is an LTop0 epimorphism for each T0 member."""
    t0s = family.t0_part()
    codomains = [m.space for m in t0s]
    cases = 0
    for mx, my in itertools.product(t0s, repeat=2):
        for t in continuous_map_tables(mx.space, my.space, cap=family.max_maps):
            cases += 1
            f = StructuredMap(mx.space, my.space, t)
            a = bool(is_epimorphism(f, "LTop0"))
            b = bracket_closure(my.space, f.image_points()) == frozenset(range(my.space.n_points))
            c = bool(is_epimorphism_bruteforce(f, codomains, cap=family.max_maps))
            if not a == b == c:
                return VerificationReport("epi-criteria", False, cases, t0s.describe(),
                                          counterexample(f"criteria disagree: preimage={a} closure={b} brute={c}",
                                                         {mx.name: mx.space, my.name: my.space}, {"f": f}))
    for m in t0s:
        cases += 1
        _, e = sobrify(m.space)
        if not is_epimorphism(e, "LTop0"):
            return VerificationReport("epi-criteria", False, cases, t0s.describe(),
                                      counterexample(f"eta of {m.name} is not an LTop0 epimorphism", {m.name: m.space}))
    return VerificationReport("epi-criteria", True, cases, t0s.describe())


def verify_frame_maps_oracle(A: Frame, B: Frame) -> Check:
    fast = [m.table for m in enumerate_frame_maps(A, B)]
    brute = [t for t in itertools.product(range(B.size), repeat=A.size) if is_frame_map(t, A, B)]
    return Check(fast == brute, "enumeration differs from brute force", (len(fast), len(brute)))


def verify_continuous_oracle(family: TestFamily, limit: int = 10**4) -> VerificationReport:
    cases = 0
    for ma, mb in itertools.product(family, repeat=2):
        A, B = ma.space, mb.space
        if B.n_points ** A.n_points > limit:
            continue
        cases += 1
        fast = [f.mapping for f in enumerate_continuous_maps(A, B)]
        brute = [t for t in itertools.product(range(B.n_points), repeat=A.n_points)
                 if map_predicate(StructuredMap(A, B, t), "continuous")]
        if fast != brute:
            return VerificationReport("continuous-maps-oracle", False, cases, family.describe(),
                                      counterexample(f"enumeration {ma.name} -> {mb.name} differs",
                                                     {ma.name: A, mb.name: B}))
    return VerificationReport("continuous-maps-oracle", True, cases, family.describe())


SUITES: dict[str, Callable[[TestFamily], VerificationReport]] = {
    "sierpinski-object": lambda fam: verify_sierpinski_object(sierpinski_space(fam.frame), fam),
    "injective-cogenerator": lambda fam: verify_injective_cogenerator(sierpinski_space(fam.frame), fam.t0_part()),
    "t0-reflection": verify_t0_reflection,
    "sober-reflection": verify_sober_reflection,
    "firmness": verify_firmness,
    "manes": lambda fam: verify_manes_conditions(fam.frame, [1, 2], fam),
    "bracket-laws": verify_bracket_laws,
}


def _guarded(name: str, family: TestFamily) -> VerificationReport:
    # a family whose declared flags lie can break a suite's premises midway
    try:
        return SUITES[name](family)
    except PreconditionError as exc:
        return VerificationReport(name, False, 0, family.describe(),
                                  counterexample(f"precondition violated: {exc}",
                                                 {m.name: m.space for m in family}))


def run_suite(name: str, family: TestFamily) -> list[VerificationReport]:
    if name == "all":
        return [check_family_flags(family)] + [_guarded(n, family) for n in SUITES]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return [_guarded(name, family)]
