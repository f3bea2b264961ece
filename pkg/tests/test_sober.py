import itertools

import pytest

from ltopology.errors import PreconditionError
from ltopology.fixtures import fixture_spaces, xyz_space
from ltopology.frames import FrameMap, is_frame_map, named_frame, three_chain, two_chain
from ltopology.sober import (
    eta,
    firm_factorization,
    is_sober,
    phi,
    point_space,
    points,
    sobrify,
    topology_frame,
)
from ltopology.spaces import (
    LTopSpace,
    StructuredMap,
    discrete_space,
    find_homeomorphism,
    indiscrete_space,
    is_ltopology,
    is_t0,
    map_predicate,
    sierpinski_space,
)

SPACES = [(f"{f}/{n}", s) for f in ("F2", "F3", "D4") for n, s in fixture_spaces(named_frame(f)).items()]
IDS = [n for n, _ in SPACES]


def one_point_f3():
    L = three_chain()
    return discrete_space(L, ["a"])


def brute_points(S):
    """Frame maps from the opens into L, checked on L-sets directly."""
    L = S.frame
    opens = S.opens
    n = S.n_points
    out = []
    for values in itertools.product(range(L.size), repeat=len(opens)):
        p = dict(zip(opens, values))
        if p[(L.bottom,) * n] != L.bottom or p[(L.top,) * n] != L.top:
            continue
        ok = True
        for a, b in itertools.product(opens, repeat=2):
            m = tuple(L.meet(u, v) for u, v in zip(a, b))
            j = tuple(L.join(u, v) for u, v in zip(a, b))
            if p[m] != L.meet(p[a], p[b]) or p[j] != L.join(p[a], p[b]):
                ok = False
                break
        if ok:
            out.append(values)
    return out


@pytest.mark.parametrize("name, S", SPACES, ids=IDS)
def test_points_match_brute_force(name, S):
    if S.frame.size ** len(S.opens) > 10**5:
        pytest.skip("too many assignments for the brute-force oracle")
    assert [p.table for p in points(S)] == brute_points(S)


def test_points_examples(F2):
    assert len(points(indiscrete_space(F2, "ab"))) == 1
    assert len(points(one_point_f3())) == 3
    empty = LTopSpace(F2, (), [()])
    assert points(empty) == []


def test_topology_frame_is_the_opens(F3):
    X = xyz_space(F3)
    T = topology_frame(X)
    assert list(T.labels) == list(X.opens)
    for i, j in itertools.product(range(T.size), repeat=2):
        a, b = X.opens[i], X.opens[j]
        assert T.labels[T.meet(i, j)] == tuple(F3.meet(u, v) for u, v in zip(a, b))
        assert T.labels[T.join(i, j)] == tuple(F3.join(u, v) for u, v in zip(a, b))


def test_phi_examples(F3):
    P = one_point_f3()
    ps = point_space(P)
    assert phi(P, (F3.bottom,), ps) == (0, 0, 0)
    assert phi(P, (F3.top,), ps) == (2, 2, 2)
    values = phi(P, (F3.index("m"),), ps)
    assert sorted(F3.label(v) for v in values) == ["0", "1", "m"]
    with pytest.raises(PreconditionError):
        phi(indiscrete_space(F3, "a"), (1,))


def test_eta_examples(F2, F3):
    for L in (F2, F3):
        S = sierpinski_space(L)
        assert map_predicate(eta(S), "homeomorphism")
    e = eta(one_point_f3())
    assert e.is_injective() and not e.is_surjective() and e.target.n_points == 3
    e = eta(indiscrete_space(F2, "ab"))
    assert e.mapping[0] == e.mapping[1]


def test_is_sober_examples(F2, F3):
    for name in ("F2", "F3", "D4"):
        assert is_sober(sierpinski_space(named_frame(name)))
    verdict = is_sober(one_point_f3())
    assert not verdict and verdict.reason == "point of the opens not realized"
    assert verdict.witness[1][0] in ("0", "1")
    assert is_sober(LTopSpace(F2, (), [()]))


@pytest.mark.parametrize("name, S", SPACES, ids=IDS)
def test_spectrum_properties(name, S):
    ps = point_space(S)
    e = eta(S, ps)
    for x in range(S.n_points):
        assert is_frame_map(ps.points[e.mapping[x]].table, topology_frame(S), S.frame)
    assert is_ltopology(S.frame, len(ps.points), ps.space.opens)
    assert map_predicate(e, "continuous")
    # T0 iff eta injective; sober iff eta a homeomorphism
    assert bool(is_t0(S)) == e.is_injective()
    assert bool(is_sober(S, ps)) == bool(map_predicate(e, "homeomorphism"))
    # eta is open onto its image: image of mu agrees with phi(mu) there
    for mu in S.opens:
        img = e.image(mu)
        ph = phi(S, mu, ps)
        assert all(img[p] == ph[p] for p in set(e.mapping))
    R, e2 = sobrify(ps.space)
    assert map_predicate(e2, "homeomorphism")
    assert is_sober(ps.space) and is_t0(ps.space)


def test_sobrify_one_point_f3(F3):
    R, e = sobrify(one_point_f3())
    assert R.n_points == 3
    assert find_homeomorphism(R, sierpinski_space(F3)) is not None


def test_firm_factorization_eta(F3):
    X = one_point_f3()
    ps = point_space(X)
    e = eta(X, ps)
    fstar, g = firm_factorization(e, ps)
    assert fstar.mapping == tuple(range(ps.space.n_points))
    assert g.mapping == fstar.mapping
    assert map_predicate(fstar, "homeomorphism") and map_predicate(g, "homeomorphism")


def test_firm_factorization_isomorphism(F3):
    S = sierpinski_space(F3)
    f = StructuredMap(S, S, (0, 1, 2))
    ps = point_space(S)
    fstar, g = firm_factorization(f, ps)
    e = eta(S, ps)
    inverse_eta = [e.mapping.index(p) for p in range(ps.space.n_points)]
    assert fstar.mapping == tuple(f.mapping[x] for x in inverse_eta)


def test_firm_factorization_preconditions(F2, F3):
    I2 = indiscrete_space(F2, "ab")
    with pytest.raises(PreconditionError):
        firm_factorization(StructuredMap.identity(I2))
    # inclusion of a point into the discrete two-point space is not an LTop0 epi
    D = discrete_space(F2, "ab")
    one = discrete_space(F2, "a")
    with pytest.raises(PreconditionError):
        firm_factorization(StructuredMap(one, D, (0,)))
    # target must be sober
    P = one_point_f3()
    with pytest.raises(PreconditionError):
        firm_factorization(StructuredMap.identity(P))
