import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ltopology.errors import CapExceeded, FrameError
from ltopology.frames import (
    PENTAGON_LABELS,
    FrameMap,
    chain,
    diamond,
    enumerate_frame_maps,
    generate_subframe,
    is_frame_map,
    is_subframe,
    lattice_ops,
    one_element_frame,
    pentagon_order,
    power_frame,
    three_chain,
    two_chain,
    validate_frame,
)


def brute_meet(labels, leq, a, b):
    """Greatest lower bound straight from the order matrix, or None."""
    lower = [c for c in range(len(labels)) if leq[c][a] and leq[c][b]]
    top = [c for c in lower if all(leq[d][c] for d in lower)]
    return top[0] if top else None


def brute_join(labels, leq, a, b):
    upper = [c for c in range(len(labels)) if leq[a][c] and leq[b][c]]
    least = [c for c in upper if all(leq[c][d] for d in upper)]
    return least[0] if least else None


def test_two_chain_is_a_frame():
    F = validate_frame(["0", "1"], [[True, True], [False, True]])
    assert F.size == 2 and F.label(F.bottom) == "0" and F.label(F.top) == "1"


def test_diamond_is_a_frame_by_brute_force():
    D = diamond()
    leq = D.leq
    for a, b, c in itertools.product(range(4), repeat=3):
        lhs = brute_meet(D.labels, leq, a, brute_join(D.labels, leq, b, c))
        rhs = brute_join(D.labels, leq, brute_meet(D.labels, leq, a, b), brute_meet(D.labels, leq, a, c))
        assert lhs == rhs
    assert D.meet(D.index("a"), D.index("b")) == D.index("0")


def test_pentagon_rejected_with_exact_witness():
    leq = pentagon_order()
    labels = PENTAGON_LABELS
    # oracle: first failing triple in index order, computed from the order alone
    expected = None
    for a, b, c in itertools.product(range(5), repeat=3):
        lhs = brute_meet(labels, leq, a, brute_join(labels, leq, b, c))
        rhs = brute_join(labels, leq, brute_meet(labels, leq, a, b), brute_meet(labels, leq, a, c))
        if lhs != rhs:
            expected = (labels[a], labels[b], labels[c])
            assert (labels[lhs], labels[rhs]) == ("c", "a")
            break
    assert expected == ("c", "a", "b")
    with pytest.raises(FrameError) as info:
        validate_frame(labels, leq)
    assert info.value.axiom == "distributivity"
    assert info.value.witness == ("c", "a", "b")


@pytest.mark.parametrize(
    "labels, leq, axiom",
    [
        (["x", "y"], [[True, True], [True, True]], "not-a-poset"),
        (["x", "y"], [[False, True], [False, True]], "not-a-poset"),
        (["x", "y"], [[True, False], [False, True]], "missing-meet"),
        (["x"], [[True, True]], "not-square"),
        ([], [], "empty-carrier"),
    ],
)
def test_validate_frame_errors(labels, leq, axiom):
    with pytest.raises(FrameError) as info:
        validate_frame(labels, leq)
    assert info.value.axiom == axiom


def test_lattice_ops_examples(F2, D4):
    assert lattice_ops(F2, [], "join") == F2.bottom
    assert lattice_ops(F2, [], "meet") == F2.top
    a, b = D4.index("a"), D4.index("b")
    assert lattice_ops(D4, [a, b], "meet") == D4.index("0")
    assert lattice_ops(D4, [a, b], "join") == D4.index("1")
    with pytest.raises(KeyError):
        lattice_ops(D4, [7], "join")
    with pytest.raises(ValueError):
        lattice_ops(D4, [a], "sum")


FRAMES = [one_element_frame(), two_chain(), three_chain(), diamond(), chain(4), power_frame(three_chain(), 2)]


@pytest.mark.parametrize("F", FRAMES, ids=lambda F: f"{F.size}")
def test_lattice_laws_exhaustive(F):
    for a, b in itertools.product(F, repeat=2):
        assert F.meet(a, b) == F.meet(b, a) and F.join(a, b) == F.join(b, a)
        assert F.meet(a, F.join(a, b)) == a and F.join(a, F.meet(a, b)) == a
        assert F.le(F.meet(a, b), a) and F.le(a, F.join(a, b))
    for a in F:
        assert F.meet(a, a) == a == F.join(a, a)
        assert F.le(F.bottom, a) and F.le(a, F.top)
    for a, b, c in itertools.product(F, repeat=3):
        assert F.meet(a, F.meet(b, c)) == F.meet(F.meet(a, b), c)
        assert F.join(a, F.join(b, c)) == F.join(F.join(a, b), c)


def test_is_frame_map_examples(F2, F3, D4):
    assert is_frame_map((0, 1, 2), F3, F3)
    assert is_frame_map((0, 0, 1), F3, F2)
    verdict = is_frame_map((0, 1, 1, 1), D4, F2)
    assert not verdict
    assert verdict.reason == "meet not preserved" and verdict.witness == ("a", "b")
    assert not is_frame_map((1, 1, 1), F3, F2)
    with pytest.raises(ValueError):
        is_frame_map((0, 1), F3, F2)


def independent_frame_maps(A, B):
    """Filter all |B|^|A| assignments with a checker written from the definition."""
    out = []
    for t in itertools.product(range(B.size), repeat=A.size):
        if t[A.bottom] != B.bottom or t[A.top] != B.top:
            continue
        if all(t[A.meet(a, b)] == B.meet(t[a], t[b]) and t[A.join(a, b)] == B.join(t[a], t[b])
               for a, b in itertools.product(range(A.size), repeat=2)):
            out.append(t)
    return out


def test_enumerate_frame_maps_examples(F2, F3, D4):
    assert [m.table for m in enumerate_frame_maps(F2, F2)] == [(0, 1)]
    assert [m.table for m in enumerate_frame_maps(F3, F3)] == [(0, 0, 2), (0, 1, 2), (0, 2, 2)]
    # the two prime-filter characteristic maps, in lexicographic order
    assert [m.table for m in enumerate_frame_maps(D4, F2)] == [(0, 0, 1, 1), (0, 1, 0, 1)]
    # the one-element frame is terminal and admits no map into F2
    assert [m.table for m in enumerate_frame_maps(F2, one_element_frame())] == [(0, 0)]
    assert enumerate_frame_maps(one_element_frame(), F2) == []
    assert [m.table for m in enumerate_frame_maps(one_element_frame(), one_element_frame())] == [(0,)]


@pytest.mark.parametrize("pair", [("F3", "F3"), ("D4", "F2"), ("D4", "D4"), ("C4", "D4"), ("P", "F3")])
def test_enumerate_frame_maps_matches_brute_force(pair):
    make = {"F3": three_chain, "D4": diamond, "F2": two_chain, "C4": lambda: chain(4),
            "P": lambda: power_frame(two_chain(), 2)}
    A, B = make[pair[0]](), make[pair[1]]()
    assert [m.table for m in enumerate_frame_maps(A, B)] == independent_frame_maps(A, B)


def test_enumerate_frame_maps_cap(F3):
    with pytest.raises(CapExceeded) as info:
        enumerate_frame_maps(chain(6), chain(6), cap=5)
    assert info.value.cap == 5


def test_frame_map_composition_and_identity(F2, F3, D4):
    for F in (F2, F3, D4):
        assert is_frame_map(FrameMap.identity(F).table, F, F)
    for f in enumerate_frame_maps(D4, D4):
        for g in enumerate_frame_maps(D4, F2):
            assert is_frame_map(g.compose(f).table, D4, F2)


def test_generate_subframe_examples(F3):
    assert set(generate_subframe(F3, []).labels()) == {"0", "1"}
    P = power_frame(two_chain(), 2)  # L^X for L=F2, X={x,y}
    one_x = P.index(("1", "0"))
    one_y = P.index(("0", "1"))
    assert generate_subframe(P, [one_x]).labels() == [("0", "0"), ("1", "0"), ("1", "1")]
    assert len(generate_subframe(P, [one_x, one_y])) == 4


def test_generate_subframe_is_a_subframe_and_minimal():
    P = power_frame(three_chain(), 2)
    for size in range(3):
        for zeta in itertools.combinations(range(P.size), size):
            sub = generate_subframe(P, zeta)
            assert is_subframe(P, sub.members)
            # no smaller subframe contains zeta: check every subframe by brute force
            for k in range(len(sub.members)):
                for cand in itertools.combinations(sorted(sub.members), k):
                    if set(zeta) <= set(cand):
                        assert not is_subframe(P, cand)


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(0, 8)), st.sets(st.integers(0, 8)))
def test_generate_subframe_is_a_closure_operator(z1, z2):
    P = power_frame(three_chain(), 2)
    c1 = generate_subframe(P, z1).members
    assert set(z1) <= c1
    assert generate_subframe(P, c1).members == c1
    assert generate_subframe(P, z1).members <= generate_subframe(P, z1 | z2).members


@st.composite
def posets(draw):
    n = draw(st.integers(1, 4))
    rel = {(i, j) for i in range(n) for j in range(i + 1, n) if draw(st.booleans())}
    le = [[i == j or (i, j) in rel for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if le[i][k] and le[k][j]:
                    le[i][j] = True
    return n, le


@settings(max_examples=50, deadline=None)
@given(posets())
def test_down_set_lattices_are_frames(poset):
    # finite distributive lattices arise as down-set lattices of finite posets
    n, le = poset
    downsets = [frozenset(s) for k in range(n + 1) for s in itertools.combinations(range(n), k)
                if all(i in s for j in s for i in range(n) if le[i][j])]
    F = validate_frame([tuple(sorted(d)) for d in downsets],
                       [[a <= b for b in downsets] for a in downsets])
    for a, b in itertools.product(range(F.size), repeat=2):
        assert downsets[F.meet(a, b)] == downsets[a] & downsets[b]
        assert downsets[F.join(a, b)] == downsets[a] | downsets[b]
