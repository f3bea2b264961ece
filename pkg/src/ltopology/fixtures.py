"""Stock desk-scale spaces used by the verification suites and the CLI."""

from __future__ import annotations

from .frames import Frame, named_frame
from .spaces import LTopSpace, discrete_space, indiscrete_space, sierpinski_space

POINT_NAMES = "abcdefgh"


def middle_element(L: Frame) -> int | None:
    for i in L:
        if i not in (L.bottom, L.top):
            return i
    return None


def xyz_space(L: Frame) -> LTopSpace:
    """Points x, y, z with the single proper open (m, m, 1)."""
    m = middle_element(L)
    if m is None:
        raise ValueError("needs a frame with an element strictly between 0 and 1")
    mu = (m, m, L.top)
    return LTopSpace(L, ("x", "y", "z"), [(L.bottom,) * 3, mu, (L.top,) * 3])


def fixture_spaces(L: Frame, max_points: int = 3) -> dict[str, LTopSpace]:
    """Indiscrete spaces on 1..max_points points, discrete ones on at most 2,
    the Sierpinski space and, when L has a middle element, the x/y/z space."""
    out = {}
    for n in range(1, max_points + 1):
        out[f"I{n}"] = indiscrete_space(L, POINT_NAMES[:n])
    for n in range(1, min(2, max_points) + 1):
        out[f"D{n}"] = discrete_space(L, POINT_NAMES[:n])
    out["S"] = sierpinski_space(L)
    if middle_element(L) is not None and max_points >= 3:
        out["XYZ"] = xyz_space(L)
    return out


STOCK_FRAMES = ("F2", "F3", "D4")

# short names used in examples and the CLI
ALIASES = {"P3": "F3/D1", "XYZ": "F3/XYZ", "S2": "F2/S", "S3": "F3/S"}


def stock_catalog(max_points: int = 3) -> dict[str, LTopSpace]:
    out = {}
    for fname in STOCK_FRAMES:
        for name, space in fixture_spaces(named_frame(fname), max_points).items():
            out[f"{fname}/{name}"] = space
    for alias, target in ALIASES.items():
        if target in out:
            out[alias] = out[target]
    return out
