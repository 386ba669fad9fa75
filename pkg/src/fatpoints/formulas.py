"""Closed-form Hilbert functions, region classification, and the table fill.

The known regions and their values:

* m = 1: simple points always impose independent conditions.
* b <= m (bidegree normalized so a >= b): the low-bidegree theorem. Each
  point contributes C(m+1,2) - C(m-b,2) conditions, capped by the space
  dimension, except one odd-s family where the count drops by C(c+2,2).
* m = 2, b >= 3: min((a+1)(b+1), 3s) with no exceptions.
* m = 3: complete classification, four exceptional families plus one
  sporadic cell.
* m >= 4, b > m: open, except one infinite defective family (defect 1).

Unknown is a first-class answer, never a guess; the oracle can fill those
cells on request.
"""

from dataclasses import dataclass
from enum import Enum

from .core import (
    BiDegree,
    HFValue,
    Source,
    UniformFatPoints,
    binom,
    hf_value,
)
from .oracle import OracleConfig, hf_biproj
from .schemes import PlaneScheme, reduce_to_plane

__all__ = [
    "FormulaRoute",
    "RegionClass",
    "RegionKind",
    "PlaneScheme",
    "classify",
    "defective_family",
    "hf_m_ge_b",
    "hf_triple",
    "hf_uniform",
    "reduce_to_plane",
    "stabilization_threshold",
    "table_region",
]


class RegionKind(Enum):
    KNOWN_FORMULA = "known"
    KNOWN_DEFECTIVE_FAMILY = "known-defective-family"
    UNKNOWN = "unknown"


class FormulaRoute(Enum):
    """Which closed form covers a cell."""

    SIMPLE = "simple"
    M_GE_B = "m-ge-b"
    DOUBLE = "double"
    TRIPLE = "triple"
    DEFECTIVE_FAMILY = "defective-family"


@dataclass(frozen=True)
class RegionClass:
    kind: RegionKind
    route: FormulaRoute | None


def classify(deg: BiDegree, pts: UniformFatPoints) -> RegionClass:
    """Locate (deg, pts) in the known/unknown map of the formula layer."""
    b = deg.normalized.b
    m = pts.m
    if m == 1:
        return RegionClass(RegionKind.KNOWN_FORMULA, FormulaRoute.SIMPLE)
    if b <= m:
        return RegionClass(RegionKind.KNOWN_FORMULA, FormulaRoute.M_GE_B)
    if m == 2:
        return RegionClass(RegionKind.KNOWN_FORMULA, FormulaRoute.DOUBLE)
    if m == 3:
        return RegionClass(RegionKind.KNOWN_FORMULA, FormulaRoute.TRIPLE)
    if _family_cell(deg, pts):
        return RegionClass(RegionKind.KNOWN_DEFECTIVE_FAMILY, FormulaRoute.DEFECTIVE_FAMILY)
    return RegionClass(RegionKind.UNKNOWN, None)


def hf_m_ge_b(deg: BiDegree, pts: UniformFatPoints) -> HFValue:
    """Hilbert function when the smaller bidegree entry is at most m.

    min((a+1)(b+1), s(C(m+1,2) - C(m-b,2))), except for odd s = 2k+1 with
    a = bk + c + s(m-b) and 0 <= c <= b-2, where the answer is
    (a+1)(b+1) - C(c+2,2). The b = 0 column needs no special case: the
    binomial difference already counts m conditions per point there.
    """
    deg = deg.normalized
    a, b, s, m = deg.a, deg.b, pts.s, pts.m
    if m < b:
        raise ValueError(f"needs m >= min(a, b): got m={m}, bidegree ({a}, {b})")
    value = min(deg.cells, s * (binom(m + 1, 2) - binom(m - b, 2)))
    if b >= 1 and s % 2 == 1:
        reduced = a - s * (m - b)
        if reduced >= 0:
            k, c = divmod(reduced, b)
            if k == s // 2 and c <= b - 2:
                value = deg.cells - binom(c + 2, 2)
    return hf_value(value, deg, pts)


def hf_triple(deg: BiDegree, s: int) -> HFValue:
    """Complete Hilbert function for triple points (m = 3), any bidegree."""
    deg = deg.normalized
    a, b = deg.a, deg.b
    pts = UniformFatPoints(s, 3)
    cap = deg.cells
    if b == 0:
        # bidegree (a, 0) forms see only the 3 pure-x conditions per point
        value = min(a + 1, 3 * s)
    elif b == 1 and 5 * s < 2 * (a + 1):
        value = 5 * s
    elif s % 2 == 1 and (a, b) in {(2 * s - 1, 2), ((3 * (s - 1)) // 2, 3)}:
        value = cap - 1
    elif s % 2 == 1 and (a, b) == ((3 * (s - 1)) // 2 + 1, 3):
        value = 6 * s - 1
    elif (s, a, b) == (5, 5, 4):
        value = 29
    else:
        value = min(cap, 6 * s)
    return hf_value(value, deg, pts)


def _family_cell(deg: BiDegree, pts: UniformFatPoints) -> bool:
    deg = deg.normalized
    m = pts.m
    return (
        m >= 3
        and deg.a == (2 * m - 1) * (m - 2)
        and deg.b == m + 1
        and pts.s == 4 * m - 7
    )


def defective_family(deg: BiDegree, pts: UniformFatPoints) -> HFValue | None:
    """The one known infinite defective family above the low-bidegree region.

    At a = (2m-1)(m-2), b = m+1, s = 4m-7 (m >= 3) the ideal piece has
    dimension (m-3)(m-4)/2 + 1, one more than expected.
    """
    if not _family_cell(deg, pts):
        return None
    deg = deg.normalized
    m = pts.m
    ideal_dim = (m - 3) * (m - 4) // 2 + 1
    return hf_value(deg.cells - ideal_dim, deg, pts)


def hf_uniform(deg: BiDegree, pts: UniformFatPoints) -> HFValue:
    """Dispatch to the closed form covering (deg, pts), if any.

    Returns an HFValue with known=False and value=None on the open region
    (m >= 4, min(a, b) > m, off the defective family).
    """
    deg = deg.normalized
    region = classify(deg, pts)
    if region.route is FormulaRoute.SIMPLE:
        return hf_value(min(deg.cells, pts.s), deg, pts)
    if region.route is FormulaRoute.M_GE_B:
        return hf_m_ge_b(deg, pts)
    if region.route is FormulaRoute.DOUBLE:
        return hf_value(min(deg.cells, 3 * pts.s), deg, pts)
    if region.route is FormulaRoute.TRIPLE:
        return hf_triple(deg, pts.s)
    if region.route is FormulaRoute.DEFECTIVE_FAMILY:
        result = defective_family(deg, pts)
        assert result is not None
        return result
    return hf_value(None, deg, pts, known=False)


def stabilization_threshold(b: int, pts: UniformFatPoints) -> int:
    """Smallest a from which the b-th column is constant at s*C(m+1,2).

    Only the two columns next to the multiplicity are covered: b in
    {m-1, m}. The threshold is b(k+1) + s(m-b) - 1 with k = floor(s/2).
    """
    m, s = pts.m, pts.s
    if b not in (m - 1, m):
        raise ValueError(f"column must be m-1 or m, got b={b} for m={m}")
    k = s // 2
    return b * (k + 1) + s * (m - b) - 1


def table_region(
    m: int,
    s: int,
    a_max: int,
    b_max: int,
    oracle: OracleConfig | None = None,
) -> list[list[HFValue]]:
    """Grid of values, rows indexed by b from 0, columns by a from 0.

    Unknown cells are resolved by the rank oracle when a configuration is
    given (tagged source=ORACLE) and left value-less otherwise.
    """
    if a_max < 0 or b_max < 0:
        raise ValueError("table bounds must be nonnegative")
    pts = UniformFatPoints(s, m)
    grid = []
    for b in range(b_max + 1):
        row = []
        for a in range(a_max + 1):
            deg = BiDegree(a, b)
            cell = hf_uniform(deg, pts)
            if cell.value is None and oracle is not None:
                rank = hf_biproj(deg, (m,) * s, oracle)
                cell = hf_value(rank, deg, pts, source=Source.ORACLE, known=False)
            row.append(cell)
        grid.append(row)
    return grid
