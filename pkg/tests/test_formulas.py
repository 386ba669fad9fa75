import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatpoints.core import BiDegree, Source, UniformFatPoints, binom
from fatpoints.formulas import (
    FormulaRoute,
    RegionKind,
    classify,
    defective_family,
    hf_m_ge_b,
    hf_triple,
    hf_uniform,
    reduce_to_plane,
    stabilization_threshold,
    table_region,
)
from reference_dispatch import reference_dispatch


def val(hf):
    assert hf.value is not None
    return hf.value


class TestMGeB:
    def test_example_table_column(self):
        pts = UniformFatPoints(5, 5)
        assert val(hf_m_ge_b(BiDegree(13, 4), pts)) == 69
        assert val(hf_m_ge_b(BiDegree(14, 4), pts)) == 72
        assert val(hf_m_ge_b(BiDegree(15, 4), pts)) == 74
        assert val(hf_m_ge_b(BiDegree(16, 4), pts)) == 75
        assert val(hf_m_ge_b(BiDegree(4, 4), pts)) == 25
        assert val(hf_m_ge_b(BiDegree(10, 5), pts)) == 65

    def test_defect_flags(self):
        pts = UniformFatPoints(5, 5)
        hf = hf_m_ge_b(BiDegree(13, 4), pts)
        assert hf.defective and hf.defect == 1

    def test_empty_scheme(self):
        for m in (1, 3, 6):
            hf = hf_m_ge_b(BiDegree(7, m - 1), UniformFatPoints(0, m))
            assert hf.value == 0
            assert hf.source is Source.FORMULA

    def test_b_zero_column(self):
        # one row of the grid: forms depend on x alone, m conditions per point
        assert val(hf_m_ge_b(BiDegree(9, 0), UniformFatPoints(2, 4))) == 8
        assert val(hf_m_ge_b(BiDegree(5, 0), UniformFatPoints(3, 4))) == 6

    def test_precondition(self):
        with pytest.raises(ValueError):
            hf_m_ge_b(BiDegree(9, 5), UniformFatPoints(2, 4))


class TestTriple:
    def test_theorem_cells(self):
        assert val(hf_triple(BiDegree(5, 4), 5)) == 29
        assert val(hf_triple(BiDegree(3, 3), 3)) == 15
        assert val(hf_triple(BiDegree(4, 3), 3)) == 17
        assert val(hf_triple(BiDegree(9, 1), 3)) == 15
        assert val(hf_triple(BiDegree(2, 2), 1)) == 6

    def test_row_two_family(self):
        # s odd, (a, b) = (2s-1, 2)
        assert val(hf_triple(BiDegree(9, 2), 5)) == 29
        assert val(hf_triple(BiDegree(13, 2), 7)) == 41

    def test_normalizes(self):
        assert val(hf_triple(BiDegree(4, 5), 5)) == 29

    @given(st.integers(0, 100), st.integers(0, 3), st.integers(0, 50))
    @settings(max_examples=400, derandomize=True)
    def test_agrees_with_m_ge_b_low_columns(self, a, b, s):
        deg = BiDegree(max(a, b), min(a, b))
        lhs = hf_triple(deg, s).value
        rhs = hf_m_ge_b(deg, UniformFatPoints(s, 3)).value
        assert lhs == rhs


class TestDefectiveFamily:
    def test_members(self):
        hf = defective_family(BiDegree(14, 5), UniformFatPoints(9, 4))
        assert hf is not None and hf.value == 89 and hf.defect == 1
        hf = defective_family(BiDegree(5, 4), UniformFatPoints(5, 3))
        assert hf is not None and hf.value == 29 and hf.defect == 1
        hf = defective_family(BiDegree(27, 6), UniformFatPoints(13, 5))
        assert hf is not None and hf.value == 194 and hf.defect == 1
        assert hf.expected_dim == 1

    def test_non_members(self):
        assert defective_family(BiDegree(14, 5), UniformFatPoints(8, 4)) is None
        assert defective_family(BiDegree(13, 5), UniformFatPoints(9, 4)) is None
        # m = 2 would give a = 0, b = 3: covered by the low-bidegree theorem
        assert defective_family(BiDegree(3, 0), UniformFatPoints(1, 2)) is None


class TestUniformDispatch:
    def test_examples(self):
        assert hf_uniform(BiDegree(8, 7), UniformFatPoints(5, 5)).value is None
        assert val(hf_uniform(BiDegree(14, 5), UniformFatPoints(9, 4))) == 89
        assert val(hf_uniform(BiDegree(7, 3), UniformFatPoints(5, 2))) == 15
        assert val(hf_uniform(BiDegree(23, 1), UniformFatPoints(5, 5))) == 45
        assert val(hf_uniform(BiDegree(2, 2), UniformFatPoints(9, 1))) == 9

    def test_region_classes(self):
        assert classify(BiDegree(8, 7), UniformFatPoints(5, 5)).kind is RegionKind.UNKNOWN
        assert (
            classify(BiDegree(14, 5), UniformFatPoints(9, 4)).kind
            is RegionKind.KNOWN_DEFECTIVE_FAMILY
        )
        assert (
            classify(BiDegree(4, 9), UniformFatPoints(2, 1)).route is FormulaRoute.SIMPLE
        )
        assert (
            classify(BiDegree(9, 4), UniformFatPoints(2, 4)).route is FormulaRoute.M_GE_B
        )
        assert (
            classify(BiDegree(9, 4), UniformFatPoints(2, 3)).route is FormulaRoute.TRIPLE
        )
        assert (
            classify(BiDegree(9, 4), UniformFatPoints(2, 2)).route is FormulaRoute.DOUBLE
        )

    def test_unknown_only_above_m(self):
        for m in range(1, 7):
            for a in range(0, 16):
                for b in range(0, a + 1):
                    for s in (1, 4, 9):
                        hf = hf_uniform(BiDegree(a, b), UniformFatPoints(s, m))
                        if hf.value is None:
                            assert m >= 4 and b > m

    @given(st.integers(0, 30), st.integers(0, 30), st.integers(0, 15), st.integers(1, 7))
    @settings(max_examples=500, derandomize=True)
    def test_symmetry(self, a, b, s, m):
        pts = UniformFatPoints(s, m)
        assert hf_uniform(BiDegree(a, b), pts) == hf_uniform(BiDegree(b, a), pts)

    @given(st.integers(0, 30), st.integers(0, 30), st.integers(0, 15), st.integers(1, 7))
    @settings(max_examples=500, derandomize=True)
    def test_bounds(self, a, b, s, m):
        hf = hf_uniform(BiDegree(a, b), UniformFatPoints(s, m))
        if hf.value is not None:
            assert 0 <= hf.value <= min((a + 1) * (b + 1), s * binom(m + 1, 2))

    @given(st.integers(0, 25), st.integers(0, 25), st.integers(0, 12), st.integers(1, 6))
    @settings(max_examples=500, derandomize=True)
    def test_monotone_in_each_entry(self, a, b, s, m):
        pts = UniformFatPoints(s, m)
        here = hf_uniform(BiDegree(a, b), pts)
        right = hf_uniform(BiDegree(a + 1, b), pts)
        up = hf_uniform(BiDegree(a, b + 1), pts)
        if here.value is not None and right.value is not None:
            assert right.value >= here.value
        if here.value is not None and up.value is not None:
            assert up.value >= here.value

    def test_rejects_zero_multiplicity(self):
        with pytest.raises(ValueError):
            hf_uniform(BiDegree(2, 2), UniformFatPoints(3, 0))


class TestReferenceParity:
    def test_parity_small_grid(self):
        # full acceptance grid runs in the acceptance module; spot a dense corner
        for m in range(1, 7):
            for s in range(0, 13):
                for a in range(0, 16):
                    for b in range(0, 16):
                        try:
                            expected = reference_dispatch(m, s, a, b)
                        except ValueError:
                            region = classify(BiDegree(a, b), UniformFatPoints(s, m))
                            assert region.kind is not RegionKind.KNOWN_FORMULA
                            continue
                        hf = hf_uniform(BiDegree(a, b), UniformFatPoints(s, m))
                        assert hf.value == expected, (m, s, a, b)


class TestHighColumnRoutes:
    """Oracle agreement for the routes the acceptance grids do not touch:
    simple points everywhere and double points above the b = 2 column."""

    def test_simple_points_vs_oracle(self, fast_oracle):
        from fatpoints.oracle import hf_biproj

        for a in range(0, 9):
            for b in range(0, a + 1):
                for s in (0, 1, 3, 7, 12):
                    formula = val(hf_uniform(BiDegree(a, b), UniformFatPoints(s, 1)))
                    assert formula == hf_biproj(BiDegree(a, b), [1] * s, fast_oracle)

    def test_double_points_high_columns_vs_oracle(self, fast_oracle):
        from fatpoints.oracle import hf_biproj

        for b in (3, 4, 5):
            for a in range(b, 11):
                for s in range(1, 7):
                    formula = val(hf_uniform(BiDegree(a, b), UniformFatPoints(s, 2)))
                    assert formula == hf_biproj(BiDegree(a, b), [2] * s, fast_oracle)


class TestStabilization:
    def test_examples(self):
        assert stabilization_threshold(5, UniformFatPoints(5, 5)) == 14
        assert stabilization_threshold(4, UniformFatPoints(5, 5)) == 16
        for m in (2, 3, 5, 8):
            assert stabilization_threshold(m, UniformFatPoints(2, m)) == 2 * m - 1

    def test_rejects_far_columns(self):
        with pytest.raises(ValueError):
            stabilization_threshold(2, UniformFatPoints(5, 5))

    def test_constant_beyond_threshold(self):
        for m in (2, 3, 4, 5):
            for s in (1, 2, 5, 6):
                pts = UniformFatPoints(s, m)
                for b in (m - 1, m):
                    if b == 0:
                        continue
                    start = stabilization_threshold(b, pts)
                    for a in range(max(start, b), start + 4):
                        assert val(hf_uniform(BiDegree(a, b), pts)) == pts.degree


class TestReduceToPlane:
    def test_examples(self):
        scheme, d = reduce_to_plane(BiDegree(5, 4), UniformFatPoints(5, 3))
        assert (scheme.corner_a, scheme.corner_b) == (5, 4)
        assert scheme.general == (3, 3, 3, 3, 3)
        assert scheme.on_line == ()
        assert d == 9
        assert scheme.degree == 15 + 10 + 30

        scheme, d = reduce_to_plane(BiDegree(2, 2), UniformFatPoints(1, 2))
        assert (scheme.corner_a, scheme.corner_b, scheme.general, d) == (2, 2, (2,), 4)

        scheme, d = reduce_to_plane(BiDegree(3, 1), UniformFatPoints(2, 1))
        assert (scheme.corner_a, scheme.corner_b, scheme.general, d) == (3, 1, (1, 1), 4)


class TestTableRegion:
    def test_known_grid(self):
        grid = table_region(3, 5, 5, 4)
        assert all(hf.value is not None for row in grid for hf in row)
        assert grid[4][5].value == 29
        assert grid[4][5].defective

    def test_empty_scheme_grid(self):
        grid = table_region(1, 0, 2, 2)
        assert [[hf.value for hf in row] for row in grid] == [[0] * 3] * 3

    def test_unknown_left_unresolved_without_oracle(self):
        grid = table_region(5, 5, 8, 8)
        assert grid[8][8].value is None
        assert grid[4][6].value is not None

    def test_oracle_fallback_fills_and_tags(self, fast_oracle):
        grid = table_region(5, 5, 8, 7, fast_oracle)
        cell = grid[7][8]
        assert cell.value == 71
        assert cell.source is Source.ORACLE
        assert not cell.known
        assert cell.defective
