"""Residue/trace calculus on the distinguished line, and the scripted
two-step specializations used for triple points.

A point on the line is a width profile (see schemes). The plain residue by
the line drops the bottom row of every on-line profile; the differential
variant may instead remove a chosen higher row of a full fat point, trading
a shorter trace on the line for a larger residual scheme. The two-step
builders reproduce the specific slice choices that make the line and the
corner line removable, and expose every intermediate scheme so the rank
oracle can confirm the dimension bookkeeping.
"""

from dataclasses import dataclass

from .core import binom
from .oracle import DEFAULT_CONFIG, OracleConfig, hf_plane, hf_trace_line
from .schemes import PlaneScheme, SliceProfile


def diff_slice(m: int, t: int) -> tuple[SliceProfile | None, int]:
    """Split a multiplicity-m fat point on the line at slice index t.

    The trace keeps the row of width m - t; the residue is the full triangle
    with that row deleted and the rows above shifted down one level. t = 0 is
    the plain residue/trace pair.
    """
    if not 0 <= t <= m - 1:
        raise ValueError(f"slice index must satisfy 0 <= t <= m-1, got t={t}, m={m}")
    width = m - t
    rows = [w for w in range(m, 0, -1) if w != width]
    return (SliceProfile(tuple(rows)) if rows else None), width


@dataclass(frozen=True)
class LinePoint:
    """An on-line profile together with the row chosen for the next split."""

    profile: SliceProfile
    slice_width: int

    def __post_init__(self):
        if self.slice_width not in self.profile.widths:
            raise ValueError(
                f"no row of width {self.slice_width} in profile {self.profile.widths}"
            )
        if self.slice_width != self.profile.bottom and not self.profile.is_fat_point():
            raise ValueError(
                "a higher slice can only be taken on a full fat point, "
                f"got {self.profile.widths} with slice {self.slice_width}"
            )

    def split(self) -> tuple[SliceProfile | None, int]:
        if self.slice_width == self.profile.bottom:
            return self.profile.drop_bottom(), self.slice_width
        m = len(self.profile.widths)
        return diff_slice(m, m - self.slice_width)


@dataclass(frozen=True)
class LineConfiguration:
    """A plane scheme with some points on the distinguished line."""

    corner_a: int
    corner_b: int
    off_line: tuple[int, ...] = ()
    line_points: tuple[LinePoint, ...] = ()

    @staticmethod
    def plain(corner_a: int, corner_b: int, off_line=(), line_mults=(),
              line_profiles=()) -> "LineConfiguration":
        """Configuration with no differential choices: every slice is the
        bottom row."""
        points = [
            LinePoint(SliceProfile.fat_point(m), m) for m in line_mults
        ] + [LinePoint(pr, pr.bottom) for pr in line_profiles]
        return LineConfiguration(corner_a, corner_b, tuple(off_line), tuple(points))

    @property
    def scheme(self) -> PlaneScheme:
        """The honest scheme: slice choices do not change the scheme itself."""
        return PlaneScheme(
            self.corner_a,
            self.corner_b,
            self.off_line,
            tuple(lp.profile for lp in self.line_points),
        )


def residue_line(cfg: LineConfiguration) -> PlaneScheme:
    """Plain residue by the line: every on-line profile loses its bottom row.

    Off-line points are untouched; the reduced points remain on the line.
    """
    residues = []
    for lp in cfg.line_points:
        rest = lp.profile.drop_bottom()
        if rest is not None:
            residues.append(rest)
    return PlaneScheme(cfg.corner_a, cfg.corner_b, cfg.off_line, tuple(residues))


def trace_line(cfg: LineConfiguration) -> list[int]:
    """Bottom widths of the on-line points: the lengths cut out on the line."""
    return [lp.profile.bottom for lp in cfg.line_points]


def differential_residue(cfg: LineConfiguration) -> PlaneScheme:
    """Residue with each on-line point split at its chosen slice."""
    residues = []
    for lp in cfg.line_points:
        rest, _ = lp.split()
        if rest is not None:
            residues.append(rest)
    return PlaneScheme(cfg.corner_a, cfg.corner_b, cfg.off_line, tuple(residues))


def differential_trace(cfg: LineConfiguration) -> list[int]:
    return [lp.slice_width for lp in cfg.line_points]


def residue_corner(scheme: PlaneScheme) -> PlaneScheme:
    """Residue by the line joining the two corners (both multiplicities drop)."""
    return PlaneScheme(
        max(0, scheme.corner_a - 1),
        max(0, scheme.corner_b - 1),
        scheme.general,
        scheme.on_line,
    )


def line_residue_scheme(scheme: PlaneScheme) -> PlaneScheme:
    """Plain residue by the distinguished line applied to a bare scheme."""
    residues = []
    for pr in scheme.on_line:
        rest = pr.drop_bottom()
        if rest is not None:
            residues.append(rest)
    return PlaneScheme(scheme.corner_a, scheme.corner_b, scheme.general, tuple(residues))


@dataclass(frozen=True)
class CastelnuovoResult:
    lhs: int
    rhs_residue: int
    rhs_trace: int
    holds: bool


def castelnuovo_check(cfg: LineConfiguration, d: int,
                      oracle: OracleConfig = DEFAULT_CONFIG) -> CastelnuovoResult:
    """Ideal dimension of the scheme vs plain residue at d-1 plus trace at d.

    The inequality lhs <= rhs_res + rhs_tr is a theorem for the plain
    residue/trace pair; a False result signals a bug, not mathematics.
    """
    lhs = hf_plane(d, cfg.scheme, oracle)
    rhs_res = hf_plane(d - 1, residue_line(cfg), oracle) if d >= 1 else 0
    rhs_tr = hf_trace_line(d, trace_line(cfg), oracle)
    return CastelnuovoResult(lhs, rhs_res, rhs_tr, lhs <= rhs_res + rhs_tr)


@dataclass(frozen=True)
class HoraceReport:
    residue_dim: int
    residue_expected: int
    trace_dim: int
    trace_expected: int
    conclusion_dim: int
    conclusion_expected: int
    residue_ok: bool
    trace_ok: bool
    witnessed: bool


def horace_verify(line_points, ambient: PlaneScheme, d: int,
                  oracle: OracleConfig = DEFAULT_CONFIG) -> HoraceReport:
    """Witness one application of the differential split at degree d.

    line_points is a sequence of (multiplicity, slice index t) for fat points
    that the method sends onto the line; ambient holds the corners and the
    general points. Hypotheses: the split residue imposes maximal conditions
    in degree d-1, and the chosen traces fit independently on the line in
    degree d. When both hold, the scheme with the same multiplicities in
    general position must impose independent conditions in degree d, and
    that conclusion is verified too. The collinear scheme itself can sit
    strictly higher (the split is a limit argument, not a specialization),
    so no claim is made about it, nor when a hypothesis fails.
    """
    if ambient.on_line:
        raise ValueError("ambient scheme may not carry its own on-line points")
    residues = []
    traces = []
    mults = []
    for m, t in line_points:
        rest, width = diff_slice(m, t)
        if rest is not None:
            residues.append(rest)
        traces.append(width)
        mults.append(m)

    res_scheme = PlaneScheme(ambient.corner_a, ambient.corner_b, ambient.general,
                             tuple(residues))
    general_scheme = PlaneScheme(ambient.corner_a, ambient.corner_b,
                                 ambient.general + tuple(mults))

    res_dim = hf_plane(d - 1, res_scheme, oracle) if d >= 1 else 0
    res_expected = max(0, binom(d + 1, 2) - res_scheme.degree)
    tr_dim = hf_trace_line(d, traces, oracle)
    tr_expected = d + 1 - sum(traces)

    concl_dim = hf_plane(d, general_scheme, oracle)
    concl_expected = max(0, binom(d + 2, 2) - general_scheme.degree)

    residue_ok = res_dim == res_expected
    trace_ok = tr_dim == tr_expected
    witnessed = residue_ok and trace_ok and concl_dim == concl_expected
    return HoraceReport(
        res_dim, res_expected, tr_dim, max(0, tr_expected),
        concl_dim, concl_expected, residue_ok, trace_ok, witnessed,
    )


# slice widths for the two scripted specializations, by a+b mod 5:
# step 1 places x points of width 3 and y of width 2, plus one extra point;
# step 2 swaps the widths on those points and may move one more point in.
_STEP1_EXTRA = {2: 1, 3: 2, 4: 3}
_STEP2_EXTRA1 = {1: 2, 2: 3, 3: 3, 4: 2}
_STEP2_EXTRA2 = {3: 1, 4: 3}


@dataclass(frozen=True)
class TripleStep:
    """One removal round: the specialized scheme and its residual.

    The oracle-checkable claim is that the residual in degree `degree - 2`
    has the same ideal dimension as the scheme with all points in general
    position in degree `degree`. When every chosen slice is a bottom row the
    round is a plain line removal and the specialized scheme
    `config.scheme` itself has that dimension too; rounds that take a higher
    slice are limit arguments, and the honestly specialized scheme can sit
    strictly higher.
    """

    a: int
    b: int
    s: int
    h: int
    c: int
    x: int
    y: int
    degree: int
    config: LineConfiguration
    residual: PlaneScheme


def _step_params(a: int, b: int) -> tuple[int, int, int, int]:
    if not (a >= b >= 4 and a + b >= 10):
        raise ValueError(
            f"specialization needs a >= b >= 4 and a + b >= 10, got ({a}, {b})"
        )
    h, c = divmod(a + b, 5)
    x = h + 1 if c == 0 else h + 2
    y = h - 1 if c == 0 else h - 2
    return h, c, x, y


def specialize_triple_step1(a: int, b: int, s: int) -> TripleStep:
    """First round: move x + y (+ maybe one) triple points onto the line.

    Slice widths 3 on the first x points and 2 on the next y make the line
    cut out degree a+b+1, so the line and then the corner line are forced
    components; the residual lives in degree a+b-2.
    """
    h, c, x, y = _step_params(a, b)
    widths = [3] * x + [2] * y
    if c in _STEP1_EXTRA:
        widths.append(_STEP1_EXTRA[c])
    if sum(widths) != a + b + 1:
        raise AssertionError(f"trace degree {sum(widths)} != {a + b + 1}")
    s1 = (a + 1) * (b + 1) // 6
    if x + y + 1 > s1:
        raise AssertionError(f"x + y + 1 = {x + y + 1} exceeds s1 = {s1}")
    if s < len(widths):
        raise ValueError(f"need at least {len(widths)} points, got s={s}")
    line = tuple(LinePoint(SliceProfile.fat_point(3), w) for w in widths)
    cfg = LineConfiguration(a, b, (3,) * (s - len(widths)), line)
    residual = residue_corner(differential_residue(cfg))
    return TripleStep(a, b, s, h, c, x, y, a + b, cfg, residual)


def specialize_triple_step2(step1: TripleStep) -> TripleStep:
    """Second round on the first residual, with the widths swapped.

    Widths 2 on the first x points and 3 on the next y cut out degree
    a+b-1 on the line, again forcing both lines; for some congruence classes
    one more off-line triple point moves on. The new residual lives in
    degree a+b-4.
    """
    a, b, s, h, c, x, y = (step1.a, step1.b, step1.s, step1.h,
                           step1.c, step1.x, step1.y)
    prior = step1.residual
    points = []
    widths = []
    for i, profile in enumerate(prior.on_line):
        if i < x + y:
            width = 2 if i < x else 3
        else:
            width = _STEP2_EXTRA1[c]
        points.append(LinePoint(profile, width))
        widths.append(width)
    off = list(prior.general)
    extras = []
    if c == 1:
        extras.append(_STEP2_EXTRA1[1])
    if c in _STEP2_EXTRA2:
        extras.append(_STEP2_EXTRA2[c])
    for w in extras:
        if not off:
            raise ValueError(f"not enough off-line points for step 2 with s={s}")
        off.pop()
        points.append(LinePoint(SliceProfile.fat_point(3), w))
        widths.append(w)
    if sum(widths) != a + b - 1:
        raise AssertionError(f"trace degree {sum(widths)} != {a + b - 1}")
    if c in (3, 4):
        s1 = (a + 1) * (b + 1) // 6
        if x + y + 2 > s1:
            raise AssertionError(f"x + y + 2 = {x + y + 2} exceeds s1 = {s1}")
    cfg = LineConfiguration(prior.corner_a, prior.corner_b, tuple(off), tuple(points))
    residual = residue_corner(differential_residue(cfg))
    return TripleStep(a, b, s, h, c, x, y, step1.degree - 2, cfg, residual)


def _plain_round(cfg: LineConfiguration) -> bool:
    return all(lp.slice_width == lp.profile.bottom for lp in cfg.line_points)


@dataclass(frozen=True)
class ChainReport:
    """Oracle dimensions along the two-round chain for one (a, b, s)."""

    step1: TripleStep
    step2: TripleStep
    generic_dim: int
    residual1_dim: int
    residual2_dim: int
    specialized1_dim: int
    specialized2_dim: int
    ok: bool


def verify_chain(a: int, b: int, s: int,
                 oracle: OracleConfig = DEFAULT_CONFIG) -> ChainReport:
    """Run both rounds and confirm the dimension is carried down intact.

    Checks dim at a+b of the general-position scheme against the first
    residual at a+b-2 and the second at a+b-4. Rounds whose slices are all
    bottom rows are plain removals, so the specialized scheme is also
    required to match there.
    """
    step1 = specialize_triple_step1(a, b, s)
    step2 = specialize_triple_step2(step1)
    d = a + b
    generic = hf_plane(d, PlaneScheme(a, b, (3,) * s), oracle)
    res1 = hf_plane(d - 2, step1.residual, oracle)
    res2 = hf_plane(d - 4, step2.residual, oracle)
    spec1 = hf_plane(d, step1.config.scheme, oracle)
    spec2 = hf_plane(d - 2, step2.config.scheme, oracle)
    ok = generic == res1 == res2
    if _plain_round(step1.config):
        ok = ok and spec1 == res1
    if _plain_round(step2.config):
        ok = ok and spec2 == res2
    return ChainReport(step1, step2, generic, res1, res2, spec1, spec2, ok)
