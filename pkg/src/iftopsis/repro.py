"""Reproduction checks for the published results this library rests on.

Every worked example, counterexample and comparative table from the
literature that motivated the package is an executable named check
returning a pass/fail report: the axiom violations of the classical
similarity measures, the score-functional collision, the degenerate
level set of the stretched distance, the non-monotonicity of the two
baseline ranking methods, and the closeness vectors and rankings of the
two published case studies.  Alongside the named checks live two seeded
fuzzers: one hunts monotonicity violations in the ranking methods, one
checks the metric axioms of the admissible distances on random triples.

Checks are deterministic: a given check id (and seed, for fuzzers)
always produces byte-identical text and JSON reports.  Reference
problems come from the package's bundled data files.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Sequence

import numpy as np

from .errors import DomainError, UnknownCheck
from .measures import (
    AdmissibleMetric,
    KGammaMetric,
    XYMetric,
    ZXMetric,
    d_sh_level_residual,
    d_sh_level_set,
    rho,
    s_ck,
    sim_one_minus,
    sim_xc_euclidean,
)
from .orders import partial_cmp, cmp_xy
from .problem_io import load_problem
from .topsis import (
    DecisionProblem,
    RankingResult,
    topsis_chen,
    topsis_li,
    topsis_proposed,
)
from .values import IFV, scale

_DATA = Path(__file__).parent / "data"


def bundled_problem(name: str) -> DecisionProblem:
    """Load one of the packaged reference problems by bare name."""
    return load_problem(_DATA / f"{name}.json")


# ---------------------------------------------------------------------------
# Reports.

@dataclass(frozen=True)
class CheckLine:
    """One observation compared against one expectation.

    op selects the comparison: "close" is |observed - expected| <= tol,
    "eq" exact equality (numbers or strings), and "ge"/"le"/"gt"/"lt"
    the plain inequalities.
    """

    label: str
    observed: float | str
    expected: float | str
    tol: float = 0.0
    op: str = "close"

    @property
    def ok(self) -> bool:
        o, e = self.observed, self.expected
        if self.op == "eq":
            return o == e
        if isinstance(o, str) or isinstance(e, str):
            return False
        if self.op == "close":
            return abs(o - e) <= self.tol
        if self.op == "ge":
            return o >= e
        if self.op == "le":
            return o <= e
        if self.op == "gt":
            return o > e
        if self.op == "lt":
            return o < e
        raise DomainError(f"unknown comparison op {self.op!r}")


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named check or fuzz run."""

    check_id: str
    lines: tuple[CheckLine, ...]
    narrative: str
    seed: int | None = None
    informational: bool = False
    detail: str = ""

    @property
    def status(self) -> str:
        if self.informational:
            return "pass"
        return "pass" if all(line.ok for line in self.lines) else "fail"

    @property
    def observed(self) -> tuple[float | str, ...]:
        return tuple(line.observed for line in self.lines)

    @property
    def expected(self) -> tuple[float | str, ...]:
        return tuple(line.expected for line in self.lines)


_OP_SYMBOL = {"close": "~", "eq": "=", "ge": ">=", "le": "<=", "gt": ">", "lt": "<"}


def _fmt(value: float | str) -> str:
    return value if isinstance(value, str) else repr(value)


def report_text(report: CheckReport) -> str:
    """Line-oriented rendering, stable byte for byte."""
    head = f"[{report.status.upper():4s}] {report.check_id}: {report.narrative}"
    if report.seed is not None:
        head += f" (seed {report.seed})"
    out = [head]
    for line in report.lines:
        mark = "ok" if line.ok else "FAIL"
        rel = _OP_SYMBOL[line.op]
        tol = f" tol {line.tol:g}" if line.op == "close" and line.tol else ""
        out.append(
            f"    {mark:4s} {line.label}: {_fmt(line.observed)} "
            f"{rel} {_fmt(line.expected)}{tol}"
        )
    if report.detail:
        out.extend("    | " + d for d in report.detail.splitlines())
    return "\n".join(out)


def report_json_obj(report: CheckReport) -> dict[str, Any]:
    obj: dict[str, Any] = {
        "id": report.check_id,
        "status": report.status,
        "narrative": report.narrative,
        "observed": [{"label": l.label, "value": l.observed} for l in report.lines],
        "expected": [
            {"label": l.label, "value": l.expected, "op": l.op, "tolerance": l.tol}
            for l in report.lines
        ],
        "seed": report.seed,
        "informational": report.informational,
    }
    if report.detail:
        obj["detail"] = report.detail
    return obj


def reports_json(reports: Sequence[CheckReport]) -> str:
    return json.dumps([report_json_obj(r) for r in reports], indent=2) + "\n"


# ---------------------------------------------------------------------------
# Named checks.

def _closeness_lines(
    result: RankingResult, expected: Sequence[float], tols: Sequence[float]
) -> list[CheckLine]:
    return [
        CheckLine(f"C{i+1}", obs, exp, tol)
        for i, (obs, exp, tol) in enumerate(zip(result.closeness, expected, tols))
    ]


def _ranking_line(result: RankingResult, expected: str) -> CheckLine:
    return CheckLine("ranking", result.ranking(), expected, op="eq")


def _check_sim_e_violates_s4() -> CheckReport:
    i1, i2, i3 = [IFV(0.0, 1.0)], [IFV(0.1, 0.0)], [IFV(0.4, 0.0)]
    s12 = sim_one_minus(2.0, i1, i2)
    s13 = sim_one_minus(2.0, i1, i3)
    nested = partial_cmp(i1[0], i2[0]) == -1 and partial_cmp(i2[0], i3[0]) == -1
    lines = (
        CheckLine("I1 below I2 below I3 componentwise", "yes" if nested else "no", "yes", op="eq"),
        CheckLine("sim(I1, I2)", s12, 1.0 - math.sqrt(0.91), 1e-12),
        CheckLine("sim(I1, I3)", s13, 1.0 - math.sqrt(0.76), 1e-12),
        CheckLine("sim(I1, I3) - sim(I1, I2)", s13 - s12, 0.0, op="gt"),
    )
    return CheckReport(
        "sim_e_violates_s4",
        lines,
        "Euclidean complement similarity rises along a nested chain, "
        "violating the containment axiom",
    )


def _check_minkowski_violates_s4() -> CheckReport:
    i1 = [IFV(0.0, 1.0)]
    mu2, mu3 = 0.2, 0.4
    lines = []
    for p in (1.5, 2.0, 3.0):
        s2 = sim_one_minus(p, i1, [IFV(mu2, 0.0)])
        s3 = sim_one_minus(p, i1, [IFV(mu3, 0.0)])
        lines.append(CheckLine(f"p={p:g}: sim(I1, I3) - sim(I1, I2)", s3 - s2, 0.0, op="gt"))
    return CheckReport(
        "minkowski_violates_s4",
        tuple(lines),
        "Minkowski similarity increases along a nested chain for every "
        "tested order p",
    )


def _check_xc2_violates_s4() -> CheckReport:
    i1 = [IFV(0.0, 1.0)]
    a, b = IFV(0.9, 0.01), IFV(0.901, 0.007)
    x2 = sim_xc_euclidean(i1, [a])
    x3 = sim_xc_euclidean(i1, [b])
    nested = partial_cmp(i1[0], a) == -1 and partial_cmp(a, b) == -1
    lines = (
        CheckLine("I1 below I2 below I3 componentwise", "yes" if nested else "no", "yes", op="eq"),
        CheckLine("sim(I1, I2)", x2, 0.09141, 5e-6),
        CheckLine("sim(I1, I3)", x3, 0.09148, 5e-6),
        CheckLine("sim(I1, I3) - sim(I1, I2)", x3 - x2, 0.0, op="gt"),
    )
    return CheckReport(
        "xc2_violates_s4",
        lines,
        "Euclidean complement-ratio similarity rises along a nested chain",
    )


def _check_sck_collision() -> CheckReport:
    a, b = IFV(0.0, 0.0), IFV(99.0 / 200.0, 101.0 / 200.0)
    va, vb = s_ck(a), s_ck(b)
    lines = (
        CheckLine("score of <0, 0>", va, -0.01, 1e-12),
        CheckLine("score of <99/200, 101/200>", vb, -0.01, 1e-12),
        CheckLine("absolute difference", abs(va - vb), 0.0, 1e-15),
        CheckLine("inputs distinct", "yes" if a != b else "no", "yes", op="eq"),
    )
    return CheckReport(
        "sck_collision",
        lines,
        "two distinct IFVs share the corrected score value -1/100",
    )


def _check_dsh_level_set() -> CheckReport:
    points = d_sh_level_set(0.5, n_points=5)
    lines = [CheckLine("distinct solutions", float(len(set(points))), 2.0, op="ge")]
    for p in points:
        lines.append(
            CheckLine(
                f"residual at <{p.mu:.6f}, {p.nu:.6f}>",
                abs(d_sh_level_residual(p, 0.5)),
                1e-9,
                op="le",
            )
        )
    return CheckReport(
        "dsh_level_set",
        tuple(lines),
        "the stretched distance puts infinitely many IFVs at distance "
        "1/2 from <0, 0>; several witnesses solve the level-set equation",
    )


_LI_CLOSENESS = (0.0, 0.9085917, 0.9085194, 1.0)
_LI_TOLS = (1e-12, 5e-8, 5e-8, 1e-12)


def _li_dominance_lines(problem: DecisionProblem) -> list[CheckLine]:
    below = all(
        partial_cmp(a, b) in (-1, 0)
        for a, b in zip(problem.matrix[1], problem.matrix[2])
    )
    return [CheckLine("A2 below A3 componentwise", "yes" if below else "no", "yes", op="eq")]


def _check_li_nonmonotone_ifv_weights() -> CheckReport:
    problem = bundled_problem("table2")
    result = topsis_li(problem)
    lines = _closeness_lines(result, _LI_CLOSENESS, _LI_TOLS)
    lines += _li_dominance_lines(problem)
    lines.append(CheckLine("C2 - C3", result.closeness[1] - result.closeness[2], 0.0, op="gt"))
    lines.append(_ranking_line(result, "A4 > A2 > A3 > A1"))
    return CheckReport(
        "li_nonmonotone_ifv_weights",
        tuple(lines),
        "distance-ratio baseline ranks a dominated alternative above its "
        "dominating neighbor under IFV weights",
    )


def _check_li_nonmonotone_scalar_weights() -> CheckReport:
    problem = bundled_problem("table4")
    w2 = scale(0.5, problem.matrix[1][0])
    w3 = scale(0.5, problem.matrix[2][0])
    result = topsis_li(problem)
    lines = [
        CheckLine("weighted A2 entry mu", w2.mu, 0.9, 1e-12),
        CheckLine("weighted A2 entry nu", w2.nu, 0.01, 1e-12),
        CheckLine("weighted A3 entry mu", w3.mu, 0.901, 1e-12),
        CheckLine("weighted A3 entry nu", w3.nu, 0.007, 1e-12),
    ]
    lines += _closeness_lines(result, _LI_CLOSENESS, _LI_TOLS)
    lines += _li_dominance_lines(problem)
    lines.append(CheckLine("C2 - C3", result.closeness[1] - result.closeness[2], 0.0, op="gt"))
    lines.append(_ranking_line(result, "A4 > A2 > A3 > A1"))
    return CheckReport(
        "li_nonmonotone_scalar_weights",
        tuple(lines),
        "scalar halving reproduces the published weighted entries and the "
        "same inverted ranking",
    )


def _check_chen_nonmonotone_xy() -> CheckReport:
    problem = bundled_problem("table7")
    result = topsis_chen(problem)
    expected = (0.0, 0.615, 0.64, 1.0)
    lines = _closeness_lines(result, expected, (1e-12,) * 4)
    below = cmp_xy(problem.matrix[2][0], problem.matrix[1][0]) == -1
    lines.append(CheckLine("A3 below A2 in the score order", "yes" if below else "no", "yes", op="eq"))
    lines.append(CheckLine("T3 - T2", result.closeness[2] - result.closeness[1], 0.0, op="gt"))
    lines.append(_ranking_line(result, "A4 > A3 > A2 > A1"))
    return CheckReport(
        "chen_nonmonotone_xy",
        tuple(lines),
        "similarity-grid baseline ranks a score-order-smaller alternative higher",
    )


def _check_proposed_fixes_exm2() -> CheckReport:
    problem = bundled_problem("table4")
    result = topsis_proposed(problem, XYMetric(1.0))
    expected = (0.0, 0.99495, 0.995075, 1.0)
    tols = (1e-12, 5e-6, 5e-7, 1e-12)
    lines = _closeness_lines(result, expected, tols)
    lines.append(CheckLine("C3 - C2", result.closeness[2] - result.closeness[1], 0.0, op="gt"))
    lines.append(_ranking_line(result, "A4 > A3 > A2 > A1"))
    return CheckReport(
        "proposed_fixes_exm2",
        tuple(lines),
        "weighted-similarity method restores the dominance-consistent "
        "ranking on the near-tie problem",
    )


def _check_proposed_fixes_exm3() -> CheckReport:
    problem = bundled_problem("table7")
    result = topsis_proposed(problem, XYMetric(1.0))
    expected = (0.0, 0.65, 0.64, 1.0)
    lines = _closeness_lines(result, expected, (1e-12,) * 4)
    lines.append(CheckLine("C2 - C3", result.closeness[1] - result.closeness[2], 0.0, op="gt"))
    lines.append(_ranking_line(result, "A4 > A2 > A3 > A1"))
    return CheckReport(
        "proposed_fixes_exm3",
        tuple(lines),
        "weighted-similarity method follows the score order where the "
        "similarity-grid baseline inverted it",
    )


_EX71_XY = (0.4321, 0.5709, 0.4750, 0.4876, 0.5053)
_EX71_ZX = (0.4371, 0.5618, 0.4694, 0.4922, 0.4925)
_EX71_RANKING = "A2 > A5 > A4 > A3 > A1"
_EX72_XY = (0.5565, 0.5295, 0.5058, 0.4555, 0.5171)
_EX72_ZX = (0.5531, 0.5329, 0.5042, 0.4583, 0.5198)
_EX72_RANKING = "A1 > A2 > A5 > A3 > A4"


def _case_study_check(
    check_id: str,
    table: str,
    metric: AdmissibleMetric,
    expected: Sequence[float],
    expected_ranking: str,
    narrative: str,
) -> CheckReport:
    problem = bundled_problem(table)
    result = topsis_proposed(problem, metric)
    lines = _closeness_lines(result, expected, (5e-5,) * len(expected))
    lines.append(_ranking_line(result, expected_ranking))
    return CheckReport(check_id, tuple(lines), narrative)


def _check_example_7_1_xy() -> CheckReport:
    return _case_study_check(
        "example_7_1_xy", "table3", XYMetric(100.0), _EX71_XY, _EX71_RANKING,
        "supplier case study under the score-order metric",
    )


def _check_example_7_1_zx() -> CheckReport:
    return _case_study_check(
        "example_7_1_zx", "table3", ZXMetric(100.0), _EX71_ZX, _EX71_RANKING,
        "supplier case study under the L-value metric",
    )


def _check_example_7_2_xy() -> CheckReport:
    return _case_study_check(
        "example_7_2_xy", "table10", XYMetric(100.0), _EX72_XY, _EX72_RANKING,
        "project-manager case study under the score-order metric",
    )


def _check_example_7_2_zx() -> CheckReport:
    return _case_study_check(
        "example_7_2_zx", "table10", ZXMetric(100.0), _EX72_ZX, _EX72_RANKING,
        "project-manager case study under the L-value metric",
    )


def _ranking_rows_check(
    check_id: str,
    table: str,
    rows: Sequence[tuple[str, AdmissibleMetric, str]],
    narrative: str,
) -> CheckReport:
    problem = bundled_problem(table)
    lines = []
    for label, metric, expected in rows:
        result = topsis_proposed(problem, metric)
        lines.append(CheckLine(label, result.ranking(), expected, op="eq"))
    return CheckReport(check_id, tuple(lines), narrative)


def _check_table9_rankings() -> CheckReport:
    r = _EX71_RANKING
    rows = [
        ("score metric, lam=100", XYMetric(100.0), r),
        ("L-value metric, lam=100", ZXMetric(100.0), r),
        ("K(0.2, 0.4) metric, lam=100", KGammaMetric(0.2, 0.4, 100.0), r),
        ("K(0.5, 0.4) metric, lam=100", KGammaMetric(0.5, 0.4, 100.0), r),
        ("K(0.6, 0.4) metric, lam=100", KGammaMetric(0.6, 0.4, 100.0), r),
    ]
    return _ranking_rows_check(
        "table9_rankings", "table3", rows,
        "all five metric rows of the supplier comparison table agree",
    )


def _check_table12_rankings() -> CheckReport:
    flip_low = "A1 > A3 > A5 > A2 > A4"
    flip_high = _EX72_RANKING
    rows = [
        ("score metric, lam=100", XYMetric(100.0), flip_high),
        ("L-value metric, lam=100", ZXMetric(100.0), flip_high),
        ("K(0.2, 0.4) metric, lam=100", KGammaMetric(0.2, 0.4, 100.0), flip_low),
        ("K(0.5, 0.4) metric, lam=100", KGammaMetric(0.5, 0.4, 100.0), flip_high),
        ("K(0.6, 0.4) metric, lam=100", KGammaMetric(0.6, 0.4, 100.0), flip_high),
    ]
    return _ranking_rows_check(
        "table12_rankings", "table10", rows,
        "the manager comparison table's gamma sensitivity: the low-gamma "
        "row ranks A3 second, the others A2",
    )


_REGISTRY: dict[str, Callable[[], CheckReport]] = {
    "sim_e_violates_s4": _check_sim_e_violates_s4,
    "minkowski_violates_s4": _check_minkowski_violates_s4,
    "xc2_violates_s4": _check_xc2_violates_s4,
    "sck_collision": _check_sck_collision,
    "dsh_level_set": _check_dsh_level_set,
    "li_nonmonotone_ifv_weights": _check_li_nonmonotone_ifv_weights,
    "li_nonmonotone_scalar_weights": _check_li_nonmonotone_scalar_weights,
    "chen_nonmonotone_xy": _check_chen_nonmonotone_xy,
    "proposed_fixes_exm2": _check_proposed_fixes_exm2,
    "proposed_fixes_exm3": _check_proposed_fixes_exm3,
    "example_7_1_xy": _check_example_7_1_xy,
    "example_7_1_zx": _check_example_7_1_zx,
    "example_7_2_xy": _check_example_7_2_xy,
    "example_7_2_zx": _check_example_7_2_zx,
    "table9_rankings": _check_table9_rankings,
    "table12_rankings": _check_table12_rankings,
}

#: Stable listing of every check id, in reporting order.
CHECK_IDS: tuple[str, ...] = tuple(_REGISTRY)


def run_check(check_id: str) -> CheckReport:
    """Run one named check; UnknownCheck for ids not in the registry."""
    try:
        fn = _REGISTRY[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None
    return fn()


def run_all_checks(check_ids: Sequence[str] | None = None) -> list[CheckReport]:
    """Run the given checks (default: all) in registry order."""
    ids = CHECK_IDS if check_ids is None else tuple(check_ids)
    return [run_check(c) for c in ids]


# ---------------------------------------------------------------------------
# Fuzzers.

_METHODS = ("proposed", "li", "chen")


@dataclass(frozen=True)
class FuzzConfig:
    """Configuration of a monotonicity fuzz run.

    The metric supplies both the distance (for the monotone method) and
    the matching order used to inject a dominated/dominating row pair.
    One sequential random stream per run, derived from the seed, keeps
    reports byte-identical for equal configurations.
    """

    trials: int
    seed: int
    method: str = "proposed"
    metric: AdmissibleMetric = field(default_factory=lambda: XYMetric(100.0))
    n_range: tuple[int, int] = (3, 6)
    m_range: tuple[int, int] = (2, 5)

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise DomainError(f"fuzzing needs at least one trial, got {self.trials}")
        if self.method not in _METHODS:
            raise DomainError(f"unknown method {self.method!r}; choose from {_METHODS}")
        for lo, hi in (self.n_range, self.m_range):
            if lo < 2 or hi < lo:
                raise DomainError("dimension ranges must satisfy 2 <= lo <= hi")


def random_ifv(rng: np.random.Generator) -> IFV:
    """mu uniform on [0, 1], then nu uniform on [0, 1 - mu].

    Not uniform over the triangle (denser near high mu), which is fine
    for violation hunting.
    """
    mu = rng.random()
    return IFV(mu, rng.random() * (1.0 - mu))


def _render_matrix(problem: DecisionProblem, closeness: Sequence[float]) -> str:
    out = []
    for name, row, c in zip(problem.alternatives, problem.matrix, closeness):
        cells = " ".join(f"<{e.mu!r}, {e.nu!r}>" for e in row)
        out.append(f"{name}: {cells}  closeness {c!r}")
    return "\n".join(out)


def fuzz_monotonicity(config: FuzzConfig) -> CheckReport:
    """Hunt for dominance violations in a ranking method.

    Each trial draws a random problem, forces one row to dominate
    another pointwise under the metric's order, and checks that the
    dominating row's closeness is not smaller (slack 1e-12).  Zero
    violations is a hard requirement for the monotone method; for the
    baselines the count is informational and expected to be positive.
    """
    rng = np.random.default_rng(config.seed)
    order = config.metric.order
    violations = 0
    first_detail = ""
    for _ in range(config.trials):
        n = int(rng.integers(config.n_range[0], config.n_range[1] + 1))
        m = int(rng.integers(config.m_range[0], config.m_range[1] + 1))
        matrix = [[random_ifv(rng) for _ in range(m)] for _ in range(n)]
        perm = rng.permutation(n)
        i_lo, i_hi = int(perm[0]), int(perm[1])
        for j in range(m):
            if order.compare(matrix[i_lo][j], matrix[i_hi][j]) > 0:
                matrix[i_lo][j], matrix[i_hi][j] = matrix[i_hi][j], matrix[i_lo][j]
        raw_w = 0.05 + rng.random(m)
        weights = tuple(float(w) for w in raw_w / raw_w.sum())
        problem = DecisionProblem.from_pairs(matrix, weights)
        if config.method == "li":
            result = topsis_li(problem)
        elif config.method == "chen":
            result = topsis_chen(problem)
        else:
            result = topsis_proposed(problem, config.metric)
        if result.closeness[i_hi] < result.closeness[i_lo] - 1e-12:
            violations += 1
            if not first_detail:
                first_detail = (
                    f"first violation: row {i_hi} dominates row {i_lo} "
                    f"pointwise yet ranks below it\n"
                    + _render_matrix(problem, result.closeness)
                )
    informational = config.method != "proposed"
    if informational:
        lines = (CheckLine("violations (informational)", float(violations), 0.0, op="ge"),)
        narrative = (
            f"{config.method} baseline, {config.trials} dominated-pair trials; "
            "a positive count reproduces the published critique"
        )
    else:
        lines = (CheckLine("violations", float(violations), 0.0, 0.0),)
        narrative = (
            f"monotone method, {config.trials} dominated-pair trials; "
            "any violation would contradict the monotonicity theorem"
        )
    return CheckReport(
        f"fuzz_monotonicity_{config.method}",
        lines,
        narrative,
        seed=config.seed,
        informational=informational,
        detail=first_detail,
    )


def fuzz_metric_axioms(metric: AdmissibleMetric, trials: int, seed: int) -> CheckReport:
    """Check the metric axioms and order-compatibility on random triples.

    Per triple: values in [0, 1], exact symmetry, zero distance exactly
    on equal arguments, the triangle inequality with slack 1e-12, and
    compatibility with the metric's order (the two ends of a sorted
    triple are at least as far apart as each end is from the middle).
    """
    if trials < 1:
        raise DomainError(f"fuzzing needs at least one trial, got {trials}")
    rng = np.random.default_rng(seed)
    mus = rng.random((trials, 3))
    nus = rng.random((trials, 3)) * (1.0 - mus)
    order = metric.order
    range_v = sym_v = ident_v = triangle_v = compat_v = 0
    slack = 1e-12
    for i in range(trials):
        a = IFV(mus[i, 0], nus[i, 0])
        b = IFV(mus[i, 1], nus[i, 1])
        c = IFV(mus[i, 2], nus[i, 2])
        dab = metric.distance(a, b)
        dbc = metric.distance(b, c)
        dac = metric.distance(a, c)
        if not (0.0 <= dab <= 1.0 and 0.0 <= dbc <= 1.0 and 0.0 <= dac <= 1.0):
            range_v += 1
        if metric.distance(b, a) != dab:
            sym_v += 1
        if metric.distance(a, a) != 0.0 or (dab == 0.0 and a != b):
            ident_v += 1
        if (
            dac > dab + dbc + slack
            or dab > dac + dbc + slack
            or dbc > dab + dac + slack
        ):
            triangle_v += 1
        # order the triple, then the outer pair must dominate both inner ones
        x, y, z = sorted((a, b, c), key=functools.cmp_to_key(order.compare))
        dxz = metric.distance(x, z)
        if metric.distance(x, y) > dxz + slack or metric.distance(y, z) > dxz + slack:
            compat_v += 1
    lines = (
        CheckLine("range violations", float(range_v), 0.0, 0.0),
        CheckLine("symmetry violations", float(sym_v), 0.0, 0.0),
        CheckLine("identity violations", float(ident_v), 0.0, 0.0),
        CheckLine("triangle violations", float(triangle_v), 0.0, 0.0),
        CheckLine("order-compatibility violations", float(compat_v), 0.0, 0.0),
    )
    return CheckReport(
        "fuzz_metric_axioms",
        lines,
        f"{type(metric).__name__} on {trials} random triples",
        seed=seed,
    )
