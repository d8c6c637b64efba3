"""Convergence-study drivers, CSV reports, and golden-value checks.

A study runs a scheme over a refinement chain (in time or in space) and
produces a ConvergenceReport of (parameter, error, rate) rows.  The
eight benchmark tables are regenerated by reproduce_table, written as
CSV, and compared against the embedded reference values under one of
two tolerance profiles:

    strict  -- every error entry and every average rate is checked at
               the pinned tolerances;
    paper   -- identical, except entries pinned in goldens.KNOWN_GAPS
               are skipped.  Those entries cannot be reproduced from
               the stated problem data (reference-table noise floors
               and systematic offsets; see the ledger shipped with the
               repository history for the full analysis).

Grid rows of a table are independent jobs executed by a thread pool
sized by the FRACSUB_THREADS environment variable; results are
assembled in a fixed order so output is deterministic.
"""

import csv
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import goldens
from .oracle import fode_exact, semidiscrete_exact
from .sources import PowerOde, SourceSpec, resolve_profile
from .spatial import MeshSpec, build_operator
from .steppers import run_fode, run_pde_modal

PROFILE_1D = "pow:-0.25"
BOX_1D = "indicator:0.25,0.75"
BOX_2D = "indicator2d:0.25,0.75,0.25,0.75"

ERROR_FMT = "%.6E"
RATE_FMT = "%.2f"


@dataclass(frozen=True)
class StudyRow:
    """One refinement level: parameter (N or M), error, pairwise rate."""
    param: int
    error: float
    rate: float | None


@dataclass
class ConvergenceReport:
    """Errors over a refinement chain for one parameter combination.

    axis is "time" (param = number of steps N) or "space" (param =
    subdivisions M of the finer mesh in each pair).  exp is the
    singular exponent (nu for the scalar benchmarks, mu for the PDE
    source); None marks the homogeneous initial-data case.
    """
    scheme: str
    alpha: float
    exp: float | None
    axis: str
    rows: list = field(default_factory=list)
    rate_theory: float | None = None

    @property
    def errors(self):
        return [r.error for r in self.rows]

    @property
    def average_rate(self):
        rates = [r.rate for r in self.rows if r.rate is not None]
        return sum(rates) / len(rates) if rates else None


def pairwise_rates(errors):
    """Observed orders log2(e_{k-1}/e_k); None for the first entry."""
    out = [None]
    for prev, cur in zip(errors, errors[1:]):
        if prev > 0 and cur > 0:
            out.append(math.log2(prev / cur))
        else:
            out.append(None)
    return out


def _make_rows(params, errors):
    return [StudyRow(int(p), float(e), r)
            for p, e, r in zip(params, errors, pairwise_rates(errors))]


# --------------------------------------------------------------- time studies
def fode_study(scheme, alpha, nu, n_list, lam=-1.0, T=1.0):
    """Scalar power-benchmark errors |u_N - T^nu| over a step chain."""
    ode = PowerOde(alpha, nu, lam)
    exact = fode_exact(nu, T)
    errors = [abs(run_fode(scheme, ode, T, n) - exact) for n in n_list]
    report = ConvergenceReport(scheme, alpha, nu, "time", _make_rows(n_list, errors))
    report.rate_theory = 2.0 if scheme in ("fbdf22", "usbd") else 1.0
    return report


def _pde_problem(dimension, mu, case):
    """Source spec and initial profile for the PDE benchmark cases."""
    if case == "a":
        if dimension == 1:
            src = SourceSpec.of((1.0, mu, PROFILE_1D))
        else:
            src = SourceSpec.of((1.0, 0.0, BOX_2D), (1.0, mu, BOX_2D))
        return src, None
    if case == "b":
        return None, BOX_1D if dimension == 1 else BOX_2D
    raise ValueError("case must be 'a' or 'b'")


def pde_study(scheme, alpha, mu, n_list, dimension=1, case="a",
              subdivisions=128, T=1.0):
    """Fully discrete PDE errors against the exact semidiscrete oracle.

    Case "a" is the singular-source problem (zero initial data); case
    "b" is the homogeneous problem with indicator initial data (mu is
    ignored and recorded as None).
    """
    mesh = MeshSpec(dimension, subdivisions)
    op = build_operator(mesh)
    src, u0_profile = _pde_problem(dimension, mu, case)
    u0 = resolve_profile(u0_profile, mesh) if u0_profile else None
    ref = semidiscrete_exact(op, src, u0, alpha, T)
    errors = []
    for n in n_list:
        u = run_pde_modal(scheme, alpha, op, src, u0, T, n)
        errors.append(op.norm(u - ref))
    exp = mu if case == "a" else None
    report = ConvergenceReport(scheme, alpha, exp, "time", _make_rows(n_list, errors))
    report.rate_theory = 2.0 if scheme == "fbdf22" else 1.0
    return report


# -------------------------------------------------------------- space studies
def _embed_full(interior, dimension):
    """Pad an interior field with the zero boundary values."""
    if dimension == 1:
        return np.concatenate(([0.0], interior, [0.0]))
    return np.pad(interior, 1)


def _refine_full(coarse, dimension):
    """Piecewise-linear interpolation onto the once-refined mesh.

    Operates on full grids (boundary included).  In 2D the cell
    midpoint follows the triangulation diagonal from (i, j) to
    (i+1, j+1), so the result is the exact P1 interpolant.
    """
    if dimension == 1:
        m = coarse.size - 1
        fine = np.empty(2 * m + 1)
        fine[0::2] = coarse
        fine[1::2] = 0.5 * (coarse[:-1] + coarse[1:])
        return fine
    m = coarse.shape[0] - 1
    fine = np.empty((2 * m + 1, 2 * m + 1))
    fine[0::2, 0::2] = coarse
    fine[1::2, 0::2] = 0.5 * (coarse[:-1, :] + coarse[1:, :])
    fine[0::2, 1::2] = 0.5 * (coarse[:, :-1] + coarse[:, 1:])
    fine[1::2, 1::2] = 0.5 * (coarse[:-1, :-1] + coarse[1:, 1:])
    return fine


def _pl_l2_norm(full, h, dimension):
    """Exact L2 norm of the piecewise-linear field given by full-grid values."""
    if dimension == 1:
        a, b = full[:-1], full[1:]
        return math.sqrt(np.sum(h / 3.0 * (a * a + a * b + b * b)))
    v00 = full[:-1, :-1]
    v10 = full[1:, :-1]
    v01 = full[:-1, 1:]
    v11 = full[1:, 1:]
    area = h * h / 2.0

    def tri(a, b, c):
        return area / 6.0 * (a * a + b * b + c * c + a * b + b * c + c * a)

    return math.sqrt(np.sum(tri(v00, v10, v11) + tri(v00, v01, v11)))


def spatial_study(alpha, mu, m_list, dimension=1, T=1.0, compare="interpolate"):
    """Successive-refinement errors of the semidiscrete solution.

    m_list gives the finer mesh of each pair (a dyadic chain); the
    error at M is the norm of u_{2h} - u_h with h = 1/M.  Source
    profiles enter through their exact hat-function averages.

    compare selects the inter-mesh comparison:
      "interpolate" -- P1-interpolate the coarse solution onto the fine
        mesh and take the exact L2 norm of the piecewise-linear
        difference (default: on these meshes nested-node sampling is
        superconvergent and hides the spatial error, see "restrict");
      "restrict" -- sample the fine solution at the shared coarse nodes
        and use the coarse lumped norm.
    """
    m_list = [int(m) for m in m_list]
    for prev, cur in zip(m_list, m_list[1:]):
        if cur != 2 * prev:
            raise ValueError("mesh chain must be dyadic (each M doubles)")
    if compare not in ("interpolate", "restrict"):
        raise ValueError("compare must be 'interpolate' or 'restrict'")
    profile = PROFILE_1D if dimension == 1 else BOX_2D
    src = SourceSpec.of((1.0, 0.0, profile), (1.0, mu, profile))

    solutions = {}
    for m in [m_list[0] // 2] + m_list:
        op = build_operator(MeshSpec(dimension, m))
        solutions[m] = semidiscrete_exact(op, src, None, alpha, T,
                                          projection="mean")
    errors = []
    for m in m_list:
        coarse, fine = solutions[m // 2], solutions[m]
        if compare == "interpolate":
            lifted = _refine_full(_embed_full(coarse, dimension), dimension)
            diff = lifted - _embed_full(fine, dimension)
            errors.append(_pl_l2_norm(diff, 1.0 / m, dimension))
        else:
            idx = (slice(1, None, 2),) * dimension
            coarse_op = build_operator(MeshSpec(dimension, m // 2))
            errors.append(coarse_op.norm(fine[idx] - coarse))
    return ConvergenceReport("oracle", alpha, mu, "space",
                             _make_rows(m_list, errors), rate_theory=2.0)


# ------------------------------------------------------------- table drivers
def _thread_count(threads=None):
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("FRACSUB_THREADS")
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def _run_jobs(jobs, threads):
    """Evaluate thunks on a pool, preserving submission order."""
    workers = _thread_count(threads)
    if workers == 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: job(), jobs))


def _table_jobs(table_id):
    if table_id in (1, 2, 3, 4):
        scheme = {1: "cbe", 2: "usbd", 3: "glbe", 4: "fbdf22"}[table_id]
        n_list = goldens.FODE_N_FINE if table_id == 4 else goldens.FODE_N
        keys = list(goldens.TABLES[table_id])
        return keys, [
            (lambda a=a, nu=nu: fode_study(scheme, a, nu, n_list))
            for a, nu in keys]
    if table_id in (5, 6):
        dim = table_id - 4
        keys = list(goldens.TABLES[table_id])
        return keys, [
            (lambda a=a, mu=mu: spatial_study(a, mu, goldens.SPATIAL_M, dim))
            for a, mu in keys]
    if table_id in (7, 8):
        dim = table_id - 6
        n_list = goldens.PDE1D_N if dim == 1 else goldens.PDE2D_N
        keys = list(goldens.TABLES[table_id])
        jobs = []
        for scheme, a, mu in keys:
            case = "a" if mu is not None else "b"
            jobs.append(lambda s=scheme, a=a, mu=mu, c=case:
                        pde_study(s, a, mu, n_list, dimension=dim, case=c,
                                  subdivisions=goldens.PDE_M))
        return keys, jobs
    raise ValueError("table id must be 1..8")


def run_table(table_id, threads=None):
    """Recompute every row of a benchmark table; returns (keys, reports)."""
    keys, jobs = _table_jobs(table_id)
    return keys, _run_jobs(jobs, threads)


# ----------------------------------------------------------------- CSV output
def _fmt_exp(exp):
    return "" if exp is None else repr(float(exp))


def report_csv_rows(reports, include_theory=False):
    header = ["scheme", "alpha", "exp", "param", "error", "rate"]
    if include_theory:
        header.append("rate_theory")
    rows = [header]
    for rep in reports:
        for row in rep.rows:
            line = [rep.scheme, repr(float(rep.alpha)), _fmt_exp(rep.exp),
                    str(row.param), ERROR_FMT % row.error,
                    "" if row.rate is None else RATE_FMT % row.rate]
            if include_theory:
                line.append("" if rep.rate_theory is None
                            else RATE_FMT % rep.rate_theory)
            rows.append(line)
    return rows


def write_csv(path, reports, include_theory=False):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        csv.writer(fh).writerows(report_csv_rows(reports, include_theory))


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return [list(row) for row in csv.reader(fh)]


# -------------------------------------------------------------- golden checks
# (relative error tolerance, absolute average-rate tolerance) per table
TOLERANCES = {1: (1e-3, 0.03), 2: (1e-3, 0.03), 3: (1e-3, 0.03),
              4: (1e-3, 0.03), 5: (1e-2, 0.03), 6: (1e-2, 0.03),
              7: (5e-2, 0.05), 8: (5e-2, 0.05)}


def check_reports(table_id, keys, reports, profile="strict"):
    """Compare recomputed reports to the embedded table; list failures."""
    if profile not in ("strict", "paper"):
        raise ValueError("profile must be 'strict' or 'paper'")
    tol_err, tol_rate = TOLERANCES[table_id]
    skip = goldens.KNOWN_GAPS.get(table_id, set()) if profile == "paper" else set()
    golden = goldens.TABLES[table_id]
    failures = []
    for key, rep in zip(keys, reports):
        ref_errors, ref_rate = golden[key]
        for row, ref in zip(rep.rows, ref_errors):
            if (key, row.param) in skip:
                continue
            dev = abs(row.error / ref - 1.0)
            if not dev <= tol_err:
                failures.append(
                    f"table {table_id} {key} param={row.param}: "
                    f"error {row.error:.6E} vs {ref:.6E} (rel dev {dev:.3f})")
        if (key, "rate") in skip:
            continue
        avg = rep.average_rate
        if avg is None or abs(avg - ref_rate) > tol_rate:
            failures.append(
                f"table {table_id} {key}: rate {avg} vs {ref_rate}")
    return failures


def reproduce_table(table_id, out_dir=None, tolerance_profile="paper",
                    threads=None):
    """Regenerate a table, optionally write CSV, and check golden values.

    Returns (reports, failures, csv_path).
    """
    keys, reports = run_table(table_id, threads=threads)
    csv_path = None
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        csv_path = os.path.join(out_dir, f"table{table_id}.csv")
        write_csv(csv_path, reports, include_theory=table_id in (7, 8))
    failures = check_reports(table_id, keys, reports, tolerance_profile)
    return reports, failures, csv_path


# ------------------------------------------------------------ property checks
def _weights_vs_symbol(kind, alpha, n=64, m=4096):
    """Max deviation of CQ weights from Fourier sampling of their symbol."""
    from .weights import fbdf2_weights, gl_weights

    kernel = gl_weights(alpha, n) if kind == "gl" else fbdf2_weights(alpha, n)
    # Sample inside the unit circle so the geometric damping r**j kills the
    # aliasing tail of the slowly decaying weight sequence.
    r = 1e-20 ** (1.0 / m)
    z = r * np.exp(-2j * np.pi * np.arange(m) / m)
    j = np.arange(n + 1)
    sampled = np.fft.ifft(kernel.symbol(z))[:n + 1].real * r ** (-j)
    return float(np.max(np.abs(sampled - kernel.weights)))


def _eigen_residual(dimension, mass, m=12):
    """Max residual ||A v - lambda M v|| over the operator's eigenpairs."""
    from .spatial import mass_matrix, stiffness_matrix

    mesh = MeshSpec(dimension, m)
    op = build_operator(mesh, mass)
    a = stiffness_matrix(mesh)
    mm = mass_matrix(mesh, mass)
    worst = 0.0
    lam = op.eigenvalues
    for idx in np.ndindex(lam.shape):
        coeff = np.zeros(lam.shape)
        coeff[idx] = 1.0
        v = op.to_nodal(coeff).ravel()
        worst = max(worst, float(np.max(np.abs(a @ v - lam[idx] * (mm @ v)))))
    return worst


def _modal_vs_nodal(scheme, dimension=1, m=16, n=8):
    from .steppers import run_pde_nodal

    mesh = MeshSpec(dimension, m)
    op = build_operator(mesh)
    profile = PROFILE_1D if dimension == 1 else BOX_2D
    src = SourceSpec.of((1.0, -0.5, profile))
    u0 = resolve_profile(BOX_1D if dimension == 1 else BOX_2D, mesh)
    um = run_pde_modal(scheme, 0.5, op, src, u0, 1.0, n)
    un = run_pde_nodal(scheme, 0.5, op, src, u0, 1.0, n)
    return float(np.max(np.abs(um - un)))


def run_self_checks():
    """Module invariant suite; returns {name: (passed, measured, bound)}."""
    import math as _math

    from scipy.integrate import IntegrationWarning, quad
    from scipy.special import erfc

    from .ml import ml_conv_weight, ml_eval, ml_eval_array
    from .oracle import regularity_slope
    from .weights import check_sector_lemmas

    results = {}

    def record(name, measured, bound):
        results[name] = (measured <= bound, measured, bound)

    record("gl_weights_vs_symbol",
           max(_weights_vs_symbol("gl", a) for a in (0.1, 0.5, 0.9)), 1e-12)
    record("fbdf2_weights_vs_symbol",
           max(_weights_vs_symbol("fbdf2", a) for a in (0.1, 0.5, 0.9)), 1e-12)
    record("eigen_residual_1d_lumped", _eigen_residual(1, "lumped"), 1e-12)
    record("eigen_residual_1d_galerkin", _eigen_residual(1, "galerkin"), 1e-12)
    record("eigen_residual_2d_lumped", _eigen_residual(2, "lumped"), 1e-12)
    record("modal_vs_nodal",
           max(_modal_vs_nodal(s) for s in ("glbe", "fbdf22", "cbe", "usbd")),
           1e-11)

    ml_dev = max(
        abs(ml_eval(1.0, 1.0, -1.3) - _math.exp(-1.3)),
        abs(ml_eval(1.0, 2.0, -1.3) - (1 - _math.exp(-1.3)) / 1.3),
        abs(ml_eval(0.5, 1.0, 0.0) - 1.0),
        abs(ml_eval(0.5, 1.0, -2.0)
            - _math.exp(4.0) * float(erfc(2.0))))
    record("ml_special_cases", ml_dev, 1e-12)

    def conv_quad(alpha, lam, t, mu):
        # Fold both endpoint singularities s**mu and (t-s)**(alpha-1) into
        # the algebraic quadrature weight; the remainder is smooth.
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore", IntegrationWarning)
            val, _ = quad(
                lambda s: ml_eval(alpha, alpha, -lam * (t - s) ** alpha),
                0.0, t, weight="alg", wvar=(mu, alpha - 1.0),
                limit=400, epsabs=1e-12, epsrel=1e-12)
        return val

    conv_dev = max(
        abs(ml_conv_weight(a, lam, 1.0, mu) - conv_quad(a, lam, 1.0, mu))
        for a, lam, mu in ((0.5, 4.0, -0.5), (0.3, 1.0, -0.2), (0.8, 9.0, -0.7)))
    record("ml_convolution_vs_quadrature", conv_dev, 1e-9)

    sector_dev = 0.0
    for a in (0.3, 0.6, 0.9):
        checks = check_sector_lemmas(a)
        sector_dev = max(sector_dev,
                         abs(checks["gl_order_slope"] - (a + 1)),
                         abs(checks["bdf2_order_slope"] - (a + 2)))
    record("symbol_order_slopes", sector_dev, 0.05)

    op = build_operator(MeshSpec(1, 64))
    reg_dev = max(
        abs(regularity_slope(a, mu, op, t_lo=1e-12, t_hi=1e-8) - (a + mu))
        for a, mu in ((0.3, -0.5), (0.5, -0.9), (0.2, -0.4)))
    record("small_time_regularity_slope", reg_dev, 0.05)
    return results
