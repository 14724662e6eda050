"""End-to-end acceptance suite.

Each numbered criterion runs at its stated tolerance and prints one
PASS/FAIL line (visible with ``pytest tests/test_acceptance.py -s``; a
summary repeats them at the end).  The criteria encode the reference
eigenvalue digits this solver set out to reproduce.

Several of them cannot pass, and they fail here honestly rather than at
loosened tolerances.  The common root cause is the critical centrifugal
coupling at l = 0: the coefficient (4*l^2 - 1)/(4*x^2) = -1/(4*x^2) puts
the origin exactly at the borderline where the two local solutions
x^(1/2) and x^(1/2)*ln(x) differ only logarithmically.  Truncating the
sinc expansion at index -M then mixes the logarithmic solution in at
amplitude ~1/(M*a), so the eigenvalue error decays like 1/sqrt(M)
instead of exponentially (measured: ~1.33/(M*a)), and no double
precision eigensolver can recover the printed 8-digit l = 0 reference
values at M = 500.  An independent shooting integrator (tests/oracles.py)
confirms that the true l = 0 spectrum also differs from the reference
digits in the 4th-7th place; see README.md for the full analysis.
l >= 1 columns reproduce to better than 5e-6 throughout.
"""

import math

import numpy as np
import pytest

import sinccol as sc
import sinccol.cli

from oracles import (
    count_sign_changes,
    literal_collocation_matrix,
    shooting_eigenvalues,
)

D4 = math.pi / 4

# Reference eigenvalue table: rows n = 0..4, columns l = 0..4.
REFERENCE_TABLE = np.array([
    [0.52643626, 1.3861862, 1.8443720, 2.1578468, 2.3962798],
    [1.6619365, 2.0094748, 2.2758614, 2.4881158, 2.6638815],
    [2.1870578, 2.3943387, 2.5800522, 2.7390550, 2.8772701],
    [2.5153639, 2.6726676, 2.8144703, 2.9409664, 3.0543788],
    [2.7677810, 2.8906069, 3.0049630, 3.1096821, 3.3373990],
])

# Shifted (lambda') reference values for the l = 0 column.
REFERENCE_SHIFTED_L0 = np.array([1.7967991, 2.9322993, 3.4574206, 3.7857268, 4.0381439])

_RESULTS: list[str] = []


def _report(num: int, name: str, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {num} [{name}]: {'PASS' if ok else 'FAIL'} - {detail}"
    _RESULTS.append(line)
    print(line)


@pytest.fixture(scope="module")
def flagship500():
    """Pairs and normalized states for l = 0..4 at the reference settings."""
    out = {}
    for l in range(5):
        problem = sc.flagship_problem(l, beta=1.0, d=D4, M=500)
        pairs = sc.solve(problem, 5)
        states = [sc.normalize(p, problem.grid, l, n) for n, p in enumerate(pairs)]
        out[l] = (problem.grid, pairs, states)
    return out


@pytest.fixture(scope="module")
def table400():
    return sc.eigen_table(range(5), 5, beta=1.0, d=D4, M=400)


@pytest.fixture(scope="module")
def table500(flagship500):
    t = np.empty((5, 5))
    for l in range(5):
        _, pairs, _ = flagship500[l]
        t[:, l] = [p.eigenvalue for p in pairs]
    return t


def test_criterion_1_reference_table(flagship500, table500, capsys):
    """24 cells (all but n=4, l=4) against the reference table at 5e-6."""
    bad = []
    for n in range(5):
        for l in range(5):
            if (n, l) == (4, 4):
                continue
            err = abs(table500[n, l] - REFERENCE_TABLE[n, l])
            if err > 5e-6:
                bad.append(f"(n={n},l={l}): got {table500[n, l]:.8g}, "
                           f"want {REFERENCE_TABLE[n, l]:.8g}, err {err:.2e}")
    ok = not bad
    detail = ("all 24 cells within 5e-6" if ok
              else f"{len(bad)}/24 cells off (l=0 column, critical coupling): "
                   + "; ".join(bad[:6]) + (" ..." if len(bad) > 6 else ""))
    _report(1, "reference table, 5e-6", ok, detail)

    code = sc.cli.main(["eigen", "--l", "0", "--count", "5"])
    out = capsys.readouterr().out
    first_row = out.split("\n")[1]
    assert code == 0
    assert not bad, detail
    assert "0.52643626" in first_row


def test_criterion_2_suspect_cell_self_convergence(table400, table500):
    """(n=4, l=4): self-convergence at 1e-6; the computed value is recorded."""
    delta = abs(table400[4, 4] - table500[4, 4])
    ok = delta <= 1e-6
    detail = (f"lambda_4(l=4) computed {table500[4, 4]:.8f} (M=500), "
              f"|lambda(400)-lambda(500)| = {delta:.2e}; "
              f"reference table prints 3.3373990")
    _report(2, "suspect cell self-convergence, 1e-6", ok, detail)
    assert ok, detail


def test_criterion_3_shifted_l0_column(table500):
    """Shifted l=0 eigenvalues against the reference digits at 5e-6."""
    shifted = table500[:, 0] + sc.LEVEL_SHIFT
    errs = np.abs(shifted - REFERENCE_SHIFTED_L0)
    ok = bool(np.all(errs <= 5e-6))
    detail = (f"max err {errs.max():.2e}; got "
              + ", ".join(f"{v:.7f}" for v in shifted)
              + " vs reference "
              + ", ".join(f"{v:.7f}" for v in REFERENCE_SHIFTED_L0))
    _report(3, "shifted l=0 column, 5e-6", ok, detail)
    assert ok, detail


def test_criterion_4_quadrature_oracle():
    """Two exact integrals at M = 128, |error| <= 1e-8."""
    g2 = sc.build_grid(2.0, 1.0, D4, 128)
    e1 = abs(sc.quadrature(g2, lambda x: x * np.exp(-x)) - 1.0)
    g1 = sc.build_grid(1.0, 1.0, D4, 128)
    e2 = abs(sc.quadrature(g1, lambda x: np.exp(-x)) - 1.0)
    ok = e1 <= 1e-8 and e2 <= 1e-8
    detail = f"int x e^-x err {e1:.2e}, int e^-x err {e2:.2e}"
    _report(4, "quadrature oracle, 1e-8", ok, detail)
    assert ok, detail


def _fit_slope(errors: dict[int, float]) -> tuple[float, list[int]]:
    used = [M for M, e in errors.items() if e > 1e-13]
    slope = np.polyfit(np.sqrt(used), np.log([errors[M] for M in used]), 1)[0]
    return float(slope), used


def test_criterion_5_exponential_rates():
    """log(error) vs sqrt(M) slopes within +-25% of the class rates."""
    f = lambda x: x * np.exp(-x)
    xs = np.geomspace(1e-2, 20.0, 300)

    interp_err = {}
    for M in (16, 32, 64, 128):
        g = sc.build_grid(1.0, 1.0, D4, M)
        interp_err[M] = float(np.max(np.abs(sc.interpolate(g, f(g.points), xs) - f(xs))))
    quad_err = {}
    for M in (16, 32, 64, 128):
        g = sc.build_grid(2.0, 1.0, D4, M)
        quad_err[M] = abs(sc.quadrature(g, f) - 1.0)

    s_int, used_i = _fit_slope(interp_err)
    s_quad, used_q = _fit_slope(quad_err)
    t_int = -math.sqrt(math.pi * D4 * 1.0)
    t_quad = -math.sqrt(2.0 * math.pi * D4 * 2.0)
    ok_int = 0.75 * abs(t_int) <= abs(s_int) <= 1.25 * abs(t_int)
    ok_quad = 0.75 * abs(t_quad) <= abs(s_quad) <= 1.25 * abs(t_quad)
    ok = ok_int and ok_quad
    detail = (f"interpolation slope {s_int:.3f} vs target {t_int:.3f} "
              f"({'ok' if ok_int else 'out of band'}, M={used_i}); "
              f"quadrature slope {s_quad:.3f} vs target {t_quad:.3f} "
              f"({'ok' if ok_quad else 'out of band'}, M={used_q})")
    _report(5, "exponential convergence rates, +-25%", ok, detail)
    assert ok, detail


def test_criterion_6_oscillator_sanity():
    """Radial oscillator at the critical l = 0 coupling, 1e-6 at M = 200."""
    q = lambda x: -1.0 / (4.0 * x**2) + x**2
    exact = np.array([2.0, 6.0, 10.0])

    oracle = np.array(shooting_eigenvalues(q, 0, 1.0, 11.5, 3, x_end=7.0))
    oracle_ok = bool(np.all(np.abs(oracle - exact) <= 1e-6))

    grid = sc.build_grid(0.5, 1.0, D4, 200)
    pairs = sc.solve(sc.assemble(grid, q), 3)
    got = np.array([p.eigenvalue for p in pairs])
    errs = np.abs(got - exact)
    ok = bool(np.all(errs <= 1e-6))
    detail = (f"got {got.round(6).tolist()} vs exact {exact.tolist()}, "
              f"max err {errs.max():.2e} (critical-coupling boundary mixing); "
              f"shooting oracle confirms exact levels to {np.abs(oracle - exact).max():.1e}")
    _report(6, "oscillator sanity spectrum, 1e-6", ok, detail)
    assert oracle_ok, f"shooting oracle disagrees with closed form: {oracle}"
    assert ok, detail


def test_criterion_7_structural_oracle():
    """Assembled matrix vs a literal index-by-index transcription, M = 24."""
    problem = sc.flagship_problem(0, beta=1.0, d=D4, M=24)
    oracle = literal_collocation_matrix(
        lambda x: -1.0 / (4.0 * x**2) + math.log(x), 0.5, 1.0, D4, 24)
    # 1e-14 is applied entrywise relative to magnitude: entries reach ~1e10,
    # far beyond what an absolute 1e-14 could mean in doubles
    diff = np.abs(problem.matrix - oracle)
    bound = 1e-14 * np.maximum(1.0, np.abs(oracle))
    worst = float(np.max(diff / bound))
    ok = bool(np.all(diff <= bound))
    detail = f"entrywise relative agreement, worst ratio to 1e-14 bound: {worst:.3f}"
    _report(7, "structural matrix oracle, 1e-14", ok, detail)
    assert ok, detail


def test_criterion_8_solution_quality(flagship500):
    """Residuals and normalization at 1e-8; orthogonality at 1e-6 per l."""
    worst_res, worst_norm, worst_ortho = 0.0, 0.0, {}
    for l in range(5):
        _, pairs, states = flagship500[l]
        worst_res = max(worst_res, max(p.residual for p in pairs))
        worst_norm = max(worst_norm, max(s.norm_residual for s in states))
        o = 0.0
        for i in range(5):
            for j in range(i + 1, 5):
                o = max(o, abs(sc.state_overlap(states[i], states[j])))
        worst_ortho[l] = o
    ok_res = worst_res <= 1e-8
    ok_norm = worst_norm <= 1e-8
    bad_ortho = {l: v for l, v in worst_ortho.items() if v > 1e-6}
    ok = ok_res and ok_norm and not bad_ortho
    detail = (f"max residual {worst_res:.2e} ({'ok' if ok_res else 'FAIL'}); "
              f"max |norm-1| {worst_norm:.2e} ({'ok' if ok_norm else 'FAIL'}); "
              f"max |overlap| per l "
              + ", ".join(f"l={l}: {v:.1e}" for l, v in worst_ortho.items()))
    _report(8, "residuals/normalization 1e-8, orthogonality 1e-6", ok, detail)
    assert ok, detail


def test_criterion_9_node_counts(flagship500):
    """State n has exactly n sign changes, n = 0..4, l in {0, 4}."""
    bad = []
    for l in (0, 4):
        grid, pairs, _ = flagship500[l]
        xs = np.geomspace(grid.points[0] * (1 + 1e-9), grid.points[-1] * (1 - 1e-9), 1000)
        for n, pair in enumerate(pairs):
            nodes = count_sign_changes(np.atleast_1d(sc.reconstruct(grid, pair, xs)))
            if nodes != n:
                bad.append(f"(l={l}, n={n}): {nodes} nodes")
    ok = not bad
    detail = "all node counts match" if ok else "; ".join(bad)
    _report(9, "node counts, l in {0, 4}", ok, detail)
    assert ok, detail


class TestFlagshipProperties:
    """Solution-level invariants at the reference settings (not numbered
    criteria, but they share the expensive fixtures)."""

    def test_grid_refinement_stability(self, table400, table500):
        deltas = np.abs(table400 - table500)
        bad = [(n, l) for n in range(5) for l in range(5) if deltas[n, l] > 1e-6]
        assert not bad, (
            f"|lambda(M=400) - lambda(M=500)| > 1e-6 at (n, l) in {bad}; "
            f"max delta {deltas.max():.2e} (l=0 column drifts at ~1/sqrt(M))")

    def test_spectrum_monotonic_in_n(self, table500):
        for l in range(5):
            col = table500[:, l]
            assert np.all(np.diff(col) > 0.0), f"not increasing in n at l={l}: {col}"

    def test_spectrum_monotonic_in_l(self, table500):
        for n in range(5):
            row = table500[n, :]
            assert np.all(np.diff(row) > 0.0), (
                f"not increasing in l at n={n}: {row} "
                f"(l=0 entries above n=2 are filter artifacts)")

    def test_near_origin_scaling(self, flagship500):
        xs = np.geomspace(1e-3, 1e-2, 50)
        bad = []
        for l in range(5):
            _, _, states = flagship500[l]
            R = np.abs(np.atleast_1d(sc.evaluate_radial(states[0], xs)))
            slope = float(np.polyfit(np.log(xs), np.log(R), 1)[0])
            if abs(slope - l) > 0.05 * max(1.0, l):
                bad.append(f"l={l}: slope {slope:.3f}")
        assert not bad, (
            "R ~ x^l near-origin exponent off by more than 5%: " + "; ".join(bad)
            + " (l=0: critical-coupling breakdown at M=500; l=4: the window "
            "lies below the eigenvector round-off floor, f ~ 1e-17 there)")

    def test_renormalization_on_independent_grid(self, flagship500):
        # ground states only; excited states inherit the same machinery
        worst = 0.0
        for l in range(5):
            grid, _, states = flagship500[l]
            fine = sc.build_grid(l + 0.5, 1.0, D4, 700)
            f_fine = np.atleast_1d(sc.interpolate(grid, states[0].coefficients, fine.points))
            val = float(fine.a * np.sum(np.square(f_fine) / (fine.points * fine.phi1)))
            worst = max(worst, abs(val - 1.0))
        assert worst <= 1e-8, f"max |renormalized - 1| = {worst:.2e}"


def test_zz_print_summary():
    print()
    print("=" * 72)
    for line in _RESULTS:
        print(line)
    print("=" * 72)
