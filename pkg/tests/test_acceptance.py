"""Acceptance gate: one check per numbered criterion, one printed line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the pass/fail
lines; without -s they still print on failure.
"""

import math
import time

import numpy as np

from graphmetrize import (
    affinity_matrix,
    compute_lambda_sequence,
    delta_ball,
    delta_matrix,
    diffusion_distance_matrix,
    eig_symmetric,
    graph_laplacian,
    newtonian_kernel,
    quasi_triangle_constant,
    spectral_decomposition,
    verify_equivalence,
    verify_sandwich,
)

from conftest import brute_power3


def report(num, ok, detail):
    print(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"criterion {num}: {detail}"


def tripling_widths(n):
    widths = [1]
    while widths[-1] < n - 1:
        widths.append(min(3 * widths[-1], n - 1))
    return widths


def brute_lambda_values(values):
    """Threshold sweep re-run with the triple-loop composition oracle."""
    n = len(values)
    gaps = np.abs(np.arange(n)[:, None] - np.arange(n)[None, :])
    descending = [float(values[gaps <= 1].min())]
    floor = float(values.min())
    while True:
        cube = brute_power3(values >= descending[-1])
        nxt = float(values[cube].min())
        if nxt >= descending[-1]:
            break
        descending.append(nxt)
        if nxt <= floor:
            break
    return descending[::-1]


def test_criterion_01_lambda_sequence_reproduction():
    kernel = newtonian_kernel(60, 1.0, 2.0)
    start = time.perf_counter()
    seq = compute_lambda_sequence(kernel)
    elapsed = time.perf_counter() - start
    expected = [1.0 / 59.0, 1.0 / 27.0, 1.0 / 9.0, 1.0 / 3.0, 1.0]
    ok = (
        seq.values.size == 5
        and all(abs(a - b) <= 1e-9 for a, b in zip(seq.values, expected))
        and elapsed < 1.0
    )
    report(1, ok, f"n=60 thresholds match the five caption values ({elapsed * 1e3:.1f} ms)")


def test_criterion_02_level_count_law():
    checked = 0
    ok = True
    for n in (4, 10, 28, 60, 100):
        widths = tripling_widths(n)
        for alpha in (0.5, 1.0, 2.0):
            kernel = newtonian_kernel(n, alpha, 2.0)
            seq = compute_lambda_sequence(kernel)
            expected = [float(kernel.values[0, w]) for w in reversed(widths)]
            ok = ok and seq.values.tolist() == expected
            ok = ok and seq.values.size == len(widths)
            if n <= 28:
                ok = ok and seq.values.tolist() == brute_lambda_values(kernel.values)
            checked += 1
    counts = {n: len(tripling_widths(n)) for n in (4, 10, 28, 60, 100)}
    report(2, ok, f"level counts {counts} over {checked} (n, alpha) pairs, brute-force checked to n=28")


def test_criterion_03_triple_composition_invariant(corpus_pipeline):
    ok = True
    levels_checked = 0
    for kernel, seq, _, _ in corpus_pipeline:
        levels = [kernel.values >= t for t in seq.values]
        for i in range(1, seq.k + 1):
            cube = brute_power3(levels[i])
            ok = ok and bool((levels[i - 1] | ~cube).all())
            levels_checked += 1
    report(3, ok, f"power3(U_i) inside U_(i-1) on {levels_checked} levels across 100 kernels (brute-force oracle)")


def test_criterion_04_sandwich_control(corpus_pipeline):
    ok = True
    worst = 0
    for kernel, seq, _, pm in corpus_pipeline:
        rep = verify_sandwich(kernel, seq, pm)
        ok = ok and all(rep.left_pass)
        if rep.tightest_shift is not None:
            ok = ok and rep.tightest_shift >= -1
            worst = min(worst, rep.tightest_shift)
    report(4, ok, f"level sets inside dyadic balls with right-inclusion shift >= -1 (worst shift {worst})")


def test_criterion_05_equivalence_constants(corpus_pipeline):
    ok = True
    c_lo, c_hi = math.inf, 0.0
    for _, _, dm, pm in corpus_pipeline:
        rep = verify_equivalence(dm, pm)
        ok = ok and rep.passed
        c_lo = min(c_lo, rep.c_lo)
        c_hi = max(c_hi, rep.c_hi)
    ok = ok and c_lo >= 0.125 and c_hi <= 2.0
    report(5, ok, f"d/delta within [1/8, 2]; empirical sharp constants [{c_lo:.6g}, {c_hi:.6g}]")


def test_criterion_06_quasi_triangle_constant(corpus_pipeline):
    ok = all(quasi_triangle_constant(dm) <= 8.0 for _, _, dm, _ in corpus_pipeline)
    kernel = newtonian_kernel(60, 1.0, 2.0)
    c60 = quasi_triangle_constant(delta_matrix(kernel, compute_lambda_sequence(kernel)))
    ok = ok and c60 <= 2.0
    report(6, ok, f"triple ratio <= 8 on all corpus instances; n=60 constant {c60:.6g} <= 2")


def test_criterion_07_ball_identity(corpus_pipeline):
    ok = True
    balls = 0
    for kernel, seq, dm, _ in corpus_pipeline:
        for center in range(kernel.n):
            row = dm.values[center]
            for q in range(0, seq.k + 3):
                r = 2.0 ** -q
                members = delta_ball(kernel, seq, center, r).members
                expected = frozenset(int(y) for y in np.nonzero(row < r)[0])
                ok = ok and members == expected
                balls += 1
    report(7, ok, f"delta_ball equals the exact sublevel set on {balls} balls (zero tolerance)")


def test_criterion_08_eigensolver(corpus):
    rng = np.random.default_rng(417)
    ok = True
    worst_recon, worst_orth = 0.0, 0.0
    for _ in range(50):
        n = int(rng.integers(2, 51))
        sym = rng.standard_normal((n, n))
        sym = (sym + sym.T) / 2.0
        decomp = eig_symmetric(sym)
        rebuilt = decomp.eigenvectors @ np.diag(decomp.eigenvalues) @ decomp.eigenvectors.T
        recon = float(np.abs(rebuilt - sym).max())
        orth = float(np.abs(decomp.eigenvectors.T @ decomp.eigenvectors - np.eye(n)).max())
        worst_recon = max(worst_recon, recon)
        worst_orth = max(worst_orth, orth)
    ok = ok and worst_recon <= 1e-8 and worst_orth <= 1e-8
    for kernel in [newtonian_kernel(60, 1.0, 2.0), *corpus[:20]]:
        decomp = spectral_decomposition(kernel)
        ok = ok and decomp.eigenvalues.min() >= -2.0 - 1e-10
        ok = ok and decomp.eigenvalues.max() <= 1e-10
        null = np.sqrt(kernel.values.sum(axis=1))
        null /= np.linalg.norm(null)
        residual = float(np.abs(graph_laplacian(kernel) @ null).max())
        alignment = abs(float(null @ decomp.eigenvectors[:, -1]))
        ok = ok and residual <= 1e-8 and alignment >= 1.0 - 1e-8
    report(8, ok, f"50 random matrices: worst reconstruction {worst_recon:.2e}, worst orthonormality {worst_orth:.2e}; L spectrum in [-2, 1e-10] with null vector recovered")


def test_criterion_09_diffusion_analytic_case():
    kernel = affinity_matrix([[1.0, 1.0], [1.0, 1.0]])
    dt = diffusion_distance_matrix(spectral_decomposition(kernel), 0.005)
    oracle = math.sqrt(2.0 * math.exp(-0.01))
    error = abs(dt[0, 1] - oracle)
    report(9, error <= 1e-6, f"d_t(0,1) = {dt[0, 1]:.9f} vs closed form {oracle:.9f} (error {error:.2e})")


def test_criterion_10_figure_shape_parity():
    kernel = newtonian_kernel(60, 1.0, 2.0)
    seq = compute_lambda_sequence(kernel)
    ok = True
    pairs = 0
    for center in range(60):
        for q in range(0, seq.k + 2):
            members = sorted(delta_ball(kernel, seq, center, 2.0 ** -q).members)
            ok = ok and members == list(range(members[0], members[-1] + 1))
            ok = ok and members[0] <= center <= members[-1]
            width = max(abs(v - center) for v in members)
            euclid = [v for v in range(60) if abs(v - center) < width + 1]
            ok = ok and members == euclid
            pairs += 1
    report(10, ok, f"all {pairs} F-balls are centered integer intervals with Jaccard 1.0 against matched E-balls")
