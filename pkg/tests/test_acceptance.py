"""Acceptance checks, one test per criterion.

Every test prints exactly one status line of the form

    [criterion NN] name: PASS (X.XXs, budget Ys)

The budget is informational: runtimes vary across machines, so the time
is printed next to the budget rather than asserted.  Tolerances inside
the assertions are the contractual part.
"""

import itertools
import json
import time
from contextlib import contextmanager

import numpy as np

from hermspec import cli
from hermspec.analysis import (
    check_interlacing,
    degree_bound_report,
    independence_bound_check,
    radius_bound_factor,
    radius_bound_report,
)
from hermspec.digraph import (
    cartesian_product,
    directed_cycle,
    new_digraph,
    parse_edge_list,
    random_bipartite_digraph,
    random_mixed_graph,
)
from hermspec.eigen import batch_spectra, char_poly, jacobi_eigh_batch, spectrum
from hermspec.hermitian import ALPHA_I, ALPHA_ONE, OMEGA, AlphaParam, build_matrix
from hermspec.oracle import (
    bulk_matrices,
    bulk_matrix_powers,
    bulk_walk_counts,
    circulant_target_scan,
    count_digraphs,
    digraph_from_state_index,
    eval_walk_counts,
    max_independent_set,
    pair_states,
    state_mults_batch,
    vertex_pairs,
    walk_weight_sum,
)


@contextmanager
def criterion(num: int, name: str, budget: str):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        status = "PASS"
    finally:
        dt = time.perf_counter() - t0
        print(f"[criterion {num:02d}] {name}: {status} ({dt:.2f}s, budget {budget})")


def _rho_rows(vals: np.ndarray) -> np.ndarray:
    """Spectral radius per row of a descending (B, n) value table."""
    return np.maximum(np.abs(vals[:, 0]), np.abs(vals[:, -1]))


def _pair_position(m: int) -> dict:
    return {pair: i for i, pair in enumerate(vertex_pairs(m))}


def test_criterion_01_triangle_spectrum():
    with criterion(1, "triangle-spectrum", "0.001s"):
        vals = spectrum(directed_cycle(3)).as_array()
        assert np.max(np.abs(vals - np.array([1.0, 1.0, -2.0]))) <= 1e-9


def test_criterion_02_half_ratio_tight():
    with criterion(2, "half-ratio-tightness", "0.01s"):
        c3 = directed_cycle(3)
        sp = spectrum(c3)
        assert abs(sp.values[0] / sp.rho - 0.5) <= 1e-9
        # largest eigenvalue is not simple: the ratio cannot be improved
        # by perturbing within this graph
        assert abs(sp.values[0] - sp.values[1]) <= 1e-9
        rep = radius_bound_report(c3)
        assert rep.holds and abs(rep.ratio - 0.5) <= 1e-9
        prod = cartesian_product(c3, c3)
        prep = radius_bound_report(prod)
        assert prep.holds
        assert abs(prep.ratio - 0.5) <= 1e-9  # sums of pairs keep the ratio


def test_criterion_03_radius_bounds_exhaustive():
    with criterion(3, "radius-bounds-exhaustive", "60s"):
        states = pair_states(1, digons=True)
        alphas = (OMEGA, ALPHA_I, ALPHA_ONE, AlphaParam(0.6, 0.8))
        for n in range(1, 5):
            idxs = np.arange(count_digraphs(n, 1, True))
            mults = state_mults_batch(idxs, n, states)
            for alpha in alphas:
                factor, _ = radius_bound_factor(alpha)
                vals = batch_spectra(bulk_matrices(mults, alpha))
                rho = _rho_rows(vals)
                assert np.all(vals[:, 0] >= factor * rho - 1e-8), (n, alpha.label())


def test_criterion_04_interlacing_exhaustive():
    with criterion(4, "interlacing-exhaustive", "300s"):
        states = pair_states(1, digons=False)
        base = len(states)
        alphas = (OMEGA, ALPHA_I)
        tables = {}
        for m in range(1, 6):
            idxs = np.arange(base ** (m * (m - 1) // 2))
            mults = state_mults_batch(idxs, m, states)
            for alpha in alphas:
                tables[(m, alpha.label())] = batch_spectra(bulk_matrices(mults, alpha))

        for n in range(2, 6):
            npairs = n * (n - 1) // 2
            total = base**npairs
            digits = (
                np.arange(total)[:, None] // (base ** np.arange(npairs))[None, :]
            ) % base
            parent_pos = _pair_position(n)
            for size in range(1, n):
                for subset in itertools.combinations(range(n), size):
                    rank = {v: i for i, v in enumerate(subset)}
                    sub_pos = _pair_position(size)
                    cols, weights = [], []
                    for (u, v), p in parent_pos.items():
                        if u in rank and v in rank:
                            cols.append(p)
                            weights.append(base ** sub_pos[(rank[u], rank[v])])
                    if cols:
                        sub_idx = digits[:, cols] @ np.array(weights, dtype=np.int64)
                    else:
                        sub_idx = np.zeros(total, dtype=np.int64)
                    t = n - size
                    for alpha in alphas:
                        pv = tables[(n, alpha.label())]
                        sv = tables[(size, alpha.label())][sub_idx]
                        upper = (pv[:, :size] - sv).min(axis=1)
                        lower = (sv - pv[:, t:]).min(axis=1)
                        margin = np.minimum(upper, lower)
                        tol = 1e-8 * np.maximum(1.0, _rho_rows(pv)) + 1e-8 * np.maximum(
                            1.0, _rho_rows(sv)
                        )
                        assert np.all(margin >= -tol), (n, subset, alpha.label())

        # the vectorized sweep above must agree with the public API on a
        # seeded sample of (graph, subset) pairs
        rng = np.random.default_rng(404)
        for _ in range(200):
            n = int(rng.integers(2, 6))
            idx = int(rng.integers(base ** (n * (n - 1) // 2)))
            g = digraph_from_state_index(n, idx, states)
            size = int(rng.integers(1, n))
            subset = sorted(int(v) for v in rng.choice(n, size=size, replace=False))
            alpha = alphas[int(rng.integers(2))]
            parent = spectrum(g, alpha)
            sub = spectrum(g.induced_subdigraph(subset), alpha)
            assert check_interlacing(parent, sub)


def test_criterion_05_independence_bound_exhaustive():
    with criterion(5, "independence-bound-exhaustive", "60s"):
        states = pair_states(1, digons=True)
        alphas = (OMEGA, ALPHA_I)
        for n in range(1, 5):
            pairs = vertex_pairs(n)
            npairs = len(pairs)
            idxs = np.arange(count_digraphs(n, 1, True))
            mults = state_mults_batch(idxs, n, states)
            if npairs:
                occupied = np.stack(
                    [(mults[:, u, v] + mults[:, v, u]) > 0 for (u, v) in pairs],
                    axis=1,
                )
                pattern = occupied @ (1 << np.arange(npairs, dtype=np.int64))
            else:
                pattern = np.zeros(idxs.shape[0], dtype=np.int64)
            k_of = {}
            for pat in np.unique(pattern):
                g = new_digraph(n)
                for j, (u, v) in enumerate(pairs):
                    if int(pat) >> j & 1:
                        g = g.add_edge(u, v)
                k_of[int(pat)] = max_independent_set(g)[0]
            kvals = np.array([k_of[int(p)] for p in pattern])
            for alpha in alphas:
                vals = batch_spectra(bulk_matrices(mults, alpha))
                tol = 1e-8 * np.maximum(1.0, _rho_rows(vals))
                eta_plus = (vals >= -tol[:, None]).sum(axis=1)
                eta_minus = (vals <= tol[:, None]).sum(axis=1)
                assert np.all(eta_plus >= kvals), (n, alpha.label())
                assert np.all(eta_minus >= kvals), (n, alpha.label())

        rng = np.random.default_rng(505)
        for _ in range(100):
            n = int(rng.integers(1, 5))
            idx = int(rng.integers(count_digraphs(n, 1, True)))
            g = digraph_from_state_index(n, idx, states)
            k, _ = max_independent_set(g)
            assert independence_bound_check(g, OMEGA, k)
            assert independence_bound_check(g, ALPHA_I, k)


def test_criterion_06_bipartite_symmetry():
    with criterion(6, "bipartite-symmetry", "30s"):
        rng = np.random.default_rng(606)
        for _ in range(200):
            n = int(rng.integers(2, 13))
            g = random_bipartite_digraph(n, rng)
            vals = spectrum(g).as_array()
            assert np.max(np.abs(vals + vals[::-1])) <= 1e-8
            cp = char_poly(g)
            scale = max(1.0, max(abs(c) for c in cp.coeffs))
            assert all(abs(c) <= 1e-8 * scale for c in cp.coeffs[1::2])


def test_criterion_07_walk_oracle_equivalence():
    with criterion(7, "walk-oracle-equivalence", "120s"):
        states = pair_states(2, digons=True)
        alphas = (OMEGA, ALPHA_I)
        worst = 0.0
        chunk = 16384
        for n in range(1, 5):
            total = count_digraphs(n, 2, True)
            for start in range(0, total, chunk):
                idxs = np.arange(start, min(start + chunk, total))
                mults = state_mults_batch(idxs, n, states)
                counts = bulk_walk_counts(mults, kmax=4)
                for alpha in alphas:
                    tables = eval_walk_counts(counts, alpha)
                    powers = bulk_matrix_powers(mults, alpha, 4)
                    worst = max(worst, float(np.max(np.abs(tables - powers))))
        assert worst < 1e-10

        # spot-check the arc-by-arc recursive form directly
        rng = np.random.default_rng(707)
        for _ in range(50):
            n = int(rng.integers(1, 5))
            idx = int(rng.integers(count_digraphs(n, 2, True)))
            g = digraph_from_state_index(n, idx, states)
            alpha = alphas[int(rng.integers(2))]
            k = int(rng.integers(0, 5))
            u = int(rng.integers(n))
            v = int(rng.integers(n))
            power = np.linalg.matrix_power(build_matrix(g, alpha).array, k)
            w = walk_weight_sum(g, alpha, u, v, k)
            assert abs(w.value - power[u, v]) < 1e-10


def test_criterion_08_average_degree_bound():
    with criterion(8, "average-degree-bound", "30s"):
        rng = np.random.default_rng(808)
        for _ in range(500):
            n = int(rng.integers(1, 16))
            g = random_mixed_graph(n, rng, max_mult=2)
            rep = degree_bound_report(g)
            assert rep.mu1 >= rep.d - 1e-8
            assert rep.holds


def test_criterion_09_charpoly_search_cli(tmp_path):
    with criterion(9, "figure-charpoly-search", "600s"):
        outdir = tmp_path / "search"
        rc = cli.main(
            [
                "search",
                "charpoly",
                "5",
                "1 0 -7 0 6 0",
                "--nonbipartite",
                "--outdir",
                str(outdir),
            ]
        )
        assert rc == 0
        manifest = json.loads((outdir / "manifest.json").read_text())
        assert manifest["matches"] >= 1
        witness = parse_edge_list((outdir / "witness_000.el").read_text())
        assert witness.bipartition() is None
        vals = spectrum(witness).as_array()
        root6 = float(np.sqrt(6.0))
        target = np.array([root6, 1.0, 0.0, -1.0, -root6])
        assert np.max(np.abs(vals - target)) <= 1e-8


def test_criterion_10_circulant_targets():
    report = None
    with criterion(10, "circulant-target-scan", "non-blocking"):
        report = circulant_target_scan()
        # the scan itself must complete and produce a coherent report;
        # hitting the targets is reported, not required
        assert report.n == 5
        if report.simple_found:
            assert report.simple_jumps is not None
        if report.multi_found:
            assert report.multi_jumps is not None
    print(
        f"[criterion 10] outcome: simple="
        f"{'found ' + str(report.simple_jumps) if report.simple_found else 'not found'}"
        f" multi="
        f"{'found ' + str(report.multi_jumps) if report.multi_found else 'not found'}"
    )


def test_criterion_11_eigensolver_self_tests():
    with criterion(11, "eigensolver-self-tests", "60s"):
        rng = np.random.default_rng(1111)
        sizes = rng.integers(1, 51, size=1000)
        for n in np.unique(sizes):
            b = int((sizes == n).sum())
            raw = rng.standard_normal((b, n, n)) + 1j * rng.standard_normal((b, n, n))
            scale = rng.uniform(0.1, 10.0, size=(b, 1, 1))
            mats = scale * (raw + np.conj(np.swapaxes(raw, 1, 2))) / 2.0
            vals, vecs = jacobi_eigh_batch(mats)
            recon = np.einsum("bij,bj,bkj->bik", vecs, vals, np.conj(vecs))
            fro = np.linalg.norm(mats, axis=(1, 2))
            err = np.linalg.norm(recon - mats, axis=(1, 2))
            assert np.all(err <= 1e-9 * np.maximum(1.0, fro))
            tr = np.einsum("bii->b", mats).real
            assert np.all(
                np.abs(vals.sum(axis=1) - tr) <= 1e-9 * np.maximum(1.0, np.abs(tr))
            )
            tr2 = fro**2
            assert np.all(
                np.abs((vals**2).sum(axis=1) - tr2) <= 1e-9 * np.maximum(1.0, tr2)
            )
