import itertools

import numpy as np
import pytest

from hermspec.analysis import (
    best_independence_upper_bound,
    bipartite_symmetry_check,
    check_interlacing,
    degree_bound_report,
    eta_counts,
    independence_bound_check,
    interlacing_margin,
    is_spectrum_symmetric,
    radius_bound_factor,
    radius_bound_report,
    spectral_radius,
)
from hermspec.digraph import (
    directed_cycle,
    directed_path,
    new_digraph,
    random_bipartite_digraph,
    random_mixed_graph,
)
from hermspec.eigen import Spectrum, spectrum
from hermspec.hermitian import ALPHA_I, ALPHA_ONE, OMEGA, AlphaParam
from hermspec.oracle import max_independent_set


def test_spectral_radius():
    assert spectral_radius(np.array([1.0, 1.0, -2.0])) == 2.0
    assert spectral_radius(np.array([0.0])) == 0.0
    with pytest.raises(ValueError):
        spectral_radius(np.array([]))


def test_eta_counts():
    s = Spectrum.from_values(np.array([1.0, 1.0, -2.0]))
    c = eta_counts(s)
    assert (c.eta_plus, c.eta_minus) == (2, 1)
    z = Spectrum.from_values(np.array([0.0, 0.0]))
    assert (eta_counts(z).eta_plus, eta_counts(z).eta_minus) == (2, 2)
    assert eta_counts(z).to_json_dict() == {"eta_plus": 2, "eta_minus": 2}


def test_eta_counts_cover_all_eigenvalues():
    rng = np.random.default_rng(44)
    for _ in range(30):
        g = random_mixed_graph(int(rng.integers(1, 10)), rng)
        c = eta_counts(spectrum(g))
        assert c.eta_plus + c.eta_minus >= g.n


def test_interlacing_margin():
    pv = np.array([2.0, 0.0, -2.0])
    assert interlacing_margin(pv, np.array([1.0, -1.0])) == 1.0
    assert interlacing_margin(pv, np.array([])) == np.inf
    assert interlacing_margin(pv, pv) == 0.0


def test_check_interlacing_basic():
    parent = spectrum(directed_cycle(3))
    assert check_interlacing(parent, parent)
    sub = spectrum(directed_cycle(3).induced_subdigraph([0, 1]))
    assert check_interlacing(parent, sub)
    bad = Spectrum.from_values(np.array([5.0]))
    assert not check_interlacing(Spectrum.from_values(np.array([1.0, -1.0])), bad)
    with pytest.raises(ValueError):
        check_interlacing(sub, parent)


def test_interlacing_all_subsets_random_sample():
    # interlacing of the induced-subgraph spectrum inside the parent
    # spectrum, over every vertex subset of a seeded sample
    rng = np.random.default_rng(100)
    alphas = (OMEGA, ALPHA_I, ALPHA_ONE)
    for _ in range(12):
        n = int(rng.integers(2, 8))
        g = random_mixed_graph(n, rng, max_mult=2)
        for alpha in alphas:
            parent = spectrum(g, alpha)
            for size in range(1, n):
                for subset in itertools.combinations(range(n), size):
                    sub = spectrum(g.induced_subdigraph(subset), alpha)
                    assert check_interlacing(parent, sub), (
                        g,
                        alpha.label(),
                        subset,
                    )


def test_independence_bound_check():
    # triangle spectrum {1, 1, -2}: eta+ = 2, eta- = 1, so k = 1 passes
    assert independence_bound_check(directed_cycle(3), OMEGA, 1)
    assert independence_bound_check(new_digraph(4), OMEGA, 4)
    c5 = directed_cycle(5)
    assert independence_bound_check(c5, OMEGA, 2)
    with pytest.raises(ValueError):
        independence_bound_check(c5, OMEGA, 6)
    with pytest.raises(ValueError):
        independence_bound_check(c5, OMEGA, 0)


def test_independence_bound_on_random_graphs():
    rng = np.random.default_rng(71)
    for _ in range(25):
        g = random_mixed_graph(int(rng.integers(2, 9)), rng)
        k, _ = max_independent_set(g)
        if k >= 1:
            for alpha in (OMEGA, ALPHA_I):
                assert independence_bound_check(g, alpha, k)


def test_is_spectrum_symmetric():
    sym = Spectrum.from_values(
        np.array([np.sqrt(6), 1.0, 0.0, -1.0, -np.sqrt(6)])
    )
    assert is_spectrum_symmetric(sym)
    assert not is_spectrum_symmetric(Spectrum.from_values(np.array([1.0, 1.0, -2.0])))
    assert is_spectrum_symmetric(Spectrum.from_values(np.array([])))
    assert is_spectrum_symmetric(Spectrum.from_values(np.array([0.0])))


def test_bipartite_symmetry():
    assert bipartite_symmetry_check(directed_cycle(4))
    assert bipartite_symmetry_check(directed_path(3))
    rng = np.random.default_rng(55)
    for _ in range(20):
        g = random_bipartite_digraph(int(rng.integers(2, 11)), rng)
        for alpha in (OMEGA, ALPHA_I, AlphaParam(0.6, 0.8)):
            assert bipartite_symmetry_check(g, alpha)
    with pytest.raises(ValueError):
        bipartite_symmetry_check(directed_cycle(3))


def test_radius_bound_factor_regimes():
    assert radius_bound_factor(OMEGA) == (0.5, "omega")
    f, regime = radius_bound_factor(AlphaParam(0.6, 0.8))
    assert f == 0.6 and regime == "a"
    assert radius_bound_factor(ALPHA_I) == (1.0 / 3.0, "general")
    assert radius_bound_factor(ALPHA_ONE) == (1.0, "a")
    f, regime = radius_bound_factor(AlphaParam(0.2, np.sqrt(1 - 0.04)))
    assert f == 1.0 / 3.0 and regime == "general"


def test_radius_report_triangle():
    rep = radius_bound_report(directed_cycle(3))
    assert rep.regime == "omega" and rep.bound_factor == 0.5
    assert rep.ratio == pytest.approx(0.5, abs=1e-12)
    assert rep.holds
    d = rep.to_json_dict()
    assert d["regime"] == "omega" and d["holds"] is True
    assert len(d["digest"]) == 64


def test_radius_report_random():
    rng = np.random.default_rng(23)
    for _ in range(30):
        g = random_mixed_graph(int(rng.integers(1, 11)), rng, max_mult=2)
        for alpha in (OMEGA, ALPHA_I, AlphaParam(0.6, 0.8)):
            rep = radius_bound_report(g, alpha)
            assert rep.holds, (g, alpha.label(), rep.ratio, rep.bound_factor)


def test_radius_report_edgeless():
    rep = radius_bound_report(new_digraph(3))
    assert rep.rho == 0.0 and rep.ratio == 1.0 and rep.holds


def test_degree_bound_equality_cases():
    # single undirected edge: mu1 = 1 = (0 + 2)/2
    rep = degree_bound_report(new_digraph(2).add_edge(0, 1))
    assert rep.holds and rep.mu1 == pytest.approx(rep.d, abs=1e-12)
    # directed triangle: mu1 = 1 = (3 + 0)/3
    rep = degree_bound_report(directed_cycle(3))
    assert rep.holds and rep.mu1 == pytest.approx(1.0, abs=1e-12)
    assert (rep.s, rep.t) == (3, 0)


def test_degree_bound_random():
    rng = np.random.default_rng(37)
    for _ in range(40):
        g = random_mixed_graph(int(rng.integers(1, 13)), rng, max_mult=2)
        rep = degree_bound_report(g)
        assert rep.holds, (g, rep.mu1, rep.d)


def test_degree_bound_loop_counterexample():
    # a loop counts as an edge in t but only adds 2a = 1 to the largest
    # eigenvalue, so the mean-degree bound genuinely fails here; the
    # report must say so rather than paper over it
    rep = degree_bound_report(new_digraph(1).add_loop(0))
    assert rep.mu1 == pytest.approx(1.0, abs=1e-12)
    assert rep.d == pytest.approx(2.0)
    assert not rep.holds


def test_degree_bound_empty_graph():
    with pytest.raises(ValueError):
        degree_bound_report(new_digraph(0))


def test_best_independence_bound_edgeless():
    res = best_independence_upper_bound(new_digraph(3))
    assert res.bound == 3 and res.exhaustive and res.states_checked == 1


def test_best_independence_bound_single_edge():
    res = best_independence_upper_bound(new_digraph(2).add_edge(0, 1))
    assert res.bound == 1
    assert res.states_checked == 3


def test_best_independence_bound_c5():
    c5u = new_digraph(5)
    for i in range(5):
        c5u = c5u.add_edge(i, (i + 1) % 5)
    res = best_independence_upper_bound(c5u)
    assert res.exhaustive and res.states_checked == 3**5
    k, _ = max_independent_set(c5u)
    assert res.bound == k == 2
    # the reported orientation really achieves the bound
    assert res.orientation.n == 5
    c = eta_counts(spectrum(res.orientation, res.alpha))
    assert min(c.eta_plus, c.eta_minus) == res.bound
    d = res.to_json_dict()
    assert d["bound"] == 2 and d["exhaustive"] is True
    assert len(d["digest"]) == 64


def test_best_independence_bound_no_digons():
    c5u = new_digraph(5)
    for i in range(5):
        c5u = c5u.add_edge(i, (i + 1) % 5)
    res = best_independence_upper_bound(c5u, digons=False)
    assert res.states_checked == 2**5
    assert res.bound >= 2


def test_best_independence_bound_deterministic():
    c5u = new_digraph(5)
    for i in range(5):
        c5u = c5u.add_edge(i, (i + 1) % 5)
    r1 = best_independence_upper_bound(c5u)
    r2 = best_independence_upper_bound(c5u)
    assert r1.bound == r2.bound and r1.orientation == r2.orientation
    assert r1.alpha == r2.alpha


def test_best_independence_bound_sampled():
    c5u = new_digraph(5)
    for i in range(5):
        c5u = c5u.add_edge(i, (i + 1) % 5)
    res = best_independence_upper_bound(
        c5u, enumerate_limit=1, sample_size=500, seed=3
    )
    assert not res.exhaustive
    assert res.states_checked <= 500
    assert res.bound >= 2  # never better than the true independence number


def test_best_independence_bound_rejects_bad_input():
    with pytest.raises(ValueError):
        best_independence_upper_bound(directed_cycle(3))  # not all digons
    with pytest.raises(ValueError):
        best_independence_upper_bound(new_digraph(1).add_loop(0))
    with pytest.raises(ValueError):
        best_independence_upper_bound(new_digraph(2).add_edge(0, 1), alpha_grid=())
