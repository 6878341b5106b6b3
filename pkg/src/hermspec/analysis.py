"""Derived spectral quantities and theorem/bound verification reports.

Everything here is a pure function of digraphs and spectra.  Reports are
small dataclasses that serialize to JSON together with the digest of the
input digraph, so a verification run can be replayed against its input.

Tolerances: a Spectrum carries zero_tol = 1e-8 max(1, rho); comparisons
between two spectra use the sum of their zero tolerances, comparisons of
a bound against a spectrum use that spectrum's own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .digraph import Digraph, digraph_digest
from .eigen import Spectrum, batch_spectra, hermitian_eigen, spectrum
from .hermitian import DEFAULT_ALPHA_GRID, OMEGA, AlphaParam, build_matrix


def spectral_radius(sp) -> float:
    """rho = max(|nu_1|, |nu_n|) of a non-empty spectrum or value array."""
    if not isinstance(sp, Spectrum):
        sp = Spectrum.from_values(np.asarray(sp, dtype=float))
    if sp.n == 0:
        raise ValueError("spectral radius of an empty spectrum")
    return sp.rho


@dataclass(frozen=True)
class EtaCounts:
    """Counts of non-negative and non-positive eigenvalues.

    Values within the zero band count on both sides, so
    eta_plus + eta_minus >= n always.
    """

    eta_plus: int
    eta_minus: int

    def to_json_dict(self) -> dict:
        return {"eta_plus": self.eta_plus, "eta_minus": self.eta_minus}


def eta_counts(sp: Spectrum) -> EtaCounts:
    """eta+ = #{nu >= -zero_tol}, eta- = #{nu <= +zero_tol}."""
    tol = sp.zero_tol
    plus = sum(1 for x in sp.values if x >= -tol)
    minus = sum(1 for x in sp.values if x <= tol)
    return EtaCounts(eta_plus=plus, eta_minus=minus)


def interlacing_margin(parent_values, sub_values) -> float:
    """Worst slack in nu_s >= kappa_s >= nu_(s+t); >= 0 means interlaced.

    Both inputs must be sorted descending.  An empty sub spectrum
    interlaces vacuously (margin +inf).
    """
    pv = np.asarray(parent_values, dtype=float)
    sv = np.asarray(sub_values, dtype=float)
    m = sv.shape[0]
    if m == 0:
        return math.inf
    t = pv.shape[0] - m
    upper = float((pv[:m] - sv).min())
    lower = float((sv - pv[t:]).min())
    return min(upper, lower)


def check_interlacing(parent: Spectrum, sub: Spectrum) -> bool:
    """True iff sub's eigenvalues interlace parent's within tolerance."""
    if sub.n > parent.n:
        raise ValueError(f"sub spectrum ({sub.n}) longer than parent ({parent.n})")
    tol = parent.zero_tol + sub.zero_tol
    return interlacing_margin(parent.values, sub.values) >= -tol


def independence_bound_check(g: Digraph, alpha: AlphaParam, k: int) -> bool:
    """Check eta+ >= k and eta- >= k for an independent set of size k."""
    if not 1 <= k <= g.n:
        raise ValueError(f"independent-set size {k} out of range 1..{g.n}")
    sp = spectrum(g, alpha)
    counts = eta_counts(sp)
    return counts.eta_plus >= k and counts.eta_minus >= k


def is_spectrum_symmetric(sp: Spectrum) -> bool:
    """True iff the spectrum equals its negation as a multiset.

    Sorted descending, this means values[i] + values[n-1-i] ~ 0 for all
    i, within twice the zero tolerance.
    """
    vals = sp.as_array()
    if vals.size == 0:
        return True
    return bool(np.all(np.abs(vals + vals[::-1]) <= 2.0 * sp.zero_tol))


def bipartite_symmetry_check(g: Digraph, alpha: AlphaParam = OMEGA) -> bool:
    """Verify spectral symmetry of a bipartite digraph by both arguments.

    (a) For every eigenpair (nu, z) the vector that agrees with z on X
        and with -z on Y must satisfy N z' = -nu z' up to 1e-8 * scale.
    (b) The spectrum must equal its own negation as a multiset.
    Returns the conjunction; raises ValueError on non-bipartite input.
    """
    part = g.bipartition()
    if part is None:
        raise ValueError("digraph is not bipartite")
    mat = build_matrix(g, alpha)
    if g.n == 0:
        return True
    eig = hermitian_eigen(mat)
    flip = np.array([1.0 if s == "X" else -1.0 for s in part.side])
    flipped = eig.vectors * flip[:, None]
    resid = mat.array @ flipped + flipped * eig.values[None, :]
    scale = max(1.0, mat.norm_fro())
    eigvector_ok = bool(np.linalg.norm(resid, axis=0).max(initial=0.0) <= 1e-8 * scale)
    sym_ok = is_spectrum_symmetric(eig.spectrum)
    return eigvector_ok and sym_ok


# --- bound reports ---


@dataclass(frozen=True)
class RadiusReport:
    """Lower bound factor on nu_1 relative to the spectral radius.

    regime is 'omega' (factor 1/2 for the second kind), 'a' (factor a
    when a > 1/3), or 'general' (factor 1/3).  ratio is nu_1 / rho, by
    convention 1.0 for the zero matrix.
    """

    rho: float
    nu1: float
    ratio: float
    bound_factor: float
    regime: str
    holds: bool
    alpha: str
    digest: str

    def to_json_dict(self) -> dict:
        return {
            "rho": self.rho,
            "nu1": self.nu1,
            "ratio": self.ratio,
            "bound_factor": self.bound_factor,
            "regime": self.regime,
            "holds": self.holds,
            "alpha": self.alpha,
            "digest": self.digest,
        }


def radius_bound_factor(alpha: AlphaParam) -> tuple:
    """(factor, regime) applicable to N^alpha: 1/2 for omega, a for
    a > 1/3, else 1/3."""
    if alpha == OMEGA:
        return 0.5, "omega"
    if alpha.a > 1.0 / 3.0:
        return alpha.a, "a"
    return 1.0 / 3.0, "general"


def radius_bound_report(g: Digraph, alpha: AlphaParam = OMEGA) -> RadiusReport:
    """Check nu_1 >= factor * rho for the regime that alpha falls in."""
    sp = spectrum(g, alpha)
    factor, regime = radius_bound_factor(alpha)
    rho = sp.rho if sp.n else 0.0
    nu1 = sp.largest if sp.n else 0.0
    ratio = nu1 / rho if rho > 0.0 else 1.0
    holds = nu1 >= factor * rho - sp.zero_tol
    return RadiusReport(
        rho=rho,
        nu1=nu1,
        ratio=ratio,
        bound_factor=factor,
        regime=regime,
        holds=holds,
        alpha=alpha.label(),
        digest=digraph_digest(g),
    )


@dataclass(frozen=True)
class DegreeBoundReport:
    """Average-degree lower bound d = (s + 2t)/n on the largest
    second-kind eigenvalue."""

    n: int
    s: int
    t: int
    d: float
    mu1: float
    holds: bool
    digest: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "t": self.t,
            "d": self.d,
            "mu1": self.mu1,
            "holds": self.holds,
            "digest": self.digest,
        }


def degree_bound_report(g: Digraph) -> DegreeBoundReport:
    """Check mu_1 >= (s + 2t)/n against the second-kind spectrum."""
    if g.n == 0:
        raise ValueError("degree bound needs at least one vertex")
    s, t = g.arc_edge_counts()
    d = (s + 2.0 * t) / g.n
    sp = spectrum(g, OMEGA)
    mu1 = sp.largest
    return DegreeBoundReport(
        n=g.n,
        s=s,
        t=t,
        d=d,
        mu1=mu1,
        holds=mu1 >= d - sp.zero_tol,
        digest=digraph_digest(g),
    )


# --- orientation search for the independence bound ---


@dataclass(frozen=True)
class IndependenceBoundResult:
    """Smallest min(eta+, eta-) over enumerated orientations and alphas.

    When exhaustive is true the bound certifies alpha(G) <= bound; a
    sampled run is only a heuristic.  The witness orientation is the
    first one attaining the bound in enumeration order (orientation
    index major, alpha-grid order minor).
    """

    bound: int
    orientation: Digraph
    alpha: AlphaParam
    exhaustive: bool
    states_checked: int

    def to_json_dict(self) -> dict:
        from .digraph import serialize_edge_list

        return {
            "bound": self.bound,
            "alpha": self.alpha.label(),
            "exhaustive": self.exhaustive,
            "states_checked": self.states_checked,
            "orientation": serialize_edge_list(self.orientation),
            "digest": digraph_digest(self.orientation),
        }


def _undirected_edges(g: Digraph) -> list:
    """Edge list of an all-digon simple graph; raises otherwise."""
    if g.loops:
        raise ValueError("underlying graph must be loop-free")
    edges = []
    for (u, v), m in sorted(g.arcs.items()):
        if m != 1 or g.e(v, u) != 1:
            raise ValueError("underlying graph must have every pair joined by a single digon or nothing")
        if u < v:
            edges.append((u, v))
    return edges


def _orientation_from_index(n: int, edges: list, idx: int, base: int) -> Digraph:
    arcs = {}
    rem = idx
    for (u, v) in edges:
        d = rem % base
        rem //= base
        if d == 0:
            arcs[(u, v)] = 1
        elif d == 1:
            arcs[(v, u)] = 1
        else:
            arcs[(u, v)] = 1
            arcs[(v, u)] = 1
    return Digraph(n, arcs)


def best_independence_upper_bound(
    g_undirected: Digraph,
    alpha_grid=DEFAULT_ALPHA_GRID,
    digons: bool = True,
    enumerate_limit: int = 200_000,
    sample_size: int = 20_000,
    seed: int = 0,
    chunk: int = 8192,
) -> IndependenceBoundResult:
    """Minimize the eta bound over mixed orientations of an undirected graph.

    Each edge of the (all-digon, simple) input independently becomes a
    forward arc, a backward arc, or stays a digon; digons=False restricts
    to the two proper orientations.  All 3^|E| (or 2^|E|) states are
    enumerated when that count is at most enumerate_limit; otherwise a
    seeded random sample of sample_size states is scanned and the result
    is flagged non-exhaustive.  State index digits are read least
    significant first along the sorted edge list.
    """
    n = g_undirected.n
    edges = _undirected_edges(g_undirected)
    base = 3 if digons else 2
    total = base ** len(edges)
    if total <= enumerate_limit:
        indices = np.arange(total, dtype=np.int64)
        exhaustive = True
    else:
        rng = np.random.default_rng(seed)
        raw = rng.integers(0, total, size=sample_size, dtype=np.int64)
        indices = np.unique(raw)
        exhaustive = False

    alphas = list(alpha_grid)
    if not alphas:
        raise ValueError("alpha grid must be non-empty")
    weights = []
    for al in alphas:
        weights.append(np.array([al.value, al.conj, 2.0 * al.a], dtype=np.complex128))

    best_bound = n + 1
    best_idx = -1
    best_ai = 0
    checked = 0
    for start in range(0, indices.shape[0], chunk):
        batch_idx = indices[start : start + chunk]
        nb = batch_idx.shape[0]
        checked += nb
        digits = np.empty((nb, len(edges)), dtype=np.int64)
        rem = batch_idx.copy()
        for j in range(len(edges)):
            digits[:, j] = rem % base
            rem //= base
        for ai, al in enumerate(alphas):
            mats = np.zeros((nb, n, n), dtype=np.complex128)
            w = weights[ai]
            for j, (u, v) in enumerate(edges):
                mats[:, u, v] = w[digits[:, j]]
                mats[:, v, u] = np.conj(w[digits[:, j]])
            vals = batch_spectra(mats)
            tol = 1e-8 * np.maximum(1.0, np.abs(vals).max(axis=1, initial=0.0))
            plus = (vals >= -tol[:, None]).sum(axis=1)
            minus = (vals <= tol[:, None]).sum(axis=1)
            bounds = np.minimum(plus, minus)
            k = int(np.argmin(bounds))
            cand = int(bounds[k])
            cand_idx = int(batch_idx[k])
            # first-found tie break: orientation index major, alpha-grid order minor
            better = cand < best_bound or (
                cand == best_bound and (cand_idx, ai) < (best_idx, best_ai)
            )
            if better:
                best_bound, best_idx, best_ai = cand, cand_idx, ai
    witness = _orientation_from_index(n, edges, best_idx, base)
    return IndependenceBoundResult(
        bound=best_bound,
        orientation=witness,
        alpha=alphas[best_ai],
        exhaustive=exhaustive,
        states_checked=checked,
    )
