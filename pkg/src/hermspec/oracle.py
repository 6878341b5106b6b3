"""Brute-force oracles used to validate the analytic modules.

Everything here recomputes a quantity by direct enumeration, staying
deliberately independent of the eigensolver internals: walk weights are
summed arc by arc, independence numbers come from subset search, and the
digraph searches scan every labeled digraph in a fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraph import Digraph
from .eigen import CharPoly, batch_char_poly, batch_spectra
from .hermitian import OMEGA, AlphaParam

WALK_BUDGET = 10
MIS_BUDGET = 20
DEFAULT_ENUM_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    """An oracle was asked for more enumeration than its budget allows."""


# --- walk weights, one arc at a time ---


@dataclass(frozen=True)
class WalkWeight:
    """Sum over enumerated walks of the product of per-step weights."""

    value: complex


def _step_options(g: Digraph, alpha: AlphaParam) -> list:
    """Per-vertex traversal options: each arc instance appears once as a
    forward step (weight alpha) and once as a backward step (weight
    conj(alpha)); each loop instance is one step of weight 2a."""
    options = [[] for _ in range(g.n)]
    for (p, q), m in sorted(g.arcs.items()):
        for _ in range(m):
            options[p].append((q, alpha.value))
            options[q].append((p, alpha.conj))
    for v, m in sorted(g.loops.items()):
        for _ in range(m):
            options[v].append((v, complex(2.0 * alpha.a)))
    return options


def walk_weight_sum(g: Digraph, alpha: AlphaParam, u: int, v: int, k: int) -> WalkWeight:
    """Total weight of length-k walks from u to v, enumerated arc by arc.

    Equals ((N^alpha)^k)_{uv}, but computed without ever forming the
    matrix.  k is capped at WALK_BUDGET.
    """
    if k < 0:
        raise ValueError("walk length must be non-negative")
    if k > WALK_BUDGET:
        raise BudgetExceeded(f"walk length {k} above budget {WALK_BUDGET}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("walk endpoints out of range")
    options = _step_options(g, alpha)

    def rec(x: int, left: int) -> complex:
        if left == 0:
            return 1.0 + 0.0j if x == v else 0.0 + 0.0j
        acc = 0.0 + 0.0j
        for (y, w) in options[x]:
            acc += w * rec(y, left - 1)
        return acc

    return WalkWeight(value=rec(u, k))


# --- bulk walk tables ---
#
# For loop-free digraphs every step weight is alpha or conj(alpha), so a
# walk's weight depends only on its forward-step count f.  One integer
# count table counts[b, k-1, u, v, f] therefore serves every alpha.


def _walk_counts_impl(mults, kmax, counts):
    # mults: (B, n, n) int64 with zero diagonal
    # counts: (B, kmax, n, n, kmax + 1) int64, zero-initialized
    nb = mults.shape[0]
    n = mults.shape[1]
    for b in range(nb):
        deg = np.zeros(n, np.int64)
        for u in range(n):
            for v in range(n):
                m = mults[b, u, v]
                if m > 0:
                    deg[u] += m
                    deg[v] += m
        offs = np.zeros(n + 1, np.int64)
        for x in range(n):
            offs[x + 1] = offs[x] + deg[x]
        tgt = np.empty(offs[n], np.int64)
        fwd = np.empty(offs[n], np.int64)
        fill = offs[:n].copy()
        for u in range(n):
            for v in range(n):
                m = mults[b, u, v]
                for _ in range(m):
                    tgt[fill[u]] = v
                    fwd[fill[u]] = 1
                    fill[u] += 1
                    tgt[fill[v]] = u
                    fwd[fill[v]] = 0
                    fill[v] += 1
        stack_v = np.empty(kmax + 1, np.int64)
        stack_i = np.empty(kmax + 1, np.int64)
        stack_f = np.empty(kmax + 1, np.int64)
        for s in range(n):
            depth = 0
            stack_v[0] = s
            stack_i[0] = offs[s]
            stack_f[0] = 0
            while depth >= 0:
                x = stack_v[depth]
                i = stack_i[depth]
                if depth < kmax and i < offs[x + 1]:
                    stack_i[depth] += 1
                    y = tgt[i]
                    f = stack_f[depth] + fwd[i]
                    depth += 1
                    stack_v[depth] = y
                    stack_i[depth] = offs[y]
                    stack_f[depth] = f
                    counts[b, depth - 1, s, y, f] += 1
                else:
                    depth -= 1


try:  # pragma: no cover - exercised indirectly
    from numba import njit

    _walk_counts_kernel = njit(cache=True, nogil=True)(_walk_counts_impl)
except ImportError:  # pragma: no cover
    _walk_counts_kernel = _walk_counts_impl


def bulk_walk_counts(mults, kmax: int) -> np.ndarray:
    """Forward-step-resolved walk counts for a batch of loop-free digraphs.

    mults is (B, n, n) integer arc multiplicities with zero diagonal;
    result[b, k-1, u, v, f] counts length-k walks u -> v that take f
    forward steps.
    """
    arr = np.ascontiguousarray(mults, dtype=np.int64)
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValueError(f"expected (B, n, n) multiplicities, got {arr.shape}")
    if np.diagonal(arr, axis1=1, axis2=2).any():
        raise ValueError("bulk walk tables require loop-free digraphs")
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    if kmax > WALK_BUDGET:
        raise BudgetExceeded(f"walk length {kmax} above budget {WALK_BUDGET}")
    nb, n = arr.shape[0], arr.shape[1]
    counts = np.zeros((nb, kmax, n, n, kmax + 1), dtype=np.int64)
    _walk_counts_kernel(arr, kmax, counts)
    return counts


def eval_walk_counts(counts, alpha: AlphaParam) -> np.ndarray:
    """Turn count tables into walk-weight tables (B, kmax+1, n, n);
    slot k=0 is the identity."""
    nb, kmax, n = counts.shape[0], counts.shape[1], counts.shape[2]
    wk = np.zeros((kmax, kmax + 1), dtype=np.complex128)
    for k in range(1, kmax + 1):
        for f in range(k + 1):
            wk[k - 1, f] = alpha.value ** f * alpha.conj ** (k - f)
    tables = np.einsum("bkuvf,kf->bkuv", counts, wk)
    out = np.empty((nb, kmax + 1, n, n), dtype=np.complex128)
    out[:, 0] = np.eye(n)
    out[:, 1:] = tables
    return out


def walk_weight_table(g: Digraph, alpha: AlphaParam, kmax: int) -> np.ndarray:
    """(kmax+1, n, n) walk-weight table of one loop-free digraph."""
    if g.loops:
        raise ValueError("bulk walk tables require loop-free digraphs; "
                         "use walk_weight_sum for loop-bearing cases")
    mults = np.zeros((1, g.n, g.n), dtype=np.int64)
    for (u, v), m in g.arcs.items():
        mults[0, u, v] = m
    counts = bulk_walk_counts(mults, kmax)
    return eval_walk_counts(counts, alpha)[0]


def bulk_matrices(mults, alpha: AlphaParam) -> np.ndarray:
    """N^alpha for a batch of multiplicity matrices (loop-free)."""
    arr = np.asarray(mults, dtype=np.int64)
    return arr * alpha.value + arr.transpose(0, 2, 1) * alpha.conj


def bulk_matrix_powers(mults, alpha: AlphaParam, kmax: int) -> np.ndarray:
    """(B, kmax+1, n, n) powers of N^alpha by repeated multiplication."""
    mats = bulk_matrices(mults, alpha)
    nb, n = mats.shape[0], mats.shape[1]
    out = np.empty((nb, kmax + 1, n, n), dtype=np.complex128)
    out[:, 0] = np.eye(n)
    for k in range(1, kmax + 1):
        out[:, k] = out[:, k - 1] @ mats
    return out


# --- exact independence number ---


def max_independent_set(g: Digraph) -> tuple:
    """Exact maximum independent set by bitmask branch and bound.

    Two vertices are dependent when joined by at least one arc in either
    direction, and a looped vertex is adjacent to itself, so it belongs
    to no independent set (its principal submatrix entry is nonzero,
    which is exactly what the eta bound needs ruled out).  Returns
    (k, witness) with the witness a sorted vertex tuple, the first
    maximum found in a fixed branching order.
    """
    n = g.n
    if n > MIS_BUDGET:
        raise BudgetExceeded(f"independent-set search capped at n = {MIS_BUDGET}")
    adj = [0] * n
    for (u, v) in g.arcs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best_k = 0
    best_set = 0

    def expand(cand: int, cur: int, size: int) -> None:
        nonlocal best_k, best_set
        if size > best_k:
            best_k = size
            best_set = cur
        if size + cand.bit_count() <= best_k:
            return
        bit = cand & -cand
        v = bit.bit_length() - 1
        expand(cand & ~(adj[v] | bit), cur | bit, size + 1)
        expand(cand & ~bit, cur, size)

    allowed = (1 << n) - 1
    for v in g.loops:
        allowed &= ~(1 << v)
    expand(allowed, 0, 0)
    witness = tuple(v for v in range(n) if best_set >> v & 1)
    return best_k, witness


# --- labeled digraph enumeration ---


def pair_states(max_mult: int = 1, digons: bool = True) -> list:
    """Ordered (forward, backward) multiplicity states for one vertex pair.

    Sorted by total multiplicity, then by backward multiplicity, so the
    first states are none, forward arc, backward arc, digon, ...
    digons=False keeps only one-sided states.
    """
    if max_mult < 1:
        raise ValueError("max_mult must be >= 1")
    states = [
        (f, b)
        for f in range(max_mult + 1)
        for b in range(max_mult + 1)
        if digons or f == 0 or b == 0
    ]
    states.sort(key=lambda fb: (fb[0] + fb[1], fb[1]))
    return states


def vertex_pairs(n: int) -> list:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def count_digraphs(n: int, max_mult: int = 1, digons: bool = True) -> int:
    return len(pair_states(max_mult, digons)) ** len(vertex_pairs(n))


def digraph_from_state_index(n: int, idx: int, states: list, pairs: list | None = None) -> Digraph:
    """Decode one enumeration index; pair (0,1) is the fastest digit."""
    if pairs is None:
        pairs = vertex_pairs(n)
    base = len(states)
    arcs = {}
    rem = idx
    for (u, v) in pairs:
        f, b = states[rem % base]
        rem //= base
        if f:
            arcs[(u, v)] = f
        if b:
            arcs[(v, u)] = b
    return Digraph(n, arcs)


def state_mults_batch(indices, n: int, states: list, pairs: list | None = None) -> np.ndarray:
    """Vectorized decode of enumeration indices to (B, n, n) multiplicities."""
    if pairs is None:
        pairs = vertex_pairs(n)
    idx = np.asarray(indices, dtype=np.int64)
    base = len(states)
    f_arr = np.array([s[0] for s in states], dtype=np.int64)
    b_arr = np.array([s[1] for s in states], dtype=np.int64)
    mults = np.zeros((idx.shape[0], n, n), dtype=np.int64)
    rem = idx.copy()
    for (u, v) in pairs:
        d = rem % base
        rem //= base
        mults[:, u, v] = f_arr[d]
        mults[:, v, u] = b_arr[d]
    return mults


def enumerate_digraphs(n: int, max_mult: int = 1, digons: bool = True,
                       budget: int = DEFAULT_ENUM_BUDGET):
    """Yield every labeled loop-free digraph on n vertices exactly once.

    Each unordered pair independently takes one of the pair_states; the
    stream order is the little-endian state index and is reproducible
    run to run.  Raises BudgetExceeded if the count is above budget.
    """
    states = pair_states(max_mult, digons)
    pairs = vertex_pairs(n)
    total = len(states) ** len(pairs)
    if total > budget:
        raise BudgetExceeded(
            f"{total} digraphs on {n} vertices exceed the enumeration budget {budget}"
        )
    for idx in range(total):
        yield digraph_from_state_index(n, idx, states, pairs)


# --- searches ---


def charpoly_search(n: int, target, require_nonbipartite: bool = False,
                    coeff_tol: float = 1e-6, max_mult: int = 1, digons: bool = True,
                    chunk: int = 65536, budget: int = DEFAULT_ENUM_BUDGET) -> list:
    """All labeled digraphs whose second-kind char poly matches target.

    target is a CharPoly or a coefficient sequence (1, c_1, ..., c_n);
    a match means every coefficient agrees within coeff_tol.  Digraphs
    come back in enumeration order; the non-bipartite flag filters by
    bipartition().
    """
    coeffs = np.asarray(target.coeffs if isinstance(target, CharPoly) else target, dtype=float)
    if coeffs.shape != (n + 1,):
        raise ValueError(f"target needs {n + 1} coefficients for order {n}")
    if coeffs[0] != 1.0:
        raise ValueError("target polynomial must be monic (leading coefficient 1)")
    states = pair_states(max_mult, digons)
    pairs = vertex_pairs(n)
    total = len(states) ** len(pairs)
    if total > budget:
        raise BudgetExceeded(
            f"{total} digraphs on {n} vertices exceed the enumeration budget {budget}"
        )
    matches = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        mults = state_mults_batch(idx, n, states, pairs)
        rows = batch_char_poly(bulk_matrices(mults, OMEGA))
        ok = (np.abs(rows - coeffs[None, :]) <= coeff_tol).all(axis=1)
        for i in np.nonzero(ok)[0]:
            g = digraph_from_state_index(n, int(idx[i]), states, pairs)
            if require_nonbipartite and g.bipartition() is not None:
                continue
            matches.append(g)
    return matches


# Display values from the two circulant plots: a simple circulant with
# extreme eigenvalues about (2.165, -3.165), and a multigraph circulant
# with about (4.0418, -6.8195) and |mu_n| / mu_1 > 1.68.
SIMPLE_CIRCULANT_TARGET = (2.165, -3.165)
MULTI_CIRCULANT_TARGET = (4.0418, -6.8195, 1.68)


@dataclass(frozen=True)
class CirculantScanReport:
    """Outcome of the jump-set scan against the two display targets."""

    n: int
    max_mult: int
    tol: float
    simple_found: bool
    simple_jumps: tuple | None
    simple_values: tuple | None
    multi_found: bool
    multi_jumps: tuple | None
    multi_values: tuple | None
    multi_ratio: float | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "max_mult": self.max_mult,
            "tol": self.tol,
            "simple": {
                "target": list(SIMPLE_CIRCULANT_TARGET),
                "found": self.simple_found,
                "jumps": [list(j) for j in self.simple_jumps] if self.simple_jumps else None,
                "values": list(self.simple_values) if self.simple_values else None,
            },
            "multi": {
                "target": list(MULTI_CIRCULANT_TARGET),
                "found": self.multi_found,
                "jumps": [list(j) for j in self.multi_jumps] if self.multi_jumps else None,
                "values": list(self.multi_values) if self.multi_values else None,
                "ratio": self.multi_ratio,
            },
        }


def circulant_target_scan(n: int = 5, max_mult: int = 3, tol: float = 5e-4) -> CirculantScanReport:
    """Scan circulant jump multiplicities for the two display spectra.

    Every multiplicity vector over offsets 1..n-1 up to max_mult is
    eigensolved; the simple target only admits 0/1 vectors.  Witnesses
    are first-found in little-endian index order.  Not finding a target
    is a reportable outcome, not an error.
    """
    offsets = list(range(1, n))
    base = max_mult + 1
    total = base ** len(offsets)
    vectors = []
    mats = np.zeros((total, n, n), dtype=np.complex128)
    for idx in range(total):
        rem = idx
        mv = []
        for j, off in enumerate(offsets):
            m = rem % base
            rem //= base
            mv.append(m)
            if m:
                for i in range(n):
                    mats[idx, i, (i + off) % n] += m * OMEGA.value
                    mats[idx, (i + off) % n, i] += m * OMEGA.conj
        vectors.append(tuple(mv))
    vals = batch_spectra(mats)

    simple = None
    multi = None
    for idx, mv in enumerate(vectors):
        mu1 = float(vals[idx, 0])
        mun = float(vals[idx, -1])
        if simple is None and max(mv) <= 1:
            if abs(mu1 - SIMPLE_CIRCULANT_TARGET[0]) <= tol and abs(mun - SIMPLE_CIRCULANT_TARGET[1]) <= tol:
                simple = idx
        if multi is None:
            t1, tn, min_ratio = MULTI_CIRCULANT_TARGET
            if (abs(mu1 - t1) <= tol and abs(mun - tn) <= tol
                    and mu1 > 0 and abs(mun) / mu1 > min_ratio):
                multi = idx
        if simple is not None and multi is not None:
            break

    def jumps_of(idx):
        return tuple((off, m) for off, m in zip(offsets, vectors[idx]) if m)

    return CirculantScanReport(
        n=n,
        max_mult=max_mult,
        tol=tol,
        simple_found=simple is not None,
        simple_jumps=jumps_of(simple) if simple is not None else None,
        simple_values=tuple(float(x) for x in vals[simple]) if simple is not None else None,
        multi_found=multi is not None,
        multi_jumps=jumps_of(multi) if multi is not None else None,
        multi_values=tuple(float(x) for x in vals[multi]) if multi is not None else None,
        multi_ratio=float(abs(vals[multi, -1]) / vals[multi, 0]) if multi is not None else None,
    )
