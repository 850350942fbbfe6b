"""Bijection-sum kernels for the brute-force configuration pairing.

Two interchangeable backends:

* ``numba``: ``@njit`` backtracking over label-compatible bijections, pruning a
  branch as soon as a completed bracket has a crossing-edge count other than one.
* ``numpy``: materialises every label-compatible bijection in chunks and
  evaluates all brackets with vectorised adjacency lookups.

Set ``LIEBASIS_DISABLE_NUMBA=1`` to force the numpy path. Numba is also skipped
when it is not importable.

Encoding shared by both: ``vlab[v]`` label code of vertex ``v``; ``adj[u, v] = 1``
for a directed edge ``u -> v``; ``plab[p]`` label code at position ``p``;
``spans`` rows ``(lo, mid, hi)`` in post-order. A bijection is stored as
``perm[p] = v`` (position to vertex).
"""

from __future__ import annotations

import itertools
import math
import os

import numpy as np

_DISABLED = os.environ.get("LIEBASIS_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

# int64 accumulation is exact while the bijection count stays below 20!
MAX_DEGREE = 20
CHUNK = 1 << 16


def default_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def _count_leftward(perm, adj):
    n = perm.shape[0]
    left = 0
    for i in range(n):
        for j in range(i + 1, n):
            left += adj[perm[j], perm[i]]
    return left


def _pair_backtrack(vlab, adj, und, plab, spans, span_ptr):
    n = vlab.shape[0]
    perm = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    cand = np.zeros(n, dtype=np.int64)
    total = 0
    p = 0
    while p >= 0:
        if perm[p] >= 0:
            used[perm[p]] = False
            perm[p] = -1
        found = False
        v = cand[p]
        while v < n:
            if not used[v] and vlab[v] == plab[p]:
                perm[p] = v
                ok = True
                # brackets closing at position p
                for s in range(span_ptr[p], span_ptr[p + 1]):
                    lo = spans[s, 0]
                    mid = spans[s, 1]
                    hi = spans[s, 2]
                    cross = 0
                    for i in range(lo, mid):
                        for j in range(mid, hi):
                            cross += und[perm[i], perm[j]]
                    if cross != 1:
                        ok = False
                        break
                if ok:
                    used[v] = True
                    cand[p] = v + 1
                    found = True
                    break
                perm[p] = -1
            v += 1
        if not found:
            cand[p] = 0
            p -= 1
            continue
        if p == n - 1:
            if _count_leftward(perm, adj) % 2 == 0:
                total += 1
            else:
                total -= 1
            continue
        p += 1
        cand[p] = 0
    return total


if HAVE_NUMBA:
    _count_leftward = njit(cache=True)(_count_leftward)
    _pair_backtrack_nb = njit(cache=True)(_pair_backtrack)
else:  # pragma: no cover - exercised only without numba
    _pair_backtrack_nb = None


def _span_index(spans: np.ndarray, n: int) -> np.ndarray:
    """``span_ptr[p]:span_ptr[p+1]`` indexes the spans whose last position is ``p``."""
    ptr = np.zeros(n + 1, dtype=np.int64)
    for _, _, hi in spans:
        ptr[hi] += 1
    return np.cumsum(ptr)


def label_bijections(vlab: np.ndarray, plab: np.ndarray):
    """Yield arrays ``perm`` (position -> vertex) respecting labels, in chunks."""
    n = len(vlab)
    codes = sorted(set(plab.tolist()))
    groups_pos = [np.flatnonzero(plab == c) for c in codes]
    groups_vtx = [np.flatnonzero(vlab == c) for c in codes]
    factors = [list(itertools.permutations(vs.tolist())) for vs in groups_vtx]
    buf = []
    for choice in itertools.product(*factors):
        perm = np.empty(n, dtype=np.int64)
        for pos, vs in zip(groups_pos, choice):
            perm[pos] = vs
        buf.append(perm)
        if len(buf) == CHUNK:
            yield np.stack(buf)
            buf = []
    if buf:
        yield np.stack(buf)


def _pair_numpy(vlab, adj, und, plab, spans) -> int:
    n = len(vlab)
    total = 0
    iu, ju = np.triu_indices(n, 1)
    for perms in label_bijections(vlab, plab):
        valid = np.ones(len(perms), dtype=bool)
        for lo, mid, hi in spans:
            left = perms[:, lo:mid]
            right = perms[:, mid:hi]
            cross = und[left[:, :, None], right[:, None, :]].sum(axis=(1, 2))
            valid &= cross == 1
        if not valid.any():
            continue
        perms = perms[valid]
        # edge from the vertex at the later position to the earlier one
        leftward = adj[perms[:, ju], perms[:, iu]].sum(axis=1)
        total += int(np.sum(1 - 2 * (leftward % 2)))
    return total


def encode(vertex_labels, edges, position_labels):
    """Turn labels/edges into the dense arrays both kernels consume.

    ``vertex_labels`` is ordered by internal vertex index; ``edges`` uses those
    indices. Returns ``None`` when the label multisets differ (no bijections).
    """
    if sorted(vertex_labels) != sorted(position_labels):
        return None
    codes = {c: i for i, c in enumerate(sorted(set(position_labels)))}
    n = len(vertex_labels)
    vlab = np.array([codes[c] for c in vertex_labels], dtype=np.int64)
    plab = np.array([codes[c] for c in position_labels], dtype=np.int64)
    adj = np.zeros((n, n), dtype=np.int64)
    for u, v in edges:
        adj[u, v] += 1
    und = adj + adj.T
    return vlab, adj, und, plab


def pair_bijection_sum(vertex_labels, edges, position_labels, spans, backend: str | None = None) -> int:
    """Sum of the signed bijection terms; see module docstring for the encoding."""
    enc = encode(vertex_labels, edges, position_labels)
    if enc is None:
        return 0
    vlab, adj, und, plab = enc
    n = len(vlab)
    if n > MAX_DEGREE:
        raise ValueError(f"brute force limited to degree {MAX_DEGREE}, got {n}")
    sp = np.asarray(spans, dtype=np.int64).reshape(-1, 3)
    backend = backend or default_backend()
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable or disabled")
        return int(_pair_backtrack_nb(vlab, adj, und, plab, sp, _span_index(sp, n)))
    if backend == "numpy":
        return _pair_numpy(vlab, adj, und, plab, sp)
    if backend == "python":
        return int(_pair_backtrack(vlab, adj, und, plab, sp, _span_index(sp, n)))
    raise ValueError(f"unknown backend {backend!r}")


def bijection_count(vertex_labels, position_labels) -> int:
    if sorted(vertex_labels) != sorted(position_labels):
        return 0
    out = 1
    for c in set(position_labels):
        out *= math.factorial(list(position_labels).count(c))
    return out
