"""Deterministic restarted Lanczos for the bottom of a graph Laplacian spectrum.

The kernel vector is known in closed form (``D^{1/2} 1`` for the normalised
Laplacian, ``1`` for the combinatorial one) and is deflated explicitly; the
solver then returns the smallest eigenpair on its orthogonal complement.
Full re-orthogonalisation (two classical Gram-Schmidt passes) and thick
restarts keep the basis orthonormal to working precision.  The start vector is
fixed, and BLAS is pinned to one thread so results are bit-stable per
platform.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from threadpoolctl import threadpool_limits

from .errors import NoConvergence


@dataclass
class EigResult:
    value: float
    vector: np.ndarray
    residual: float
    iterations: int  # operator applications


def start_vector(n: int) -> np.ndarray:
    i = np.arange(n, dtype=np.float64)
    return np.cos(0.7 * i + 0.3) + 0.5 * np.sin(1.3 * i * i + 0.1)


def _orthogonalize(w: np.ndarray, V: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    for _ in range(2):
        w -= kernel * (kernel @ w)
        if V.shape[1]:
            w -= V @ (V.T @ w)
    return w


def smallest_deflated(
    op: sp.spmatrix,
    kernel: np.ndarray,
    tol: float = 1e-9,
    max_iter: int = 100_000,
    basis_size: int = 80,
    keep: int = 20,
) -> EigResult:
    """Smallest eigenpair of the symmetric ``op`` on the complement of ``kernel``."""
    n = op.shape[0]
    kernel = kernel / np.linalg.norm(kernel)
    if n <= 3:
        return _dense_deflated(op, kernel, tol)
    basis_size = min(basis_size, n - 1)
    keep = max(1, min(keep, basis_size // 2))
    with threadpool_limits(limits=1):
        V = np.zeros((n, basis_size))
        AV = np.zeros((n, basis_size))
        H = np.zeros((basis_size, basis_size))
        w = _orthogonalize(start_vector(n), V[:, :0], kernel)
        w /= np.linalg.norm(w)
        m = 0
        applications = 0
        value, x, rnorm = np.inf, w, np.inf
        while applications < max_iter:
            Aw = op @ w
            applications += 1
            V[:, m] = w
            AV[:, m] = Aw
            col = V[:, : m + 1].T @ Aw
            H[: m + 1, m] = col
            H[m, : m + 1] = col
            m += 1
            theta, Y = np.linalg.eigh(H[:m, :m])
            y = Y[:, 0]
            x = V[:, :m] @ y
            r = AV[:, :m] @ y - theta[0] * x
            value, rnorm = float(theta[0]), float(np.linalg.norm(r))
            if rnorm <= tol:
                break
            if m >= basis_size:
                # thick restart on the lowest Ritz vectors, re-orthonormalised
                Vk = V[:, :m] @ Y[:, :keep]
                AVk = AV[:, :m] @ Y[:, :keep]
                Q, R = np.linalg.qr(Vk)
                signs = np.sign(np.diag(R))
                signs[signs == 0] = 1
                Rs = R * signs[:, None]
                m = keep
                V[:, :m] = Q * signs
                AV[:, :m] = np.linalg.solve(Rs.T, AVk.T).T
                Hk = V[:, :m].T @ AV[:, :m]
                H[:m, :m] = 0.5 * (Hk + Hk.T)
            w = _orthogonalize(r, V[:, :m], kernel)
            nw = np.linalg.norm(w)
            if nw < 1e-14:
                break
            w /= nw
        x = x / np.linalg.norm(x)
        rnorm = float(np.linalg.norm(op @ x - value * x))
    if rnorm > tol:
        raise NoConvergence(f"residual {rnorm:.3e} > {tol:.1e} after {applications} applications")
    return EigResult(value, x, rnorm, applications)


def _dense_deflated(op, kernel: np.ndarray, tol: float) -> EigResult:
    dense = op.toarray() if sp.issparse(op) else np.asarray(op, dtype=float)
    P = np.eye(len(kernel)) - np.outer(kernel, kernel)
    vals, vecs = np.linalg.eigh(P @ dense @ P)
    off_kernel = np.abs(vecs.T @ kernel) < 0.5
    j = int(np.flatnonzero(off_kernel)[0])
    x = vecs[:, j]
    r = float(np.linalg.norm(dense @ x - vals[j] * x))
    if r > tol:
        raise NoConvergence(f"dense residual {r:.3e}")
    return EigResult(float(vals[j]), x, r, 1)


def normalized_laplacian(adj: sp.csr_matrix) -> tuple[sp.csr_matrix, np.ndarray]:
    """``I - D^{-1/2} A D^{-1/2}`` and its kernel vector ``D^{1/2} 1``."""
    deg = np.asarray(adj.sum(axis=1)).ravel()
    inv_sqrt = 1.0 / np.sqrt(deg)
    S = sp.diags(inv_sqrt) @ adj @ sp.diags(inv_sqrt)
    L = sp.identity(adj.shape[0], format="csr") - S
    return sp.csr_matrix(L), np.sqrt(deg)


def combinatorial_laplacian(adj: sp.csr_matrix) -> tuple[sp.csr_matrix, np.ndarray]:
    """``D - A`` with loops removed, and its kernel vector ``1``."""
    off = adj - sp.diags(adj.diagonal())
    deg = np.asarray(off.sum(axis=1)).ravel()
    return sp.csr_matrix(sp.diags(deg) - off), np.ones(adj.shape[0])
