"""Dense symmetric linear algebra over graphs.

Normalized and combinatorial Laplacians, an eigensolver with a residual
contract, resistance distances through the Laplacian pseudoinverse, and two
spanning-tree counters: an exact integer matrix-tree determinant and the
spectral product formula evaluated in log-space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph

DEFAULT_EIG_TOL = 1e-10

# Pseudoinverse kernel cutoff, relative to the largest eigenvalue.
_KERNEL_RTOL = 1e-9


class NumericError(RuntimeError):
    """Base class for numerical failures in this module."""


class EigensolverError(NumericError):
    """Eigendecomposition failed or did not reach the requested residual."""


class PseudoinverseError(NumericError):
    """Laplacian pseudoinverse found an unexpected kernel."""


@dataclass(frozen=True, eq=False)
class SymmetricMatrix:
    """Dense real symmetric matrix with read-only float64 storage."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("matrix must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix must be exactly symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])


@dataclass(frozen=True)
class EigenResult:
    """Ascending eigenvalues plus the achieved residual max |Av - lambda v|."""

    eigenvalues: tuple[float, ...]
    residual: float


def adjacency_matrix(g: Graph) -> SymmetricMatrix:
    a = np.zeros((g.num_vertices, g.num_vertices))
    if g.edges:
        us, vs = np.array(g.edges).T
        a[us, vs] = 1.0
        a[vs, us] = 1.0
    return SymmetricMatrix(a)


def combinatorial_laplacian(g: Graph) -> SymmetricMatrix:
    """Degree matrix minus adjacency matrix; row sums are exactly zero."""
    m = -adjacency_matrix(g).entries.copy()
    np.fill_diagonal(m, np.array(g.degrees, dtype=float))
    return SymmetricMatrix(m)


def normalized_laplacian(g: Graph) -> SymmetricMatrix:
    """Identity minus the degree-normalized adjacency: 1 on the diagonal,
    -1/sqrt(d_i d_j) on edges, 0 elsewhere."""
    inv_sqrt = 1.0 / np.sqrt(np.array(g.degrees, dtype=float))
    m = np.zeros((g.num_vertices, g.num_vertices))
    us, vs = np.array(g.edges).T
    w = -inv_sqrt[us] * inv_sqrt[vs]
    m[us, vs] = w
    m[vs, us] = w
    np.fill_diagonal(m, 1.0)
    return SymmetricMatrix(m)


def eigenvalues_sym(m: SymmetricMatrix, tol: float = DEFAULT_EIG_TOL) -> EigenResult:
    """All eigenvalues of a symmetric matrix, ascending, with residual <= tol.

    Deterministic for fixed input.  Raises EigensolverError when the
    decomposition fails to converge or the residual exceeds the tolerance.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a = m.entries
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"eigendecomposition did not converge: {exc}") from exc
    residual = float(np.abs(a @ v - v * w).max())
    if residual > tol:
        raise EigensolverError(
            f"achieved residual {residual:.3e} exceeds tolerance {tol:.1e}"
        )
    return EigenResult(tuple(float(x) for x in w), residual)


def resistance_distances(g: Graph) -> np.ndarray:
    """Pairwise effective resistances with unit resistors on every edge.

    Computed from the Moore-Penrose pseudoinverse of the combinatorial
    Laplacian: r_ij = L+_ii + L+_jj - 2 L+_ij.  Only eigenvalues above
    a relative cutoff are inverted; the kernel must be exactly rank one.
    """
    lap = combinatorial_laplacian(g).entries
    try:
        w, v = np.linalg.eigh(lap)
    except np.linalg.LinAlgError as exc:
        raise PseudoinverseError(f"eigendecomposition failed: {exc}") from exc
    cutoff = _KERNEL_RTOL * float(w[-1])
    kernel = int(np.count_nonzero(w <= cutoff))
    if kernel != 1:
        raise PseudoinverseError(
            f"expected a rank-1 kernel, found {kernel} eigenvalues below {cutoff:.3e}"
        )
    inv = np.zeros_like(w)
    np.divide(1.0, w, out=inv, where=w > cutoff)
    pinv = (v * inv) @ v.T
    diag = np.diag(pinv).copy()
    r = diag[:, None] + diag[None, :] - pinv - pinv.T
    np.fill_diagonal(r, 0.0)
    return r


def kf_star_direct(g: Graph) -> float:
    """Multiplicative degree-Kirchhoff index from first principles:
    sum over unordered pairs of d_i * d_j * r_ij."""
    r = resistance_distances(g)
    d = np.array(g.degrees, dtype=float)
    return 0.5 * float(d @ r @ d)


def spanning_trees_matrix_tree(g: Graph) -> int:
    """Exact spanning-tree count: integer determinant of the combinatorial
    Laplacian with the last row and column deleted (fraction-free elimination)."""
    n = g.num_vertices
    size = n - 1
    m = [[0] * size for _ in range(size)]
    for i in range(size):
        m[i][i] = g.degrees[i]
    for u, v in g.edges:
        if v < size:  # u < v, so u < size as well
            m[u][v] -= 1
            m[v][u] -= 1
    return _bareiss_determinant(m)


def _bareiss_determinant(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact for integer matrices."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                # Exact division: every intermediate is a minor of the input.
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def spanning_trees_chung(
    eigs: EigenResult, degrees: Sequence[int], tol: float = DEFAULT_EIG_TOL
) -> float:
    """Spanning-tree count from the normalized-Laplacian spectrum:
    prod(d_i) * prod(nonzero eigenvalues) / sum(d_i), evaluated in log-space.

    The caller compares against an exact counter after rounding to the
    nearest integer.
    """
    lam = eigs.eigenvalues
    if len(lam) != len(degrees):
        raise ValueError("eigenvalue count must match degree count")
    bad = [x for x in lam[1:] if x <= tol]
    if bad:
        raise ValueError(
            f"spectrum has {len(bad)} nonpositive values beyond tolerance {tol:.1e}"
        )
    log_value = (
        math.fsum(math.log(d) for d in degrees)
        + math.fsum(math.log(x) for x in lam[1:])
        - math.log(sum(degrees))
    )
    return math.exp(log_value)
