"""Graph matrices, spectra, resistance distances and Kirchhoff indices.

Three independent Kirchhoff-index routes live here:

* :func:`kirchhoff_via_spectrum` -- ``n * sum(1/mu_i)`` over the non-zero
  Laplacian eigenvalues (floating point),
* :func:`kirchhoff_via_coefficients` -- ``-n * a_{n-2} / a_{n-1}`` from the
  exact Laplacian characteristic polynomial,
* :func:`kirchhoff_via_resistance` -- the sum of exact effective resistances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import Disconnected, TooSmall
from .graph import Graph, degree_sequence, is_connected
from .linalg import RationalMatrix, char_poly, inverse_exact
from .polynomial import Polynomial

__all__ = [
    "Spectrum",
    "adjacency_matrix",
    "degree_matrix",
    "laplacian_matrix",
    "adjacency_char_poly",
    "laplacian_char_poly",
    "laplacian_spectrum_numeric",
    "adjacency_spectrum_numeric",
    "kirchhoff_via_spectrum",
    "kirchhoff_via_coefficients",
    "resistance_distance_matrix",
    "kirchhoff_via_resistance",
    "zhou_trinajstic_lower_bound",
]


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues plus how many of them were classified as zero."""

    values: tuple[float, ...]
    zero_count: int

    def nonzero(self) -> tuple[float, ...]:
        # Laplacian spectra are non-negative, so the zeros are a prefix
        return self.values[self.zero_count:]


def adjacency_matrix(g: Graph) -> RationalMatrix:
    data = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        data[u - 1][v - 1] = data[v - 1][u - 1] = 1
    return RationalMatrix(data, cols=g.n)


def degree_matrix(g: Graph) -> RationalMatrix:
    return RationalMatrix.diagonal(degree_sequence(g))


def laplacian_matrix(g: Graph) -> RationalMatrix:
    """``L = D - A``."""
    deg = degree_sequence(g)
    data = [[0] * g.n for _ in range(g.n)]
    for i, d in enumerate(deg):
        data[i][i] = d
    for u, v in g.edges:
        data[u - 1][v - 1] = data[v - 1][u - 1] = -1
    return RationalMatrix(data, cols=g.n)


def adjacency_char_poly(g: Graph, method: str = "hessenberg") -> Polynomial:
    return char_poly(adjacency_matrix(g), method, symbol="λ")


def laplacian_char_poly(g: Graph, method: str = "hessenberg") -> Polynomial:
    return char_poly(laplacian_matrix(g), method, symbol="μ")


def _float_matrix(mat: RationalMatrix) -> np.ndarray:
    return np.array([[float(x) for x in mat.row(i)] for i in range(mat.rows)], dtype=float).reshape(mat.shape)


def laplacian_spectrum_numeric(g: Graph, tol: Optional[float] = None) -> Spectrum:
    """Laplacian eigenvalues via a symmetric eigensolver.

    Eigenvalues with ``|mu| <= tol`` are counted as zero; ``tol`` defaults to
    ``1e-9 * n``.
    """
    if tol is None:
        tol = 1e-9 * max(g.n, 1)
    vals = np.linalg.eigvalsh(_float_matrix(laplacian_matrix(g))) if g.n else np.array([])
    vals = np.sort(vals)
    zero = int(np.sum(np.abs(vals) <= tol))
    return Spectrum(tuple(float(v) for v in vals), zero)


def adjacency_spectrum_numeric(g: Graph) -> tuple[float, ...]:
    """Adjacency eigenvalues in descending order."""
    vals = np.linalg.eigvalsh(_float_matrix(adjacency_matrix(g))) if g.n else np.array([])
    return tuple(float(v) for v in np.sort(vals)[::-1])


def _require_connected(g: Graph, min_n: int = 2):
    if g.n < min_n:
        raise TooSmall(f"need at least {min_n} vertices, got {g.n}")
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def kirchhoff_via_spectrum(g: Graph, tol: Optional[float] = None) -> float:
    _require_connected(g)
    spec = laplacian_spectrum_numeric(g, tol)
    return g.n * float(sum(1.0 / mu for mu in spec.values[1:]))


def kirchhoff_via_coefficients(g: Graph, method: str = "hessenberg") -> Fraction:
    """Exact ``Kf = -n * a_{n-2} / a_{n-1}``.

    With ``phi(L; mu) = mu^n + a_1 mu^{n-1} + ... + a_{n-1} mu``, ``a_{n-1}`` is
    the coefficient of ``mu`` and ``a_{n-2}`` that of ``mu^2``.
    """
    _require_connected(g)
    phi = laplacian_char_poly(g, method)
    a_last = phi.coeff(1)
    a_prev = Fraction(1) if g.n == 2 else phi.coeff(2)
    if a_last == 0:
        raise Disconnected("coefficient of mu vanishes")
    return -g.n * a_prev / a_last


def resistance_distance_matrix(g: Graph) -> RationalMatrix:
    """Exact effective resistances ``r_ij = G_ii + G_jj - 2 G_ij`` with ``G = (L + J/n)^-1``."""
    _require_connected(g, min_n=1)
    n = g.n
    shifted = laplacian_matrix(g) + RationalMatrix.ones(n).scale(Fraction(1, n))
    ginv = inverse_exact(shifted)
    diag = [ginv[i, i] for i in range(n)]
    return RationalMatrix(
        [[diag[i] + diag[j] - 2 * ginv[i, j] if i != j else 0 for j in range(n)] for i in range(n)],
        cols=n,
    )


def kirchhoff_via_resistance(g: Graph) -> Fraction:
    """Sum of ``r_ij`` over unordered vertex pairs."""
    r = resistance_distance_matrix(g)
    return sum((r[i, j] for i in range(g.n) for j in range(i + 1, g.n)), Fraction(0))


def zhou_trinajstic_lower_bound(g: Graph) -> Fraction:
    """``-1 + (n - 1) * sum(1/d_i)``, a lower bound on Kf for connected graphs."""
    _require_connected(g)
    return -1 + (g.n - 1) * sum((Fraction(1, d) for d in degree_sequence(g)), Fraction(0))
