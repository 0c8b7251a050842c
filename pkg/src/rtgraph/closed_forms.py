"""Closed forms for RT(G) of a connected r-regular graph G.

Laplacian polynomial of RT(G) in two shapes (through the adjacency or the
Laplacian polynomial of G), the Kirchhoff index of RT(G) in terms of
``(n, r, Kf(G))``, its lower bound in terms of ``(n, r)``, and the specialised
formulas for complete graphs, cycles and balanced complete bipartite graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import Disconnected, ForbiddenEvaluationPoint, InvalidParams, NotRegular
from .graph import Graph, is_connected, is_regular
from .polynomial import Polynomial, poly_divide_exact, poly_eval, to_fraction
from .spectra import adjacency_char_poly, kirchhoff_via_coefficients, laplacian_char_poly

__all__ = [
    "RegularGraphParams",
    "substitution_laplacian",
    "substitution_adjacency",
    "rt_charpoly_closed_form",
    "rt_charpoly_eval_at",
    "kf_rt_formula",
    "kf_rt_lower_bound",
    "kf_rt_special",
]

FORMS = ("laplacian", "adjacency")


@dataclass(frozen=True)
class RegularGraphParams:
    n: int
    r: int
    m: int
    kf: Optional[Fraction] = None

    @classmethod
    def from_graph(cls, g: Graph, with_kf: bool = False) -> RegularGraphParams:
        r = is_regular(g)
        if r is None or r < 1:
            raise NotRegular(f"{g} is not r-regular with r >= 1")
        kf = kirchhoff_via_coefficients(g) if with_kf else None
        return cls(g.n, r, g.m, kf)


def _regular_connected(g: Graph) -> RegularGraphParams:
    params = RegularGraphParams.from_graph(g)
    if not is_connected(g):
        raise Disconnected(f"{g} is not connected")
    return params


def _mu() -> Polynomial:
    return Polynomial.x("μ")


def _lin(c) -> Polynomial:
    return Polynomial.linear(c, "μ")


def substitution_laplacian(r: int) -> tuple[Polynomial, Polynomial]:
    """Numerator and denominator of the argument fed to phi_L(G; .).

    The argument is ``(mu-2)^2/(mu-3) - r mu/(mu-3) - 2(mu-2)/((mu-1)(mu-3))``;
    over the common denominator ``(mu-1)(mu-3)`` the numerator simplifies to
    ``mu^3 - (r+5) mu^2 + (r+6) mu``.
    """
    mu = _mu()
    num = _lin(2) ** 2 * _lin(1) - r * mu * _lin(1) - 2 * _lin(2)
    return num, _lin(1) * _lin(3)


def substitution_adjacency(r: int) -> tuple[Polynomial, Polynomial]:
    """Numerator/denominator of ``(mu-2)^2/(3-mu) + r(2mu-3)/(mu-3) + 2(mu-2)/((mu-1)(mu-3))``."""
    mu = _mu()
    num = -(_lin(2) ** 2) * _lin(1) + r * (2 * mu - 3) * _lin(1) + 2 * _lin(2)
    return num, _lin(1) * _lin(3)


def _homogenised(phi: Polynomial, num: Polynomial, den: Polynomial) -> Polynomial:
    """``den^deg(phi) * phi(num/den)`` expanded as ``sum_k c_k num^k den^(deg-k)``."""
    d = phi.degree
    num_pows = [Polynomial.constant(1)]
    den_pows = [Polynomial.constant(1)]
    for _ in range(d):
        num_pows.append(num_pows[-1] * num)
        den_pows.append(den_pows[-1] * den)
    out = Polynomial()
    for k, c in enumerate(phi.coeffs):
        if c:
            out = out + c * num_pows[k] * den_pows[d - k]
    return out


def rt_charpoly_closed_form(g: Graph, form: str = "laplacian") -> Polynomial:
    """Exact Laplacian polynomial of RT(g) assembled from a polynomial of ``g``.

    ``form="laplacian"``::

        (mu-1)^n (mu-2)^(m-n) (mu-3)^(2n) phi_L(G; x_L(mu))

    ``form="adjacency"``::

        (mu-1)^n (mu-2)^(m-n) (mu-3)^n (3-mu)^n phi_A(G; x_A(mu))

    The rational argument is cleared against ``(mu-1)^n (mu-3)^n``, leaving a
    polynomial times ``(mu-2)^(m-n)``.  When ``m < n`` the factor
    ``(mu-2)^(n-m)`` is divided out exactly; a remainder raises
    :class:`~rtgraph.errors.InexactDivision`.
    """
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    p = _regular_connected(g)
    n, m, r = p.n, p.m, p.r
    if form == "laplacian":
        phi = laplacian_char_poly(g)
        num, den = substitution_laplacian(r)
        sign = 1
    else:
        phi = adjacency_char_poly(g)
        num, den = substitution_adjacency(r)
        # (3-mu)^n = (-1)^n (mu-3)^n
        sign = (-1) ** n
    body = _homogenised(phi, num, den) * _lin(3) ** n * sign
    if m >= n:
        return body * _lin(2) ** (m - n)
    return poly_divide_exact(body, _lin(2) ** (n - m))


def rt_charpoly_eval_at(g: Graph, mu, form: str = "laplacian") -> Fraction:
    """Evaluate the closed-form right-hand side directly at a rational ``mu``.

    Each scalar factor is computed separately and the polynomial of ``g`` is
    evaluated at the substituted rational argument, so no polynomial in ``mu``
    is ever formed.  ``mu`` in {1, 3} (and 2 when ``m < n``) is rejected.
    """
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    mu = to_fraction(mu)
    p = _regular_connected(g)
    n, m, r = p.n, p.m, p.r
    if mu in (1, 3) or (mu == 2 and m < n):
        raise ForbiddenEvaluationPoint(f"mu = {mu} is a pole of the substitution")
    common = (mu - 1) ** n * (mu - 2) ** (m - n) * (mu - 3) ** n
    if form == "laplacian":
        arg = (mu - 2) ** 2 / (mu - 3) - r * mu / (mu - 3) - 2 * (mu - 2) / ((mu - 1) * (mu - 3))
        return common * (mu - 3) ** n * poly_eval(laplacian_char_poly(g), arg)
    arg = (mu - 2) ** 2 / (3 - mu) + r * (2 * mu - 3) / (mu - 3) + 2 * (mu - 2) / ((mu - 1) * (mu - 3))
    return common * (3 - mu) ** n * poly_eval(adjacency_char_poly(g), arg)


def _check_params(n: int, r: int):
    if n < 2 or r < 1 or (n * r) % 2 or r > n - 1:
        raise InvalidParams(f"no connected {r}-regular graph on {n} vertices (need n >= 2, 1 <= r < n, nr even)")


def _tail(n: int, r: int) -> Fraction:
    # the part of Kf(RT(G)) that does not depend on Kf(G)
    return (
        Fraction((r + 5) * n, 2)
        + Fraction((r + 6) * (5 * n - 4) * n, 6)
        + Fraction((r - 2) * (r + 6) * n * n, 8)
    )


def kf_rt_formula(n: int, r: int, kf_g) -> Fraction:
    """``Kf(RT(G)) = (r+6)^2/6 Kf(G) + (r+5)n/2 + (r+6)(5n-4)n/6 + (r-2)(r+6)n^2/8``.

    >>> kf_rt_formula(2, 1, 1)
    Fraction(74, 3)
    """
    _check_params(n, r)
    return Fraction((r + 6) ** 2, 6) * to_fraction(kf_g) + _tail(n, r)


def kf_rt_lower_bound(n: int, r: int) -> Fraction:
    """``(r+6)^2 (n^2-n-r) / (6r) + ...``; the formula with Kf(G) at its smallest possible value."""
    _check_params(n, r)
    return Fraction((r + 6) ** 2 * (n * n - n - r), 6 * r) + _tail(n, r)


def kf_rt_special(family: str, n: int) -> Fraction:
    """Specialised Kf(RT(G)) for ``complete`` (K_n), ``cycle`` (C_n) or
    ``complete_bipartite_nn`` (K_{n,n}), written out as in their own displays."""
    if family == "complete":
        if n < 2:
            raise InvalidParams("K_n needs n >= 2")
        r = n - 1
        return (
            Fraction((r + 6) ** 2 * (n - 1), 6)
            + Fraction((r + 5) * n, 2)
            + Fraction((r + 6) * (5 * n - 4) * n, 6)
            + Fraction((r - 2) * (r + 6) * n**2, 8)
        )
    if family == "cycle":
        if n < 3:
            raise InvalidParams("C_n needs n >= 3")
        r = 2
        return (
            Fraction((r + 6) ** 2 * (n**3 - n), 72)
            + Fraction((r + 5) * n, 2)
            + Fraction((r + 6) * (5 * n - 4) * n, 6)
            + Fraction((r - 2) * (r + 6) * n**2, 8)
        )
    if family == "complete_bipartite_nn":
        if n < 1:
            raise InvalidParams("K_{n,n} needs n >= 1")
        r = n
        return (
            Fraction((r + 6) ** 2 * (4 * n - 3), 6)
            + (r + 5) * n
            + Fraction((r + 6) * (10 * n - 4) * n, 3)
            + Fraction((r - 2) * (r + 6) * n**2, 2)
        )
    raise InvalidParams(f"unknown family {family!r}")
