"""Exact values of lambda(n, k), the number of n x n binary matrices with k
ones in every row and column, for k = 1, 2, 3.

Every route works on Python integers or :class:`fractions.Fraction`; nothing
touches floating point. The four k = 2 routes never call each other, so
comparing them is a genuine cross-check.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial as _factorial
from typing import Iterator

LAMBDA2_ROUTES = ("partition", "anand", "good-crook", "pi")


def _check_n(n: int, low: int = 1) -> None:
    if not isinstance(n, int) or n < low:
        raise ValueError(f"n must be an integer >= {low}, got {n!r}")


def factorial(n: int) -> int:
    _check_n(n, 0)
    return _factorial(n)


def binomial(n: int, k: int) -> int:
    _check_n(n, 0)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return comb(n, k)


def lambda_n_1(n: int) -> int:
    """Permutation matrices: ``n!``."""
    _check_n(n)
    return _factorial(n)


def _weight_solutions(n: int) -> Iterator[dict[int, int]]:
    """Nonnegative solutions of ``2 x_2 + 3 x_3 + ... + n x_n = n``.

    Only the nonzero ``x_r`` appear in each yielded dict.
    """

    def descend(r, remaining):
        if r < 2:
            if remaining == 0:
                yield {}
            return
        for x in range(remaining // r, -1, -1):
            for rest in descend(r - 1, remaining - r * x):
                yield {r: x, **rest} if x else rest

    yield from descend(n, n)


@lru_cache(maxsize=None)
def lambda_n_2_partition_sum(n: int) -> int:
    """Sum over ``2 x_2 + 3 x_3 + ... + n x_n = n`` of
    ``(n!)^2 / prod_r x_r! (2r)^x_r``."""
    _check_n(n)
    top = _factorial(n) ** 2
    total = 0
    for sol in _weight_solutions(n):
        den = 1
        for r, x in sol.items():
            den *= _factorial(x) * (2 * r) ** x
        q, rem = divmod(top, den)
        if rem:
            raise ArithmeticError(f"non-integral summand {top}/{den} at n={n}")
        total += q
    return total


@lru_cache(maxsize=None)
def lambda_n_2_anand(n: int) -> int:
    """Anand-Dumir-Gupta recursion, seeded with 0, 1, 6."""
    _check_n(n)
    vals = [None, 0, 1, 6]
    for m in range(4, n + 1):
        twice = m * (m - 1) ** 2 * ((2 * m - 3) * vals[m - 2] + (m - 2) ** 2 * vals[m - 3])
        vals.append(twice // 2)
    return vals[n]


@lru_cache(maxsize=None)
def lambda_n_2_good_crook(n: int) -> int:
    """Good-Crook recursion, seeded with 0, 1."""
    _check_n(n)
    vals = [None, 0, 1]
    for m in range(3, n + 1):
        # (m-1)^2 m is always even
        vals.append((m - 1) * m * vals[m - 1] + (m - 1) ** 2 * m // 2 * vals[m - 2])
    return vals[n]


@lru_cache(maxsize=None)
def _lambda2_pi_tables(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lam = [0, 0, 1]  # index 0 unused
    pi = [0, 0, 0, 0, 9]
    for m in range(2, n):
        if m >= 4:
            # m^2 (m-1)^2 is always divisible by 4
            pi.append(
                m**2 * (m - 1) ** 2 // 4
                * (8 * (m - 2) * (m - 3) * lam[m - 2] + (m - 2) ** 2 * lam[m - 3] - 4 * pi[m - 1])
            )
        lam.append(m * (2 * m - 1) * lam[m] + m**2 * lam[m - 1] - pi[m + 1])
    return tuple(lam), tuple(pi)


def pi_value(n: int) -> int:
    """Auxiliary sequence of the third lambda(n, 2) recursion.

    Seeds ``pi(1) = pi(2) = pi(3) = 0`` and ``pi(4) = 9``.
    """
    _check_n(n)
    if n <= 4:
        return (0, 0, 0, 0, 9)[n]
    return _lambda2_pi_tables(n)[1][n]


def lambda_n_2_pi(n: int) -> int:
    """lambda(n, 2) via the coupled lambda / pi recursion."""
    _check_n(n)
    if n <= 2:
        return (0, 0, 1)[n]
    return _lambda2_pi_tables(n)[0][n]


def lambda_n_3_terms(n: int) -> Iterator[Fraction]:
    """Signed summands of the explicit lambda(n, 3) sum, one per
    ``alpha + beta + gamma = n``."""
    _check_n(n)
    for gamma in range(n + 1):
        for beta in range(n - gamma + 1):
            alpha = n - beta - gamma
            num = _factorial(beta + 3 * gamma) * 2**alpha * 3**beta
            den = _factorial(alpha) * _factorial(beta) * _factorial(gamma) ** 2 * 6**gamma
            yield Fraction(-num if beta % 2 else num, den)


@lru_cache(maxsize=None)
def lambda_n_3(n: int) -> int:
    """lambda(n, 3) from the explicit alternating sum."""
    _check_n(n)
    value = Fraction(_factorial(n) ** 2, 6**n) * sum(lambda_n_3_terms(n), Fraction(0))
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"lambda({n}, 3) evaluated to {value}")
    return int(value)


_ROUTES = {
    (1, "explicit"): lambda_n_1,
    (2, "partition"): lambda_n_2_partition_sum,
    (2, "anand"): lambda_n_2_anand,
    (2, "good-crook"): lambda_n_2_good_crook,
    (2, "pi"): lambda_n_2_pi,
    (3, "explicit"): lambda_n_3,
}


class RouteDisagreement(ArithmeticError):
    def __init__(self, n: int, k: int, values: dict[str, int]):
        super().__init__(f"lambda({n}, {k}) routes disagree: {values}")
        self.values = values


def routes_for(k: int) -> list[str]:
    return [m for (kk, m) in _ROUTES if kk == k]


def lambda_value(n: int, k: int, method: str = "auto") -> int:
    """lambda(n, k) for k in {1, 2, 3}.

    ``method="auto"`` evaluates every route available for ``k`` and raises
    :class:`RouteDisagreement` unless they all agree.

    Raises:
        ValueError: for k outside {1, 2, 3} (no formula is known) or a method
            that does not apply to ``k``.
    """
    _check_n(n)
    if k not in (1, 2, 3):
        raise ValueError(f"no known formula for k = {k}")
    if method == "auto":
        values = {m: _ROUTES[k, m](n) for m in routes_for(k)}
        if len(set(values.values())) != 1:
            raise RouteDisagreement(n, k, values)
        return next(iter(values.values()))
    if (k, method) not in _ROUTES:
        raise ValueError(f"method {method!r} does not apply to k = {k}; use one of {routes_for(k)}")
    return _ROUTES[k, method](n)
