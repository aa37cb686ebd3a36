"""Euler numbers, Springer numbers, and their t,q-generalizations.

E_n counts the alternating permutations sigma_1 > sigma_2 < sigma_3 > ... of
[n]; S_n counts the snakes (alternating signed permutations) with a positive
first entry.  The polynomial generalizations are built from the q-derivative
D and the multiplication operator U:

    Q_n(t,q) = (D + UDU)^n 1        R_n(t,q) = (D + DUU)^n 1

Both are also obtainable as coefficients of Jacobi-type continued fractions;
`q_fraction_schedule` and `r_fraction_schedule` provide the schedules so the
two routes can be checked against each other.

All results are memoized; everything here is pure and safe for concurrent
readers.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from snakelab.algebra import (
    ONE,
    Q,
    T,
    CoefficientSchedule,
    Poly,
    jfraction_series,
    q_derivative,
    q_int,
    sfraction_series,
    u_multiply,
)

_DIRECT_COUNT_LIMIT = 9


def _is_alternating(perm: tuple[int, ...]) -> bool:
    # sigma_1 > sigma_2 < sigma_3 > ...
    for i in range(len(perm) - 1):
        if i % 2 == 0:
            if perm[i] < perm[i + 1]:
                return False
        elif perm[i] > perm[i + 1]:
            return False
    return True


def count_alternating(n: int) -> int:
    """Brute-force count of alternating permutations of [n]."""
    return sum(1 for p in itertools.permutations(range(1, n + 1)) if _is_alternating(p))


def seidel_numbers(n_max: int) -> list[int]:
    """E_0..E_n_max by the boustrophedon recurrence
    T(m,k) = T(m,k-1) + T(m-1,m-k) with T(0,0) = 1, T(m,0) = 0."""
    out = [1]
    row = [1]
    for m in range(1, n_max + 1):
        new = [0]
        for k in range(1, m + 1):
            new.append(new[k - 1] + row[m - k])
        row = new
        out.append(row[-1])
    return out


@lru_cache(maxsize=None)
def euler_number(n: int) -> int:
    """The zigzag number E_n (1, 1, 1, 2, 5, 16, 61, ...)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= _DIRECT_COUNT_LIMIT:
        return count_alternating(n)
    return seidel_numbers(n)[n]


@lru_cache(maxsize=None)
def springer_number(n: int) -> int:
    """S_n: the number of snakes of size n with positive first entry."""
    from snakelab import snakes  # local import; snakes needs no symbol from here

    return sum(1 for _ in snakes.generate_snakes(n, "S0"))


@lru_cache(maxsize=None)
def q_euler(n: int) -> Poly:
    """The q-analog E_n(q): coefficient n//2 of the Stieltjes fraction with
    fall weights [h]^2 (n even) or [h][h+1] (n odd)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    m = n // 2
    if n % 2 == 0:
        return sfraction_series(lambda h: q_int(h) ** 2, m)[m]
    return sfraction_series(lambda h: q_int(h) * q_int(h + 1), m)[m]


@lru_cache(maxsize=None)
def Q_poly(n: int) -> Poly:
    """Q_n(t,q) = (D + UDU)^n applied to 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ONE
    f = Q_poly(n - 1)
    return q_derivative(f) + u_multiply(q_derivative(u_multiply(f)))


@lru_cache(maxsize=None)
def R_poly(n: int) -> Poly:
    """R_n(t,q) = (D + DUU)^n applied to 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ONE
    f = R_poly(n - 1)
    return q_derivative(f) + q_derivative(u_multiply(u_multiply(f)))


def q_fraction_schedule() -> CoefficientSchedule:
    """J-fraction schedule whose series coefficients are the Q_n:
    mu_h = t q^h ([h] + [h+1]),  lam_h = (1 + t^2 q^(2h-1)) [h]^2."""
    return CoefficientSchedule(
        mu=lambda h: T * Poly.monomial(eq=h) * (q_int(h) + q_int(h + 1)),
        lam=lambda h: (ONE + T ** 2 * Poly.monomial(eq=2 * h - 1)) * q_int(h) ** 2,
    )


def r_fraction_schedule() -> CoefficientSchedule:
    """J-fraction schedule whose series coefficients are the R_n:
    mu_h = t q^h (1+q) [h+1],  lam_h = (1 + t^2 q^(2h)) [h] [h+1]."""
    return CoefficientSchedule(
        mu=lambda h: T * Poly.monomial(eq=h) * (ONE + Q) * q_int(h + 1),
        lam=lambda h: (ONE + T ** 2 * Poly.monomial(eq=2 * h))
        * q_int(h)
        * q_int(h + 1),
    )


def qr_series(kind: str, n_max: int) -> list[Poly]:
    """Q_0..Q_n or R_0..R_n via the continued-fraction route."""
    if kind == "Q":
        return jfraction_series(q_fraction_schedule(), n_max)
    if kind == "R":
        return jfraction_series(r_fraction_schedule(), n_max)
    raise ValueError(f"kind must be 'Q' or 'R', got {kind!r}")
