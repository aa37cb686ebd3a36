"""Signed permutation families and their statistics.

A signed permutation of [n] is a bijection sigma of {-n..-1, 1..n} with
sigma(-i) = -sigma(i); it is stored as its window (sigma_1, ..., sigma_n),
a tuple of nonzero integers whose absolute values are a permutation of [n].

Families:
  A   all permutations of [n] (all-positive windows)
  A*  derangements of [n]
  B   all signed permutations
  B*  signed permutations without fixed points (sigma_i = i)
  D   signed permutations with an even number of negative entries
  D*  fixed-point-free members of D
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from snakelab.algebra import Key, Poly

FAMILIES = ("A", "A*", "B", "D", "B*", "D*")

SCHEMES = (
    "EULER_EXC",      # (-1)^exc
    "JV_WEX_CRO",     # (-1)^wex q^cro
    "JV_DERANGE",     # (-1/q)^wex q^cro
    "FWEX_SIGN",      # (-1)^floor(fwex/2) t^neg q^cro_b
    "FWEX_SIGN_Q",    # (-1/q)^floor(fwex/2) t^neg q^cro_b
    "FULL_YTQ",       # y^fwex t^neg q^cro_b
)

_TYPE_A_SCHEMES = {"EULER_EXC", "JV_WEX_CRO", "JV_DERANGE"}
_TYPE_B_SCHEMES = {"FWEX_SIGN", "FWEX_SIGN_Q", "FULL_YTQ"}


@dataclass(frozen=True)
class StatRecord:
    """Statistics of one signed permutation."""

    wex: int          # positions with sigma_i >= i
    exc: int          # positions with sigma_i > i
    neg: int          # negative window entries
    fwex: int         # 2*wex + neg
    cro_b: int        # crossings of the signed permutation
    des_b: int        # descents of (0, sigma_1, ..., sigma_n)
    fixed_count: int  # positions with sigma_i = i


def validate_window(window: tuple[int, ...]) -> None:
    n = len(window)
    if sorted(abs(v) for v in window) != list(range(1, n + 1)) or 0 in window:
        raise ValueError(f"not a signed permutation window: {window}")


def window_text(window: tuple[int, ...]) -> str:
    return "(" + ",".join(str(v) for v in window) + ")"


def generate(n: int, family: str) -> Iterator[tuple[int, ...]]:
    """All members of the family, each exactly once.

    Order is lexicographic on (absolute-value permutation, sign vector),
    with + preceding - in the sign vector; deterministic for golden tests.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    signed = family in ("B", "D", "B*", "D*")
    derangements = family.endswith("*")
    even_neg = family.startswith("D")
    for absperm in itertools.permutations(range(1, n + 1)):
        sign_vectors = (
            itertools.product((1, -1), repeat=n) if signed else ((1,) * n,)
        )
        for signs in sign_vectors:
            window = tuple(s * a for s, a in zip(signs, absperm))
            if even_neg and sum(1 for v in window if v < 0) % 2:
                continue
            if derangements and any(v == i for i, v in enumerate(window, start=1)):
                continue
            yield window


def cro_b(window: tuple[int, ...]) -> int:
    """Number of crossings: ordered pairs (i, j), i, j >= 1, with
    i < j <= sigma_i < sigma_j, or -i < j <= -sigma_i < sigma_j, or
    i > j > sigma_i > sigma_j.  A pair can satisfy at most one condition
    (asserted, not assumed)."""
    n = len(window)
    total = 0
    for i in range(1, n + 1):
        si = window[i - 1]
        for j in range(1, n + 1):
            sj = window[j - 1]
            hits = (
                (i < j <= si < sj)
                + (-i < j <= -si < sj)
                + (i > j > si > sj)
            )
            assert hits <= 1, (window, i, j)
            total += hits
    return total


def stats(window: tuple[int, ...]) -> StatRecord:
    wex = sum(1 for i, v in enumerate(window, start=1) if v >= i)
    exc = sum(1 for i, v in enumerate(window, start=1) if v > i)
    neg = sum(1 for v in window if v < 0)
    fixed = sum(1 for i, v in enumerate(window, start=1) if v == i)
    padded = (0, *window)
    des = sum(1 for i in range(len(window)) if padded[i] > padded[i + 1])
    return StatRecord(
        wex=wex,
        exc=exc,
        neg=neg,
        fwex=2 * wex + neg,
        cro_b=cro_b(window),
        des_b=des,
        fixed_count=fixed,
    )


def cro_type_a(window: tuple[int, ...]) -> int:
    """Crossings of an ordinary permutation: pairs (i, j) with
    i < j <= sigma_i < sigma_j or sigma_i < sigma_j < i < j."""
    if any(v < 0 for v in window):
        raise ValueError("type A crossings need an all-positive window")
    n = len(window)
    total = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            si, sj = window[i - 1], window[j - 1]
            if i < j <= si < sj or si < sj < i < j:
                total += 1
    return total


def signed_enumerator(n: int, family: str, scheme: str) -> Poly:
    """Sum of the scheme's signed monomial over the family."""
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    type_a_family = family in ("A", "A*")
    if scheme in _TYPE_A_SCHEMES and not type_a_family:
        raise ValueError(f"scheme {scheme} needs an all-positive family, got {family}")
    if scheme in _TYPE_B_SCHEMES and type_a_family:
        raise ValueError(f"scheme {scheme} needs a signed family, got {family}")
    acc: dict[Key, int] = {}

    def add(key: Key, c: int) -> None:
        acc[key] = acc.get(key, 0) + c

    for window in generate(n, family):
        if scheme == "EULER_EXC":
            exc = sum(1 for i, v in enumerate(window, start=1) if v > i)
            add((0, 0, 0), -1 if exc % 2 else 1)
            continue
        if scheme in ("JV_WEX_CRO", "JV_DERANGE"):
            wex = sum(1 for i, v in enumerate(window, start=1) if v >= i)
            cro = cro_type_a(window)
            sign = -1 if wex % 2 else 1
            shift = -wex if scheme == "JV_DERANGE" else 0
            add((0, 0, cro + shift), sign)
            continue
        s = stats(window)
        half = s.fwex // 2
        if scheme == "FWEX_SIGN":
            add((0, s.neg, s.cro_b), -1 if half % 2 else 1)
        elif scheme == "FWEX_SIGN_Q":
            add((0, s.neg, s.cro_b - half), -1 if half % 2 else 1)
        else:  # FULL_YTQ
            add((s.fwex, s.neg, s.cro_b), 1)
    return Poly(acc)


def _decreasing_runs(window: tuple[int, ...]) -> list[int]:
    """Lengths of the maximal decreasing consecutive factors."""
    if not window:
        return []
    runs = [1]
    for a, b in zip(window, window[1:]):
        if a > b:
            runs[-1] += 1
        else:
            runs.append(1)
    return runs


def gamma_coeffs(n: int) -> list[int]:
    """gamma[i] = number of permutations of [n] with i descents and no double
    descents, reading the word padded with 0 at both ends; these expand the
    excedance polynomial in the basis x^i (1+x)^(n-1-2i)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = [0] * ((n - 1) // 2 + 1)
    for perm in itertools.permutations(range(1, n + 1)):
        padded = (0, *perm, 0)
        if any(padded[i - 1] > padded[i] > padded[i + 1] for i in range(1, n + 1)):
            continue
        des = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
        out[des] += 1
    return out


def xi_coeffs(n: int) -> list[int]:
    """xi[i] = number of permutations of [n] with i decreasing runs, none of
    size one; these expand the derangement excedance polynomial in the basis
    x^i (1+x)^(n-2i)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = [0] * (n // 2 + 1)
    if n == 0:
        out[0] = 1
        return out
    for perm in itertools.permutations(range(1, n + 1)):
        runs = _decreasing_runs(perm)
        if min(runs) >= 2:
            out[len(runs)] += 1
    return out
