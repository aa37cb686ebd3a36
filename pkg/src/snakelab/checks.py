"""Catalog of named identity checks.

Every identity the library implements is registered here once, under a
stable id, with a default size ceiling chosen so that running the whole
catalog stays within minutes on one core.  Exhaustive checks over signed
permutations or weighted paths default to n <= 5; purely polynomial checks
default to n <= 8.  A check function receives the ceiling and returns None
on success or a witness string describing the smallest counterexample.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Callable

from snakelab import bijections, eulerians, motzkin, permstats, snakes
from snakelab.algebra import (
    ONE,
    Q,
    T,
    Y,
    CoefficientSchedule,
    Poly,
    jfraction_series,
    q_derivative,
    q_int,
    u_multiply,
)


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    default_n: int
    fn: Callable[[int], str | None]
    scalable: bool = True
    min_n: int = 0
    note: str | None = None


@dataclass(frozen=True)
class CheckResult:
    id: str
    n_max: int
    status: str  # pass | fail | skipped
    witness: str | None = None
    note: str | None = None


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _poly_diff(n: int, lhs: Poly, rhs: Poly) -> str:
    return f"n={n}: lhs - rhs = {lhs - rhs}"


# -- classical signed countings ------------------------------------------------


def _check_eulercan1(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        got = permstats.signed_enumerator(n, "A", "EULER_EXC").as_int()
        want = 0 if n % 2 == 0 else _sign((n - 1) // 2) * eulerians.euler_number(n)
        if got != want:
            return f"n={n}: got {got}, want {want}"
    return None


def _check_eulercan2(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        got = permstats.signed_enumerator(n, "A*", "EULER_EXC").as_int()
        want = _sign(n // 2) * eulerians.euler_number(n) if n % 2 == 0 else 0
        if got != want:
            return f"n={n}: got {got}, want {want}"
    return None


def _check_jv1(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        lhs = permstats.signed_enumerator(n, "A", "JV_WEX_CRO")
        rhs = (
            Poly()
            if n % 2 == 0
            else _sign((n + 1) // 2) * eulerians.q_euler(n)
        )
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _check_jv2(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        lhs = permstats.signed_enumerator(n, "A*", "JV_DERANGE")
        if n % 2 == 0:
            half = n // 2
            rhs = Poly.monomial(_sign(half), 0, 0, -half) * eulerians.q_euler(n)
        else:
            rhs = Poly()
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _exc_distribution(n: int, family: str) -> Counter:
    out: Counter = Counter()
    for w in permstats.generate(n, family):
        out[sum(1 for i, v in enumerate(w, start=1) if v > i)] += 1
    return out


def _basis_expansion(coeffs: list[int], degree: int) -> Counter:
    out: Counter = Counter()
    for i, c in enumerate(coeffs):
        for k in range(degree - 2 * i + 1):
            out[i + k] += c * math.comb(degree - 2 * i, k)
    return +out


def _check_gamma_expansion(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        lhs = _exc_distribution(n, "A")
        rhs = _basis_expansion(permstats.gamma_coeffs(n), n - 1)
        if lhs != rhs:
            return f"n={n}: excedance distribution {dict(lhs)} != expansion {dict(rhs)}"
    return None


def _check_xi_expansion(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        lhs = _exc_distribution(n, "A*")
        rhs = _basis_expansion(permstats.xi_coeffs(n), n)
        if lhs != rhs:
            return f"n={n}: excedance distribution {dict(lhs)} != expansion {dict(rhs)}"
    return None


def _check_des_b_equidistribution(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        des = Counter()
        half = Counter()
        for w in permstats.generate(n, "B"):
            s = permstats.stats(w)
            des[s.des_b] += 1
            half[s.fwex // 2] += 1
        if des != half:
            return f"n={n}: des_b distribution {dict(des)} != floor(fwex/2) {dict(half)}"
    return None


# -- operator algebra and continued fractions ---------------------------------


def _check_commutation(n_max: int) -> str | None:
    for k in range(0, n_max + 1):
        p = T ** k
        got = q_derivative(u_multiply(p)) - Q * u_multiply(q_derivative(p))
        if got != p:
            return f"k={k}: (DU - qUD)(t^{k}) = {got}"
    return None


Q_LITERALS = {
    0: "1",
    1: "t",
    2: "1 + t^2 + t^2*q",
    3: "2*t + 2*t*q + t*q^2 + t^3 + 2*t^3*q + 2*t^3*q^2 + t^3*q^3",
}

R_LITERALS = {
    0: "1",
    1: "t + t*q",
    2: "1 + q + t^2 + 2*t^2*q + 2*t^2*q^2 + t^2*q^3",
    3: "2*t + 5*t*q + 5*t*q^2 + 3*t*q^3 + t*q^4"
    " + t^3 + 3*t^3*q + 5*t^3*q^2 + 6*t^3*q^3 + 5*t^3*q^4 + 3*t^3*q^5 + t^3*q^6",
}


def _golden_poly(kind: str, index: int) -> Callable[[int], str | None]:
    def fn(_: int) -> str | None:
        poly = eulerians.Q_poly(index) if kind == "Q" else eulerians.R_poly(index)
        literal = Q_LITERALS[index] if kind == "Q" else R_LITERALS[index]
        if str(poly) != literal:
            return f"{kind}_{index} = {poly} != {literal}"
        return None

    return fn


def _check_qr_jfraction(n_max: int) -> str | None:
    q_series = eulerians.qr_series("Q", n_max)
    r_series = eulerians.qr_series("R", n_max)
    for n in range(n_max + 1):
        if q_series[n] != eulerians.Q_poly(n):
            return _poly_diff(n, q_series[n], eulerians.Q_poly(n))
        if r_series[n] != eulerians.R_poly(n):
            return _poly_diff(n, r_series[n], eulerians.R_poly(n))
    return None


def _check_q_secant_at_t0(n_max: int) -> str | None:
    for n in range(0, n_max + 1, 2):
        lhs = eulerians.Q_poly(n).subst("t", 0)
        rhs = eulerians.q_euler(n)
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _check_r_odd_at_t0(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        at_zero = eulerians.R_poly(n).subst("t", 0)
        if n % 2 == 1:
            if at_zero != 0:
                return f"n={n}: R_{n}(0,q) = {at_zero}, expected 0"
            if at_zero == eulerians.q_euler(n):
                return f"n={n}: the odd-index identification unexpectedly holds"
        elif at_zero != eulerians.q_euler(n + 1):
            return _poly_diff(n, at_zero, eulerians.q_euler(n + 1))
    return None


def _check_q11_springer(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        got = eulerians.Q_poly(n)(t=1, q=1).as_int()
        want = eulerians.springer_number(n)
        if got != want:
            return f"n={n}: Q_{n}(1,1) = {got}, snake count = {want}"
    return None


def _check_r11_tangent(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        got = eulerians.R_poly(n)(t=1, q=1).as_int()
        want = 2 ** n * eulerians.euler_number(n + 1)
        if got != want:
            return f"n={n}: R_{n}(1,1) = {got}, want {want}"
    return None


# -- signed countings of types B and D -----------------------------------------


def _bracket(n: int) -> Poly:
    return Poly.constant(_sign((n + 1) // 2)) + _sign(n // 2) * T


def _check_fwex_b(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        lhs = permstats.signed_enumerator(n, "B", "FWEX_SIGN")
        rhs = _bracket(n) * eulerians.R_poly(n - 1)
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _check_fwex_d(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        lhs = permstats.signed_enumerator(n, "D", "FWEX_SIGN")
        if n % 2 == 0:
            rhs = _sign(n // 2) * T * eulerians.R_poly(n - 1)
        else:
            rhs = _sign((n + 1) // 2) * eulerians.R_poly(n - 1)
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _check_fwex_bstar(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        lhs = permstats.signed_enumerator(n, "B*", "FWEX_SIGN_Q")
        half = n // 2
        rhs = Poly.monomial(_sign(half), 0, 0, -half) * eulerians.Q_poly(n)
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _check_fwex_dstar(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        lhs = permstats.signed_enumerator(n, "D*", "FWEX_SIGN_Q")
        if n % 2 == 0:
            half = n // 2
            rhs = Poly.monomial(_sign(half), 0, 0, -half) * eulerians.Q_poly(n)
        else:
            rhs = Poly()
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _half_fwex_sum(n: int, family: str) -> int:
    total = 0
    for w in permstats.generate(n, family):
        wex = sum(1 for i, v in enumerate(w, start=1) if v >= i)
        neg = sum(1 for v in w if v < 0)
        total += _sign((2 * wex + neg) // 2)
    return total


def _check_eval_b(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        got = _half_fwex_sum(n, "B")
        want = _sign(n // 2) * 2 ** n * eulerians.euler_number(n) if n % 2 == 0 else 0
        if got != want:
            return f"n={n}: got {got}, want {want}"
    return None


def _check_eval_d(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        got = _half_fwex_sum(n, "D")
        want = _sign((n + 1) // 2) * 2 ** (n - 1) * eulerians.euler_number(n)
        if got != want:
            return f"n={n}: got {got}, want {want}"
    return None


def _check_eval_bstar(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        got = _half_fwex_sum(n, "B*")
        want = _sign(n // 2) * eulerians.springer_number(n)
        if got != want:
            return f"n={n}: got {got}, want {want}"
    return None


def _check_eval_dstar(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        got = _half_fwex_sum(n, "D*")
        want = _sign(n // 2) * eulerians.springer_number(n) if n % 2 == 0 else 0
        if got != want:
            return f"n={n}: got {got}, want {want}"
    return None


# -- weighted-path realizations -------------------------------------------------


def _check_rho_t(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        lhs = motzkin.rho("T", n)
        rhs = eulerians.R_poly(n)
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _check_rho_tstar(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        lhs = motzkin.rho("TSTAR", n)
        rhs = eulerians.Q_poly(n)
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _check_corteel(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        lhs = motzkin.rho("M", n)
        rhs = permstats.signed_enumerator(n, "B", "FULL_YTQ")
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _corteel_schedule() -> CoefficientSchedule:
    def mu(h: int) -> Poly:
        qh = Poly.monomial(eq=h)
        return Y ** 2 * q_int(h + 1) + q_int(h) + Y * T * qh * (
            q_int(h) + q_int(h + 1)
        )

    def lam(h: int) -> Poly:
        return (
            q_int(h) ** 2
            * (Y ** 2 + Y * T * Poly.monomial(eq=h - 1))
            * (ONE + Y * T * Poly.monomial(eq=h))
        )

    return CoefficientSchedule(mu, lam)


def _check_corteel_cf(n_max: int) -> str | None:
    series = jfraction_series(_corteel_schedule(), n_max)
    for n in range(0, n_max + 1):
        rhs = permstats.signed_enumerator(n, "B", "FULL_YTQ")
        if series[n] != rhs:
            return _poly_diff(n, series[n], rhs)
    return None


def _check_rho_filtered(scheme: str, family: str) -> Callable[[int], str | None]:
    def fn(n_max: int) -> str | None:
        for n in range(0, n_max + 1):
            lhs = motzkin.rho(scheme, n)
            rhs = permstats.signed_enumerator(n, family, "FULL_YTQ")
            if lhs != rhs:
                return _poly_diff(n, lhs, rhs)
        return None

    return fn


# -- restructuring map and involutions ------------------------------------------


def _check_restructure(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        heads = defaultdict(list)
        for p in motzkin.gen_weighted("M", n):
            head, out = bijections.phi(p)
            if head * out.weight() != p.weight():
                return f"n={n}: weight not preserved for {p.text()}"
            if bijections.phi_inverse(head, out) != p:
                return f"n={n}: round trip failed for {p.text()}"
            heads[out].append(head)
        expected = set(motzkin.gen_weighted("H", n - 1))
        if set(heads) != expected:
            missing = expected - set(heads)
            extra = set(heads) - expected
            sample = next(iter(missing or extra))
            return f"n={n}: cover mismatch at {sample.text()}"
        for out, seen in heads.items():
            if sorted(m.text() for m in seen) != ["y*t", "y^2"]:
                return f"n={n}: heads over {out.text()} are {[m.text() for m in seen]}"
        lhs = motzkin.rho("M", n)
        rhs = (Y ** 2 + Y * T) * motzkin.rho("H", n - 1)
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _check_fixed_sum(scheme: str, shifted) -> Callable[[int], str | None]:
    def fn(n_max: int) -> str | None:
        for n in range(0, n_max + 1):
            lhs = motzkin.rho(scheme, n)
            rhs = Y ** n * shifted(n)
            if lhs != rhs:
                return _poly_diff(n, lhs, rhs)
        return None

    return fn


def _check_psi1(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        fixed = set()
        for p in motzkin.gen_weighted("H", n):
            image = bijections.psi1(p)
            if bijections.psi1(image) != p:
                return f"n={n}: not an involution at {p.text()}"
            wp, wi = p.weight(), image.weight()
            if image == p:
                fixed.add(p)
                if not bijections.is_fixed_f(p):
                    return f"n={n}: unexpected fixed point {p.text()}"
            else:
                if bijections.is_fixed_f(p):
                    return f"n={n}: moved point satisfies the fixed-set menus: {p.text()}"
                if (
                    abs(wi.ey - wp.ey) != 2
                    or wi.et != wp.et
                    or wi.eq != wp.eq
                ):
                    return (
                        f"n={n}: weight law broken at {p.text()}:"
                        f" {wp.text()} -> {wi.text()}"
                    )
        if fixed != set(motzkin.gen_weighted("F", n)):
            return f"n={n}: fixed set differs from the restricted path family"
    return None


def _check_psi1_slices(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        for scheme, parity in (("H1", 1), ("H2", 0)):
            members = set(motzkin.gen_weighted(scheme, n))
            for p in members:
                if bijections.psi1(p) not in members:
                    return f"n={n}: psi1 leaves the {scheme} slice at {p.text()}"
        for p in motzkin.gen_weighted("F", n):
            if p.t_degree() % 2 != n % 2:
                return f"n={n}: fixed path with t-degree {p.t_degree()}: {p.text()}"
    return None


def _check_psi2(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        fixed = set()
        for p in motzkin.gen_weighted("MSTAR", n):
            image = bijections.psi2(p)
            if bijections.psi2(image) != p:
                return f"n={n}: not an involution at {p.text()}"
            wp, wi = p.weight(), image.weight()
            if image == p:
                fixed.add(p)
                if not bijections.is_fixed_g(p):
                    return f"n={n}: unexpected fixed point {p.text()}"
                if wp.et % 2 != n % 2:
                    return f"n={n}: fixed path with t-degree {wp.et}: {p.text()}"
            else:
                if bijections.is_fixed_g(p):
                    return f"n={n}: moved point satisfies the fixed-set menus: {p.text()}"
                if (wi.ey - wp.ey, wi.eq - wp.eq) not in ((2, 1), (-2, -1)) or wi.et != wp.et:
                    return (
                        f"n={n}: weight law broken at {p.text()}:"
                        f" {wp.text()} -> {wi.text()}"
                    )
        if fixed != set(motzkin.gen_weighted("G", n)):
            return f"n={n}: fixed set differs from the restricted path family"
    return None


# -- snakes ---------------------------------------------------------------------


def _check_sign_changes(n_max: int) -> str | None:
    for variant in ("S0", "S00"):
        for n in range(0, n_max + 1):
            for s in snakes.generate_snakes(n, variant):
                v = snakes.cs_vector(s)
                if sum(v) != snakes.sign_changes(s):
                    return f"{s.text()}: vector {v} does not sum to the total"
                abs_window = tuple(abs(x) for x in s.window)
                if snakes.arnold_recover(abs_window, v, variant) != s:
                    return f"{s.text()}: sign recovery failed"
    return None


def _check_pattern_lemma(n_max: int) -> str | None:
    for variant in ("S0", "S00"):
        for n in range(1, n_max + 1):
            for s in snakes.generate_snakes(n, variant):
                word = tuple(abs(x) for x in s.window)
                profile = snakes.block_profile(word, variant)
                for k in range(1, n + 1):
                    a, b = snakes.pattern_counts(word, variant, k)
                    if profile.beta[k] != b or profile.alpha[k] != a + b + 1:
                        return (
                            f"{s.text()}: k={k} blocks ({profile.alpha[k]},"
                            f" {profile.beta[k]}) vs patterns ({a}, {b})"
                        )
    return None


def _check_lambda1(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        images = {}
        for s in snakes.generate_snakes(n, "S0"):
            path = snakes.lambda1(s)
            if path in images:
                return f"n={n}: {s.text()} and {images[path].text()} collide"
            images[path] = s
            if snakes.lambda1_inv(path) != s:
                return f"n={n}: round trip failed for {s.text()}"
        if set(images) != set(motzkin.gen_weighted("TSTAR", n)):
            return f"n={n}: image is not the whole path family"
        lhs = snakes.snake_enumerator(n, "Q")
        rhs = eulerians.Q_poly(n)
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


def _check_lambda2(n_max: int) -> str | None:
    for n in range(0, n_max + 1):
        images = {}
        for s in snakes.generate_snakes(n + 1, "S00"):
            path = snakes.lambda2(s)
            if path in images:
                return f"n={n}: {s.text()} and {images[path].text()} collide"
            images[path] = s
            if snakes.lambda2_inv(path) != s:
                return f"n={n}: round trip failed for {s.text()}"
        if set(images) != set(motzkin.gen_weighted("T", n)):
            return f"n={n}: image is not the whole path family"
        lhs = snakes.snake_enumerator(n, "R")
        rhs = eulerians.R_poly(n)
        if lhs != rhs:
            return _poly_diff(n, lhs, rhs)
    return None


# -- worked-example goldens ------------------------------------------------------


def _check_cro_golden(_: int) -> str | None:
    got = permstats.stats((3, -4, -2, 5, 1)).cro_b
    return None if got == 5 else f"cro_b((3,-4,-2,5,1)) = {got}, want 5"


_EXAMPLE_SNAKE = (5, -2, 4, -7, -1, -8, 10, -9, 6, 3)
_EXAMPLE_SNAKE_00 = (5, -2, 4, -7, -1, -8, 11, -9, 6, 3, 10)


def _check_cs_golden(_: int) -> str | None:
    s = snakes.Snake(_EXAMPLE_SNAKE, "S0")
    v = snakes.cs_vector(s)
    if v != (0, 2, 0, 1, 0, 1, 0, 1, 1, 0):
        return f"cs-vector {v}"
    total = snakes.sign_changes(s)
    if total != 6:
        return f"cs total {total}, want 6"
    return None


def _check_table1_golden(_: int) -> str | None:
    p = snakes.block_profile(tuple(abs(v) for v in _EXAMPLE_SNAKE), "S0")
    if p.alpha != (1, 2, 3, 4, 4, 3, 3, 2, 2, 2, 1):
        return f"alpha row {p.alpha}"
    if p.beta != (0, 0, 1, 0, 2, 2, 0, 1, 1, 0, 0):
        return f"beta row {p.beta}"
    return None


def _check_table2_golden(_: int) -> str | None:
    p = snakes.block_profile(tuple(abs(v) for v in _EXAMPLE_SNAKE_00), "S00")
    if p.alpha[:11] != (2, 3, 4, 5, 5, 4, 4, 3, 3, 3, 2):
        return f"alpha row {p.alpha[:11]}"
    if p.beta[1:11] != (1, 2, 1, 3, 3, 1, 2, 2, 1, 0):
        return f"beta row {p.beta[1:11]}"
    return None


def _check_b1_b2_golden(_: int) -> str | None:
    b1 = str(permstats.signed_enumerator(1, "B", "FULL_YTQ"))
    if b1 != "y*t + y^2":
        return f"B_1 = {b1}"
    b2 = str(permstats.signed_enumerator(2, "B", "FULL_YTQ"))
    want = "y*t + y^2 + y^2*t^2 + y^2*t^2*q + 2*y^3*t + y^3*t*q + y^4"
    if b2 != want:
        return f"B_2 = {b2}"
    return None


def _check_lambda1_golden(_: int) -> str | None:
    path = snakes.lambda1(snakes.Snake(_EXAMPLE_SNAKE, "S0"))
    got = [(path.steps[i], path.weights[i].text()) for i in (0, 1)]
    want = [("U", "1"), ("U", "t^2*q^4")]
    return None if got == want else f"first steps {got}"


def _check_lambda2_golden(_: int) -> str | None:
    path = snakes.lambda2(snakes.Snake(_EXAMPLE_SNAKE_00, "S00"))
    got = [(path.steps[i], path.weights[i].text()) for i in (0, 1)]
    want = [("U", "1"), ("U", "t^2*q^5")]
    return None if got == want else f"first steps {got}"


# -- registry --------------------------------------------------------------------


R_ODD_NOTE = (
    "corrected: the odd-index identification R_(2m+1)(0,q) = E_(2m+1)(q) is"
    " false (the left side vanishes identically); the verified identity is"
    " R_(2m)(0,q) = E_(2m+1)(q)"
)


CHECKS: list[Check] = [
    Check("q0-golden", "Q_0 equals the literal '1'", 0, _golden_poly("Q", 0), scalable=False),
    Check("q1-golden", "Q_1 equals the literal 't'", 0, _golden_poly("Q", 1), scalable=False),
    Check("q2-golden", "Q_2 equals the literal '1 + (1+q)t^2'", 0, _golden_poly("Q", 2), scalable=False),
    Check("q3-golden", "Q_3 equals the literal '(2+2q+q^2)t + (1+2q+2q^2+q^3)t^3'", 0, _golden_poly("Q", 3), scalable=False),
    Check("r0-golden", "R_0 equals the literal '1'", 0, _golden_poly("R", 0), scalable=False),
    Check("r1-golden", "R_1 equals the literal '(1+q)t'", 0, _golden_poly("R", 1), scalable=False),
    Check("r2-golden", "R_2 equals the literal '(1+q) + (1+2q+2q^2+q^3)t^2'", 0, _golden_poly("R", 2), scalable=False),
    Check("r3-golden", "R_3 equals the literal '(2+5q+5q^2+3q^3+q^4)t + (1+3q+5q^2+6q^3+5q^4+3q^5+q^6)t^3'", 0, _golden_poly("R", 3), scalable=False),
    Check("commutation-du-qud", "(DU - qUD) f = f on the basis t^k", 12, _check_commutation),
    Check("thm-1.2", "operator-route Q_n, R_n equal their continued-fraction coefficients", 8, _check_qr_jfraction),
    Check("q-secant-at-t0", "Q_(2m)(0,q) equals the 2m-th q-secant number", 8, _check_q_secant_at_t0),
    Check("r-odd-at-t0", "R_n(0,q) vanishes for odd n; R_(2m)(0,q) is the q-tangent number E_(2m+1)(q)", 8, _check_r_odd_at_t0, note=R_ODD_NOTE),
    Check("q11-springer", "Q_n(1,1) counts the snakes with positive first entry", 7, _check_q11_springer),
    Check("r11-tangent", "R_n(1,1) = 2^n E_(n+1)", 7, _check_r11_tangent),
    Check("eulercan1", "sum over all permutations of (-1)^exc is 0 or +-E_n by parity", 8, _check_eulercan1, min_n=1),
    Check("eulercan2", "sum over derangements of (-1)^exc is +-E_n or 0 by parity", 8, _check_eulercan2, min_n=1),
    Check("gamma-expansion", "excedance polynomial equals its gamma-basis expansion", 7, _check_gamma_expansion, min_n=1),
    Check("xi-expansion", "derangement excedance polynomial equals its xi-basis expansion", 7, _check_xi_expansion),
    Check("jv1", "sum over permutations of (-1)^wex q^cro is 0 or +-E_n(q) by parity", 7, _check_jv1, min_n=1),
    Check("jv2", "sum over derangements of (-1/q)^wex q^cro is (-1/q)^(n/2) E_n(q) or 0", 7, _check_jv2, min_n=1),
    Check("des-b-equidistribution", "des_b and floor(fwex/2) are equidistributed over the signed permutations", 5, _check_des_b_equidistribution),
    Check("thm-1.3-i", "signed fwex/2 sum over B_n equals [(-1)^floor((n+1)/2) + (-1)^floor(n/2) t] R_(n-1)", 5, _check_fwex_b, min_n=1),
    Check("thm-1.3-ii", "signed fwex/2 sum over D_n equals +-R_(n-1) or +-t R_(n-1) by parity", 5, _check_fwex_d, min_n=1),
    Check("thm-1.4-i", "(-1/q)^floor(fwex/2) sum over fixed-point-free B_n equals (-1/q)^floor(n/2) Q_n", 5, _check_fwex_bstar, min_n=1),
    Check("thm-1.4-ii", "(-1/q)^floor(fwex/2) sum over fixed-point-free D_n equals (-1/q)^(n/2) Q_n or 0", 5, _check_fwex_dstar, min_n=1),
    Check("cor-1.5-i", "sum over B_n of (-1)^floor(fwex/2) is (-1)^(n/2) 2^n E_n or 0", 5, _check_eval_b, min_n=1),
    Check("cor-1.5-ii", "sum over D_n of (-1)^floor(fwex/2) is (-1)^floor((n+1)/2) 2^(n-1) E_n", 5, _check_eval_d, min_n=1),
    Check("cor-1.6-i", "sum over fixed-point-free B_n of (-1)^floor(fwex/2) is (-1)^floor(n/2) S_n", 5, _check_eval_bstar, min_n=1),
    Check("cor-1.6-ii", "sum over fixed-point-free D_n of (-1)^floor(fwex/2) is (-1)^(n/2) S_n or 0", 5, _check_eval_dstar, min_n=1),
    Check("prop-2.2", "path weights of scheme T sum to R_n", 5, _check_rho_t),
    Check("prop-2.3", "path weights of scheme TSTAR sum to Q_n", 5, _check_rho_tstar),
    Check("thm-corteel", "path weights of scheme M sum to the trivariate signed-permutation enumerator", 5, _check_corteel),
    Check("thm-corteel-cf", "the trivariate enumerator equals its continued-fraction coefficients", 5, _check_corteel_cf),
    Check("eqn-dn", "scheme M paths of even t-degree sum to the even-signed enumerator", 5, _check_rho_filtered("MPRIME", "D")),
    Check("eqn-bstar", "scheme MSTAR paths sum to the fixed-point-free enumerator", 5, _check_rho_filtered("MSTAR", "B*")),
    Check("eqn-dstar", "scheme MSTAR paths of even t-degree sum to the fixed-point-free even-signed enumerator", 5, _check_rho_filtered("MSTARPRIME", "D*")),
    Check("prop-3.2", "the doubling map is a weight-preserving two-to-one cover of scheme H", 5, _check_restructure, min_n=1),
    Check("lemma-3.5", "the psi1 fixed family sums to y^n R_n", 5, _check_fixed_sum("F", eulerians.R_poly)),
    Check("prop-3.6", "psi1 is an involution on H with weight factor y^(+-2) and fixed set F", 5, _check_psi1),
    Check("lemma-3.8", "psi1 preserves the t-degree slices; fixed weights have t-degree of the parity of n", 5, _check_psi1_slices),
    Check("lemma-4.3", "the psi2 fixed family sums to y^n Q_n", 5, _check_fixed_sum("G", eulerians.Q_poly)),
    Check("prop-4.4", "psi2 is an involution on MSTAR with weight factor (y^2 q)^(+-1) and fixed set G", 5, _check_psi2),
    Check("lemma-sign-changes", "cs-vectors sum to the sign-change count and determine the snake", 5, _check_sign_changes),
    Check("lemma-pattern", "block statistics equal the 13-2 and 2-31 pattern counts", 5, _check_pattern_lemma, min_n=1),
    Check("thm-5.8", "the snake encoding is a bijection onto scheme TSTAR and realizes Q_n", 5, _check_lambda1),
    Check("thm-5.12", "the snake encoding is a bijection onto scheme T and realizes R_n", 5, _check_lambda2),
    Check("example-cro-golden", "the worked crossing example has five crossings", 0, _check_cro_golden, scalable=False),
    Check("example-cs-golden", "the worked snake example has cs-vector (0,2,0,1,0,1,0,1,1,0) and cs = 6", 0, _check_cs_golden, scalable=False),
    Check("table-1-golden", "block table of the worked size-10 example", 0, _check_table1_golden, scalable=False),
    Check("table-2-golden", "block table of the worked size-11 example", 0, _check_table2_golden, scalable=False),
    Check("b1-b2-golden", "trivariate enumerators of sizes 1 and 2 match their literals", 0, _check_b1_b2_golden, scalable=False),
    Check("lambda1-golden", "first two encoded steps of the worked size-10 snake weigh 1 and t^2 q^4", 0, _check_lambda1_golden, scalable=False),
    Check("lambda2-golden", "first two encoded steps of the worked size-11 snake weigh 1 and t^2 q^5", 0, _check_lambda2_golden, scalable=False),
]

CHECKS_BY_ID = {c.id: c for c in CHECKS}


def run_check(check_id: str, n_max: int | None = None) -> CheckResult:
    """Run one catalog entry; unknown ids raise KeyError."""
    check = CHECKS_BY_ID[check_id]
    effective = check.default_n if n_max is None else n_max
    if not check.scalable:
        effective = check.default_n
    if check.scalable and effective < check.min_n:
        return CheckResult(check.id, effective, "skipped", None, check.note)
    witness = check.fn(effective)
    status = "pass" if witness is None else "fail"
    return CheckResult(check.id, effective, status, witness, check.note)
