"""Weighted bicolored Motzkin paths.

A path of length n uses steps U (rise), D (fall), L (straight level) and
W (wavy level), starts and ends on the x-axis and never goes below it.  The
height of a step is the y-coordinate of its starting point.

A weighting scheme assigns each step, at each height, a menu of admissible
monomial weights.  Implemented schemes:

  T       level/rise/fall menus realizing the R_n(t,q) series
  TSTAR   menus realizing the Q_n(t,q) series (no wavy steps on the axis)
  M       trivariate y,t,q menus realizing the signed-permutation
          enumerator sum(y^fwex t^neg q^cro_b) (no wavy steps on the axis)
  MSTAR   M without straight level steps of weight exactly y^2
          (the image of the fixed-point-free signed permutations)
  H       the restructured menus: M_n is a two-to-one weight-preserving
          cover of H_(n-1)
  F       subset of H: level steps use the yt branch and every facing
          rise/fall pair is weighted (y^2 q^a, q^b) or
          (y t q^(h+1+a), y t q^(h+1+b)); total weight y^n R_n
  G       subset of MSTAR: level steps use the yt branch and every facing
          pair is weighted (y^2 q^a, q^b) or (y t q^(h+a), y t q^(h+1+b));
          total weight y^n Q_n

plus the parity slices MPRIME, MSTARPRIME (even powers of t in the path
weight) and H1, H2 (odd and even powers of t).

Empty menu ranges (upper exponent below the lower one) yield empty menus,
not errors; a fall step at height 0 is an error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from snakelab.algebra import Key, Monomial, Poly

STEPS = ("U", "D", "L", "W")

SCHEMES = (
    "M", "H", "F", "T", "TSTAR", "G",
    "MSTAR", "MPRIME", "MSTARPRIME", "H1", "H2",
)

# scheme -> (menu table, required t-parity of the path weight, pair rule)
_SCHEME_INFO = {
    "M": ("M", None, None),
    "MSTAR": ("MSTAR", None, None),
    "MPRIME": ("M", 0, None),
    "MSTARPRIME": ("MSTAR", 0, None),
    "H": ("H", None, None),
    "H1": ("H", 1, None),
    "H2": ("H", 0, None),
    "T": ("T", None, None),
    "TSTAR": ("TSTAR", None, None),
    "F": ("F", None, "F"),
    "G": ("G", None, "G"),
}


def _mons(ey: int, et: int, lo: int, hi: int) -> tuple[Monomial, ...]:
    return tuple(Monomial(1, ey, et, e) for e in range(lo, hi + 1))


@lru_cache(maxsize=None)
def weight_menu(scheme: str, step: str, h: int) -> tuple[Monomial, ...]:
    """Admissible weights for a step starting at height h.

    For F and G the rise/fall menus list every weight that can occur; which
    combinations may face each other is the pair rule checked separately.
    """
    if scheme not in _SCHEME_INFO:
        raise ValueError(f"unknown scheme {scheme!r}")
    if step not in STEPS:
        raise ValueError(f"unknown step {step!r}")
    table = _SCHEME_INFO[scheme][0]
    if step == "D":
        if h < 1:
            raise ValueError("down step below axis")
        g = h - 1  # menus for a fall are indexed by the landing height
        if table == "T":
            return _mons(0, 0, 0, g + 1)
        if table == "TSTAR":
            return _mons(0, 0, 0, g)
        # M, MSTAR, H, F, G share the fall menu of their parent table
        return _mons(0, 0, 0, g) + _mons(1, 1, g + 1, 2 * g + 1)
    if step == "U":
        if table == "T":
            return _mons(0, 0, 0, h) + _mons(0, 2, 2 * h + 2, 3 * h + 2)
        if table == "TSTAR":
            return _mons(0, 0, 0, h) + _mons(0, 2, 2 * h + 1, 3 * h + 1)
        if table in ("M", "MSTAR", "G"):
            return _mons(2, 0, 0, h) + _mons(1, 1, h, 2 * h)
        # H, F
        return _mons(2, 0, 0, h + 1) + _mons(1, 1, h + 1, 2 * h + 2)
    if step == "L":
        if table == "T":
            return _mons(0, 1, h + 1, 2 * h + 1)
        if table == "TSTAR":
            return _mons(0, 1, h, 2 * h)
        if table == "M":
            return _mons(2, 0, 0, h) + _mons(1, 1, h, 2 * h)
        if table == "MSTAR":
            return _mons(2, 0, 1, h) + _mons(1, 1, h, 2 * h)
        if table == "H":
            return _mons(0, 0, 0, h) + _mons(1, 1, h + 1, 2 * h + 1)
        if table == "F":
            return _mons(1, 1, h + 1, 2 * h + 1)
        return _mons(1, 1, h, 2 * h)  # G
    # step == "W"
    if table == "T":
        return _mons(0, 1, h, 2 * h)
    if table == "TSTAR":
        return _mons(0, 1, h, 2 * h - 1)
    if table in ("M", "MSTAR"):
        return _mons(0, 0, 0, h - 1) + _mons(1, 1, h, 2 * h - 1)
    if table == "H":
        return _mons(2, 0, 0, h) + _mons(1, 1, h, 2 * h)
    if table == "F":
        return _mons(1, 1, h, 2 * h)
    return _mons(1, 1, h, 2 * h - 1)  # G


@lru_cache(maxsize=None)
def step_heights(steps: tuple[str, ...]) -> tuple[int, ...]:
    """Starting height of each step; raises if the shape is invalid."""
    out = []
    h = 0
    for s in steps:
        out.append(h)
        if s == "U":
            h += 1
        elif s == "D":
            h -= 1
            if h < 0:
                raise ValueError(f"path dips below the axis: {steps}")
        elif s not in ("L", "W"):
            raise ValueError(f"unknown step {s!r}")
    if h != 0:
        raise ValueError(f"path does not return to the axis: {steps}")
    return tuple(out)


def is_valid_shape(steps: tuple[str, ...]) -> bool:
    try:
        step_heights(steps)
    except ValueError:
        return False
    return True


@lru_cache(maxsize=None)
def matching_pairs(steps: tuple[str, ...]) -> tuple[tuple[int, int], ...]:
    """Facing (rise, fall) index pairs, 0-based, ordered by rise index.

    Level steps are transparent: each rise is paired with the first later
    fall at the same matched depth.
    """
    step_heights(steps)
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    for i, s in enumerate(steps):
        if s == "U":
            stack.append(i)
        elif s == "D":
            pairs.append((stack.pop(), i))
    return tuple(sorted(pairs))


@dataclass(frozen=True)
class WeightedPath:
    """A path shape together with one weight monomial per step."""

    steps: tuple[str, ...]
    weights: tuple[Monomial, ...]

    def __post_init__(self):
        if len(self.steps) != len(self.weights):
            raise ValueError("one weight per step required")
        step_heights(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> tuple[int, ...]:
        return step_heights(self.steps)

    def weight(self) -> Monomial:
        out = Monomial()
        for w in self.weights:
            out = out * w
        return out

    def t_degree(self) -> int:
        return sum(w.et for w in self.weights)

    def text(self) -> str:
        return " ".join(f"{s}[{w.text()}]" for s, w in zip(self.steps, self.weights))


EMPTY_PATH = WeightedPath((), ())


def _pair_ok(rule: str, h: int, wu: Monomial, wd: Monomial) -> bool:
    """Admissible facing-pair weights for the fixed-point families,
    h being the rise height.  Exponent ranges are already enforced by the
    per-step menus; only the branch coupling is decided here."""
    u_y2 = wu.ey == 2
    d_q = wd.ey == 0
    if rule == "F":
        # (y^2 q^a, q^b) or (yt q^(h+1+a), yt q^(h+1+b))
        return u_y2 == d_q
    if rule == "G":
        # (y^2 q^a, q^b) or (yt q^(h+a), yt q^(h+1+b))
        return u_y2 == d_q
    raise ValueError(f"unknown pair rule {rule!r}")


def gen_shapes(n: int, forbid_wavy_on_axis: bool = False) -> Iterator[tuple[str, ...]]:
    """All shapes of length n, depth-first in step order U, D, L, W."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def rec(prefix: list[str], h: int, remaining: int) -> Iterator[tuple[str, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for s in STEPS:
            if s == "U":
                nh = h + 1
            elif s == "D":
                if h == 0:
                    continue
                nh = h - 1
            else:
                if s == "W" and h == 0 and forbid_wavy_on_axis:
                    continue
                nh = h
            if nh > remaining - 1:
                continue
            prefix.append(s)
            yield from rec(prefix, nh, remaining - 1)
            prefix.pop()

    yield from rec([], 0, n)


def gen_weighted(scheme: str, n: int) -> Iterator[WeightedPath]:
    """All weighted paths of the scheme, via Cartesian expansion of the
    per-step menus, then the scheme's parity and pair filters."""
    _, parity, pair_rule = _scheme_info(scheme)
    forbid_wavy = len(weight_menu(scheme, "W", 0)) == 0
    for steps in gen_shapes(n, forbid_wavy_on_axis=forbid_wavy):
        heights = step_heights(steps)
        menus = [weight_menu(scheme, s, h) for s, h in zip(steps, heights)]
        if any(not menu for menu in menus):
            continue
        pairs = matching_pairs(steps) if pair_rule else ()
        for combo in itertools.product(*menus):
            if parity is not None and sum(w.et for w in combo) % 2 != parity:
                continue
            if pair_rule and not all(
                _pair_ok(pair_rule, heights[u], combo[u], combo[d])
                for u, d in pairs
            ):
                continue
            yield WeightedPath(steps, combo)


def _scheme_info(scheme: str):
    try:
        return _SCHEME_INFO[scheme]
    except KeyError:
        raise ValueError(f"unknown scheme {scheme!r}") from None


def in_family(scheme: str, path: WeightedPath) -> bool:
    """Full membership test: shape, per-step menus, parity, pair rule."""
    _, parity, pair_rule = _scheme_info(scheme)
    heights = path.heights()
    for s, h, w in zip(path.steps, heights, path.weights):
        if s == "D" and h == 0:
            return False
        if w not in weight_menu(scheme, s, h):
            return False
    if parity is not None and path.t_degree() % 2 != parity:
        return False
    if pair_rule:
        for u, d in matching_pairs(path.steps):
            if not _pair_ok(pair_rule, heights[u], path.weights[u], path.weights[d]):
                return False
    return True


def rho(scheme: str, n: int) -> Poly:
    """Total weight of the scheme's paths of length n."""
    acc: dict[Key, int] = {}
    for path in gen_weighted(scheme, n):
        m = path.weight()
        key = (m.ey, m.et, m.eq)
        acc[key] = acc.get(key, 0) + m.coeff
    return Poly(acc)


def flajolet_schedule(scheme: str) -> "CoefficientSchedule":
    """The Jacobi continued-fraction schedule induced by a menu scheme:
    mu_h = total level weight at height h, lam_h = (total rise weight at
    h-1) * (total fall weight starting at h)."""
    from snakelab.algebra import CoefficientSchedule

    def menu_sum(step: str, h: int) -> Poly:
        return Poly.from_quadruples(
            [m.coeff, m.ey, m.et, m.eq] for m in weight_menu(scheme, step, h)
        )

    if _SCHEME_INFO[scheme][1] is not None or _SCHEME_INFO[scheme][2] is not None:
        raise ValueError(f"scheme {scheme} is not menu-defined; no J-fraction schedule")
    return CoefficientSchedule(
        mu=lambda h: menu_sum("L", h) + menu_sum("W", h),
        lam=lambda h: menu_sum("U", h - 1) * menu_sum("D", h),
    )
