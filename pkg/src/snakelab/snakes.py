"""Snakes (alternating signed permutations), their sign-change and pattern
statistics, and the bijections onto weighted bicolored Motzkin paths.

A snake of size n is a signed permutation with sigma_1 > sigma_2 < sigma_3 >
...  Variants fix the boundary entries sigma_0 and sigma_(n+1):

  FULL  all snakes;           sigma_0 = -(n+1), sigma_(n+1) = (-1)^n (n+1)
  S0    sigma_1 > 0;          sigma_0 = 0,      sigma_(n+1) = (-1)^n (n+1)
  S00   sigma_1 > 0 and       sigma_0 = 0,      sigma_(n+1) = 0
        (-1)^n sigma_n < 0

`lambda1` encodes an S0 snake of size n as a weighted path of scheme TSTAR
(total weight t^cs q^(2-31 + pat_Q), summing to Q_n(t,q)); `lambda2` encodes
an S00 snake of size n+1 as a scheme-T path of length n (summing to
R_n(t,q) after the q^(-n-1) normalization).  Both inverses rebuild the
absolute permutation block by block and then recover the signs from the
cs-vector by the local alternation rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from snakelab.algebra import Key, Monomial, Poly
from snakelab.motzkin import WeightedPath, in_family

VARIANTS = ("FULL", "S0", "S00")


@dataclass(frozen=True)
class Snake:
    """A snake window together with its variant tag."""

    window: tuple[int, ...]
    variant: str

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")

    def size(self) -> int:
        return len(self.window)

    def boundary(self) -> tuple[int, int]:
        n = len(self.window)
        right = (n + 1) if n % 2 == 0 else -(n + 1)
        if self.variant == "FULL":
            return -(n + 1), right
        if self.variant == "S0":
            return 0, right
        return 0, 0

    def extended(self) -> tuple[int, ...]:
        left, right = self.boundary()
        return (left, *self.window, right)

    def abs_extended(self) -> tuple[int, ...]:
        return tuple(abs(v) for v in self.extended())

    def text(self) -> str:
        body = ",".join(str(v) for v in self.window)
        return f"({body})[{self.variant}]"


def _alternates(window: Sequence[int]) -> bool:
    for i in range(len(window) - 1):
        if i % 2 == 0:
            if window[i] < window[i + 1]:
                return False
        elif window[i] > window[i + 1]:
            return False
    return True


def is_snake_window(window: Sequence[int], variant: str) -> bool:
    n = len(window)
    if not _alternates(window):
        return False
    if variant in ("S0", "S00") and n >= 1 and window[0] < 0:
        return False
    if variant == "S00" and n >= 1:
        last = window[-1] if n % 2 == 0 else -window[-1]
        if last >= 0:
            return False
    return True


def generate_snakes(n: int, variant: str) -> Iterator[Snake]:
    """All snakes of the variant, by backtracking over signed values in
    increasing order (deterministic)."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if n == 0:
        yield Snake((), variant)
        return
    candidates = [v for v in range(-n, n + 1) if v != 0]

    def rec(prefix: list[int], used: set[int]) -> Iterator[Snake]:
        i = len(prefix) + 1  # position being filled
        for v in candidates:
            if abs(v) in used:
                continue
            if i == 1:
                if variant in ("S0", "S00") and v < 0:
                    continue
            elif i % 2 == 0:
                if v > prefix[-1]:
                    continue
            elif v < prefix[-1]:
                continue
            if i == n and variant == "S00":
                if (v if n % 2 == 0 else -v) >= 0:
                    continue
            prefix.append(v)
            used.add(abs(v))
            if i == n:
                yield Snake(tuple(prefix), variant)
            else:
                yield from rec(prefix, used)
            prefix.pop()
            used.discard(abs(v))

    yield from rec([], set())


def _changes(a: int, b: int) -> bool:
    # sign change between adjacent entries; a boundary zero, having no sign,
    # never participates in a change (the product must be strictly negative)
    return a * b < 0


def sign_changes(snake: Snake) -> int:
    """Number of adjacent sign changes through the boundary-extended window."""
    ext = snake.extended()
    return sum(1 for i in range(len(ext) - 1) if _changes(ext[i], ext[i + 1]))


def cs_vector(snake: Snake) -> tuple[int, ...]:
    """Per-element sign-change counts: 0 or 2 at valleys of the absolute
    word (according to whether the element sits in a sign change), 1 at
    double ascents and double descents, 0 at peaks; the total is the number
    of sign changes."""
    ext = snake.extended()
    word = snake.abs_extended()
    pos = {word[i]: i for i in range(1, len(word) - 1)}
    out = []
    for j in range(1, snake.size() + 1):
        i = pos[j]
        left, right = word[i - 1], word[i + 1]
        if left > j < right:
            change_left = _changes(ext[i - 1], ext[i])
            change_right = _changes(ext[i], ext[i + 1])
            if change_left != change_right:
                raise ValueError(f"not a snake: {snake.text()}")
            out.append(2 if change_left else 0)
        elif left < j > right:
            out.append(0)
        else:
            out.append(1)
    return tuple(out)


def arnold_recover(abs_window: Sequence[int], cs: Sequence[int], variant: str) -> Snake:
    """Recover the snake from its absolute window and cs-vector.

    Signs are assigned left to right: the first entry is positive; at a
    double descent or after a double ascent the sign flips, and across a
    valley of the absolute word the flip is dictated by the valley's
    recorded count (2 = flip, 0 = keep).  Raises if no snake of the variant
    realizes the vector.
    """
    if variant not in ("S0", "S00"):
        raise ValueError("sign recovery is defined for the S0 and S00 variants")
    n = len(abs_window)
    if sorted(abs_window) != list(range(1, n + 1)):
        raise ValueError(f"not an absolute window: {abs_window}")
    if len(cs) != n:
        raise ValueError("cs-vector length must match the window")
    if n == 0:
        return Snake((), variant)
    probe = Snake(tuple(abs_window), variant)
    word = probe.abs_extended()
    by_element = {j: cs[j - 1] for j in range(1, n + 1)}
    signs = [0] * (n + 1)  # 1-based
    signs[1] = 1
    for i in range(2, n + 1):
        if word[i - 1] > word[i]:
            if word[i] > word[i + 1]:
                flip = True  # double descent forces alternation
            else:
                flip = by_element[word[i]] == 2
        else:
            if word[i - 2] < word[i - 1]:
                flip = True  # rising run forces alternation
            else:
                flip = by_element[word[i - 1]] == 2
        signs[i] = -signs[i - 1] if flip else signs[i - 1]
    window = tuple(signs[i] * abs_window[i - 1] for i in range(1, n + 1))
    out = Snake(window, variant)
    if not is_snake_window(window, variant) or cs_vector(out) != tuple(cs):
        raise ValueError(f"no snake realizes cs-vector {tuple(cs)} over {abs_window}")
    return out


@dataclass(frozen=True)
class BlockProfile:
    """Block counts of the boundary-extended absolute word restricted to
    {0..k}: alpha[k] blocks in total, beta[k] of them strictly to the right
    of the block containing k (leftmost occurrence for the S00 boundary
    zeros)."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]


def _blocks(word: Sequence[int], k: int) -> list[tuple[int, int]]:
    # maximal runs of positions whose values are <= k, as (start, end) pairs
    out = []
    start = None
    for i, v in enumerate(word):
        if v <= k:
            if start is None:
                start = i
        elif start is not None:
            out.append((start, i - 1))
            start = None
    if start is not None:
        out.append((start, len(word) - 1))
    return out


def block_profile(abs_window: Sequence[int], variant: str) -> BlockProfile:
    probe = Snake(tuple(abs_window), variant)
    word = probe.abs_extended()
    m = len(abs_window)
    alpha = []
    beta = []
    for k in range(m + 1):
        blocks = _blocks(word, k)
        alpha.append(len(blocks))
        pos = word.index(k)
        after = sum(1 for start, _ in blocks if start > pos)
        beta.append(after)
    return BlockProfile(tuple(alpha), tuple(beta))


def pattern_counts(abs_window: Sequence[int], variant: str, j: int) -> tuple[int, int]:
    """(13-2, 2-31) pattern counts of the element j against adjacent pairs of
    the boundary-extended absolute word."""
    probe = Snake(tuple(abs_window), variant)
    word = probe.abs_extended()
    i = word.index(j, 1)
    thirteen_two = sum(
        1 for a in range(0, i - 1) if word[a] < j < word[a + 1]
    )
    two_thirty_one = sum(
        1 for a in range(i + 1, len(word) - 1) if word[a] > j > word[a + 1]
    )
    return thirteen_two, two_thirty_one


def two_thirty_one_total(abs_window: Sequence[int], variant: str) -> int:
    return sum(
        pattern_counts(abs_window, variant, j)[1]
        for j in range(1, len(abs_window) + 1)
    )


def element_class(snake: Snake, j: int) -> str:
    """Classify element j: 'valley0' (valley, no sign change), 'X' (valley
    with sign changes), 'Y' (double ascent or double descent), 'Z' (peak)."""
    word = snake.abs_extended()
    ext = snake.extended()
    i = word.index(j, 1)
    left, right = word[i - 1], word[i + 1]
    if left > j < right:
        return "X" if _changes(ext[i - 1], ext[i]) else "valley0"
    if left < j > right:
        return "Z"
    return "Y"


def _pattern_stat(snake: Snake, x_shift: int, count_peaks: bool) -> int:
    total = 0
    word = tuple(abs(v) for v in snake.window)
    for j in word:
        cls = element_class(snake, j)
        a, b = pattern_counts(word, snake.variant, j)
        if cls == "X":
            total += 2 * (a + b) + x_shift
        elif cls == "Y":
            total += a + b
        elif cls == "Z" and count_peaks:
            total += 1
    return total


def pat_q(snake: Snake) -> int:
    """q-pattern statistic of an S0 snake:
    sum over valleys with sign changes of 2*(13-2 + 2-31) - 1, plus
    sum over double ascents/descents of (13-2 + 2-31)."""
    if snake.variant != "S0":
        raise ValueError("pat_q expects an S0 snake")
    return _pattern_stat(snake, x_shift=-1, count_peaks=False)


def pat_r(snake: Snake) -> int:
    """q-pattern statistic of an S00 snake:
    sum over valleys with sign changes of 2*(13-2 + 2-31 - 1), plus
    sum over double ascents/descents of (13-2 + 2-31), plus the number
    of peaks."""
    if snake.variant != "S00":
        raise ValueError("pat_r expects an S00 snake")
    return _pattern_stat(snake, x_shift=-2, count_peaks=True)


def _lambda_steps(snake: Snake, offset: int) -> WeightedPath:
    """Shared body of the two snake-to-path encodings.

    offset 0 encodes an S0 snake of size n as n steps; offset 1 encodes an
    S00 snake of size n+1 as n steps (the largest element is skipped).  The
    step for element j is U at a valley, L at a double ascent, W at a double
    descent and D at a peak; exponents are produced by the block profile,
    shifted by the offset.  Step heights and exponent ranges are asserted
    against the block counts as the path is built.
    """
    word = snake.abs_extended()
    ext = snake.extended()
    profile = block_profile(tuple(abs(v) for v in snake.window), snake.variant)
    alpha, beta = profile.alpha, profile.beta
    pos = {word[i]: i for i in range(1, len(word) - 1)}
    n_steps = snake.size() - offset
    steps = []
    weights = []
    height = 0
    for j in range(1, n_steps + 1):
        i = pos[j]
        left, right = word[i - 1], word[i + 1]
        a, b = alpha[j], beta[j]
        assert height == alpha[j - 1] - 1 - offset, snake.text()
        if left > j < right:
            steps.append("U")
            if _changes(ext[i - 1], ext[i]):
                weights.append(Monomial(1, 0, 2, b + 2 * a - 3 - 2 * offset))
            else:
                weights.append(Monomial(1, 0, 0, b - offset))
            assert offset <= b <= height + offset
            height += 1
        elif left < j < right:
            steps.append("L")
            weights.append(Monomial(1, 0, 1, b + a - 1 - offset))
            assert offset <= b <= height + offset
        elif left > j > right:
            steps.append("W")
            weights.append(Monomial(1, 0, 1, b + a - 1 - offset))
            assert height >= 1 - offset and 0 <= b <= height - 1 + offset
        else:
            steps.append("D")
            weights.append(Monomial(1, 0, 0, b))
            assert height >= 1 and 0 <= b <= height - 1 + offset
            height -= 1
    assert height == 0
    return WeightedPath(tuple(steps), tuple(weights))


def lambda1(snake: Snake) -> WeightedPath:
    """Encode an S0 snake of size n as a scheme-TSTAR path of length n.

    The weight collects t^cs(snake) q^(2-31 + pat_q)."""
    if snake.variant != "S0":
        raise ValueError("lambda1 expects an S0 snake")
    path = _lambda_steps(snake, offset=0)
    assert in_family("TSTAR", path), (snake.text(), path.text())
    return path


def lambda2(snake: Snake) -> WeightedPath:
    """Encode an S00 snake of size n+1 as a scheme-T path of length n.

    The weight collects t^cs(snake) q^(2-31 + pat_r - n - 1)."""
    if snake.variant != "S00":
        raise ValueError("lambda2 expects an S00 snake")
    if snake.size() < 1:
        raise ValueError("lambda2 needs a snake of size >= 1")
    path = _lambda_steps(snake, offset=1)
    assert in_family("T", path), (snake.text(), path.text())
    return path


def _rebuild_word(path: WeightedPath, offset: int) -> tuple[list[int], list[int]]:
    """Run the block-insertion reconstruction shared by the two decodings.

    Returns the completed boundary-extended absolute word (largest element
    placed) and the per-element sign-change counts read off the step weights.
    """
    heights = path.heights()
    n = len(path)
    blocks: list[list[int]] = [[0], [0]] if offset else [[0]]
    cs: list[int] = []

    def insert_new_block(ell: int, j: int) -> None:
        if not 0 <= ell <= len(blocks) - 1:
            raise ValueError(f"malformed path: block index {ell} out of range")
        blocks.insert(len(blocks) - ell, [j])

    def append_to_block(ell: int, j: int, at_left: bool) -> None:
        if not 0 <= ell <= len(blocks) - 1:
            raise ValueError(f"malformed path: block index {ell} out of range")
        block = blocks[len(blocks) - 1 - ell]
        block.insert(0, j) if at_left else block.append(j)

    def merge_blocks(ell: int, j: int) -> None:
        if not 0 <= ell <= len(blocks) - 2:
            raise ValueError(f"malformed path: block index {ell} out of range")
        right = blocks.pop(len(blocks) - 1 - ell)
        blocks[len(blocks) - 1 - ell].extend([j, *right])

    for j in range(1, n + 1):
        step = path.steps[j - 1]
        w = path.weights[j - 1]
        d, h = w.eq, heights[j - 1]
        cs.append(w.et)
        if step == "U":
            # both decodings: for a sign-change valley d = beta + 2*alpha
            # with different constants, but d - 2h - 1 is beta either way
            ell = d + offset if w.et == 0 else d - 2 * h - 1
            insert_new_block(ell, j)
        elif step in ("L", "W"):
            ell = d - h
            append_to_block(ell, j, at_left=(step == "W"))
        else:  # D
            merge_blocks(d, j)
    expected_blocks = 2 if offset else 1
    if len(blocks) != expected_blocks:
        raise ValueError(f"malformed path: {len(blocks)} blocks remain")
    if offset:
        word = blocks[0] + [n + 1] + blocks[1]
        cs.append(0)  # the largest element is always a peak
    else:
        word = blocks[0]
    return word, cs


def lambda1_inv(path: WeightedPath) -> Snake:
    """Decode a scheme-TSTAR path of length n into its S0 snake."""
    if not in_family("TSTAR", path):
        raise ValueError(f"path is not in scheme TSTAR: {path.text()!r}")
    word, cs = _rebuild_word(path, offset=0)
    return arnold_recover(tuple(word[1:]), cs, "S0")


def lambda2_inv(path: WeightedPath) -> Snake:
    """Decode a scheme-T path of length n into its S00 snake of size n+1."""
    if not in_family("T", path):
        raise ValueError(f"path is not in scheme T: {path.text()!r}")
    word, cs = _rebuild_word(path, offset=1)
    return arnold_recover(tuple(word[1:-1]), cs, "S00")


def snake_enumerator(n: int, which: str) -> Poly:
    """Direct snake sums: for 'Q', sum of t^cs q^(2-31 + pat_q) over the S0
    snakes of size n; for 'R', sum of t^cs q^(2-31 + pat_r - n - 1) over the
    S00 snakes of size n+1."""
    acc: dict[Key, int] = {}
    if which == "Q":
        for snake in generate_snakes(n, "S0"):
            word = tuple(abs(v) for v in snake.window)
            e = two_thirty_one_total(word, "S0") + pat_q(snake)
            key = (0, sign_changes(snake), e)
            acc[key] = acc.get(key, 0) + 1
    elif which == "R":
        for snake in generate_snakes(n + 1, "S00"):
            word = tuple(abs(v) for v in snake.window)
            e = two_thirty_one_total(word, "S00") + pat_r(snake) - n - 1
            key = (0, sign_changes(snake), e)
            acc[key] = acc.get(key, 0) + 1
    else:
        raise ValueError(f"which must be 'Q' or 'R', got {which!r}")
    return Poly(acc)
