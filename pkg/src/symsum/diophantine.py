"""Integer solutions of sum over l of x_l * C(n, l) = 0 over bounded alphabets.

A balanced perturbed symmetric function on n + j variables hands its witness
to this equation: the periodic weight vector, written at presentation scale,
is a solution with entries in the level-j alphabet Gamma_j = {x : |x| <=
2**(j-1)} (level 0 uses {-1, 1}).  Solutions are compared up to scaling by a
common factor, global sign, and the rearrangements allowed by the symmetry
C(n, l) = C(n, n - l); folding a vector onto its first half captures exactly
those moves, so a normalized folded vector is a canonical class key.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from math import comb, gcd


class BudgetExceeded(RuntimeError):
    """An enumeration was refused because its size metric is over budget."""


@dataclass(frozen=True)
class GammaAlphabet:
    """The level-j entry alphabet: |x| <= 2**(j-1), or {-1, 1} at level 0."""

    j: int

    def __post_init__(self) -> None:
        if self.j < 0:
            raise ValueError("alphabet level must be nonnegative")

    @property
    def bound(self) -> int:
        return 1 if self.j == 0 else 1 << (self.j - 1)

    @property
    def members(self) -> tuple[int, ...]:
        if self.j == 0:
            return (-1, 1)
        b = self.bound
        return tuple(range(-b, b + 1))

    def __contains__(self, x: int) -> bool:
        if self.j == 0:
            return x in (-1, 1)
        return abs(x) <= self.bound

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class SolutionVector:
    """Entries x_0..x_n with sum of x_l * C(n, l) equal to zero."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.n < 1:
            raise ValueError("need n >= 1")
        if len(entries) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} entries, got {len(entries)}")
        acc = sum(x * comb(self.n, l) for l, x in enumerate(entries))
        if acc != 0:
            raise ValueError(f"not a solution: weighted sum is {acc}")

    def in_alphabet(self, alphabet: GammaAlphabet) -> bool:
        return all(x in alphabet for x in self.entries)

    def fold(self) -> tuple[tuple[int, ...], int | None]:
        """Pair sums (x_l + x_{n-l}) for the first half, and the center entry
        when n is even."""
        hl = (self.n + 1) // 2
        half = tuple(self.entries[l] + self.entries[self.n - l] for l in range(hl))
        center = self.entries[self.n // 2] if self.n % 2 == 0 else None
        return half, center


def _normalize_components(comps: tuple[int, ...]) -> tuple[tuple[int, ...], bool]:
    """Divide by the gcd and fix the first nonzero entry positive."""
    if all(c == 0 for c in comps):
        return comps, True
    g = 0
    for c in comps:
        g = gcd(g, c)
        if g == 1:
            break
    scaled = tuple(c // g for c in comps) if g > 1 else comps
    for c in scaled:
        if c:
            if c < 0:
                scaled = tuple(-x for x in scaled)
            break
    return scaled, False


@dataclass(frozen=True)
class FoldedKey:
    """Canonical equivalence-class key: the normalized folded vector.

    ``half`` holds the normalized pair sums, ``center`` the normalized middle
    entry for even n (None for odd n), and ``is_zero`` marks the class of
    vectors folding to zero everywhere.
    """

    n: int
    half: tuple[int, ...]
    center: int | None
    is_zero: bool

    def __post_init__(self) -> None:
        half = tuple(int(c) for c in self.half)
        object.__setattr__(self, "half", half)
        hl = (self.n + 1) // 2
        if len(half) != hl:
            raise ValueError(f"expected {hl} folded entries, got {len(half)}")
        if (self.center is None) != (self.n % 2 == 1):
            raise ValueError("center entry present exactly when n is even")
        comps = half if self.center is None else half + (self.center,)
        if self.is_zero != all(c == 0 for c in comps):
            raise ValueError("zero flag inconsistent with components")
        if not self.is_zero:
            norm, _ = _normalize_components(comps)
            if norm != comps:
                raise ValueError("components are not normalized")
        acc = sum(c * comb(self.n, l) for l, c in enumerate(half))
        if self.center is not None:
            acc += self.center * comb(self.n, self.n // 2)
        if acc != 0:
            raise ValueError("folded components do not satisfy the equation")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "half": list(self.half),
            "center": self.center,
            "zero": self.is_zero,
        }


def canonical_key(v: SolutionVector) -> FoldedKey:
    """Class key of a solution under scaling, sign, and symmetric rearrangement."""
    half, center = v.fold()
    comps = half if center is None else half + (center,)
    norm, zero = _normalize_components(comps)
    if center is None:
        return FoldedKey(v.n, norm, None, zero)
    return FoldedKey(v.n, norm[:-1], norm[-1], zero)


def zero_key(n: int) -> FoldedKey:
    hl = (n + 1) // 2
    return FoldedKey(n, (0,) * hl, 0 if n % 2 == 0 else None, True)


def alternating_key(n: int) -> FoldedKey:
    """Key of the alternating solution (+1, -1, +1, ...)."""
    return canonical_key(SolutionVector(n, tuple((-1) ** l for l in range(n + 1))))


def is_trivial_solution(v: SolutionVector) -> bool:
    """Whether the solution belongs to one of the always-present families.

    For every n the antisymmetric vectors (x_{n-l} = -x_l, center zero when n
    is even) are solutions, and for even n so are the alternating vectors
    ((-1)**l * m).  A solution is trivial when its class key matches one of
    those; for odd n the alternating family folds into the antisymmetric one.
    """
    key = canonical_key(v)
    if key.is_zero:
        return True
    return v.n % 2 == 0 and key == alternating_key(v.n)


class TrivialForm(str, Enum):
    """Structural shapes of the always-present solution families."""

    ANTISYMMETRIC_ODD = "antisymmetric_odd"
    ALTERNATING = "alternating"
    ANTISYMMETRIC_EVEN = "antisymmetric_even_center_zero"


def trivial_forms(v: SolutionVector) -> frozenset[TrivialForm]:
    """Structural trivial shapes the entries literally match (possibly none).

    The check is syntactic, not up-to-equivalence: x_{n-l} = -x_l throughout
    (which forces a zero center when n is even), or x_l = (-1)**l * m for a
    fixed m.  A vector can match several shapes at once -- the zero vector
    matches every shape its length allows -- and a vector can match none yet
    still satisfy is_trivial_solution, which compares class keys instead.
    """
    e = v.entries
    n = v.n
    out: set[TrivialForm] = set()
    if all(e[n - l] == -e[l] for l in range(n + 1)):
        out.add(
            TrivialForm.ANTISYMMETRIC_ODD
            if n % 2 == 1
            else TrivialForm.ANTISYMMETRIC_EVEN
        )
    if all(e[l] == (-1) ** l * e[0] for l in range(n + 1)):
        out.add(TrivialForm.ALTERNATING)
    return frozenset(out)


def trivial_count(n: int, j: int) -> int:
    """Closed-form count of trivial solutions over the level-j alphabet."""
    if n < 1 or j < 0:
        raise ValueError("need n >= 1 and j >= 0")
    size = (1 << j) + 1
    if n % 2 == 1:
        return size ** ((n + 1) // 2)
    return size ** (n // 2) + (1 << j)


def enumerate_trivial_solutions(n: int, j: int):
    """All trivial solutions over the level-j alphabet, deduplicated."""
    if j == 0:
        raise ValueError("level-0 alphabet excludes zero; no trivial vectors")
    members = GammaAlphabet(j).members
    seen: set[tuple[int, ...]] = set()
    if n % 2 == 1:
        hl = (n + 1) // 2
        for combo in itertools.product(members, repeat=hl):
            entries = combo + tuple(-c for c in reversed(combo))
            if entries not in seen:
                seen.add(entries)
                yield SolutionVector(n, entries)
        return
    hl = n // 2
    for combo in itertools.product(members, repeat=hl):
        entries = combo + (0,) + tuple(-c for c in reversed(combo))
        if entries not in seen:
            seen.add(entries)
            yield SolutionVector(n, entries)
    for m in members:
        entries = tuple((-1) ** l * m for l in range(n + 1))
        if entries not in seen:
            seen.add(entries)
            yield SolutionVector(n, entries)


# ---------------------------------------------------------------------------
# exact counting and enumeration of all solutions
# ---------------------------------------------------------------------------

def direct_enumeration_metric(n: int, j: int) -> int:
    """Size of the raw search space for full enumeration."""
    return len(GammaAlphabet(j)) ** (n + 1)


def split_enumeration_metric(n: int, j: int) -> int:
    """Size of the larger half when splitting the positions in two."""
    return len(GammaAlphabet(j)) ** ((n + 2) // 2)


def class_enumeration_metric(n: int, j: int) -> int:
    """Size bound for the folded-space sweep behind class counting."""
    folds = (1 << (j + 1)) + 1
    metric = folds ** ((n + 1) // 2)
    if n % 2 == 0:
        metric *= (1 << j) + 1
    return metric


def gamma_integral_metric(n: int, j: int) -> int:
    """Size of the nonnegative-value space behind the averaged recount."""
    return ((1 << (j - 1)) + 1) ** (n + 1) if j >= 1 else 2 ** (n + 1)


def count_solutions(n: int, j: int) -> int:
    """Number of solutions with entries in the level-j alphabet.

    Runs a forward convolution over the positions, pruning partial sums that
    cannot return to zero; cost is bounded by the number of reachable partial
    sums, not by the raw search space.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    members = GammaAlphabet(j).members
    big = max(abs(x) for x in members)
    weights = [comb(n, l) for l in range(n + 1)]
    suffix = [0] * (n + 2)
    for l in range(n, -1, -1):
        suffix[l] = suffix[l + 1] + big * weights[l]
    cur = {0: 1}
    for l, w in enumerate(weights):
        lim = suffix[l + 1]
        nxt: dict[int, int] = defaultdict(int)
        for s, c in cur.items():
            for x in members:
                s2 = s + x * w
                if -lim <= s2 <= lim:
                    nxt[s2] += c
        cur = nxt
    return cur.get(0, 0)


def enumerate_solutions(n: int, j: int, budget: float | None = None, method: str = "auto"):
    """Yield every solution over the level-j alphabet in lexicographic order.

    ``method`` picks between a pruned depth-first sweep ("direct") and a
    split of the positions into halves with the right half indexed by partial
    sum ("split"); "auto" uses the direct sweep while its metric stays at or
    below the budget and otherwise falls back to the split, refusing with
    BudgetExceeded when both metrics are over.
    """
    if method not in ("auto", "direct", "split"):
        raise ValueError(f"unknown method {method!r}")
    direct_metric = direct_enumeration_metric(n, j)
    split_metric = split_enumeration_metric(n, j)
    if method == "auto":
        cap = budget if budget is not None else 10 ** 7
        if direct_metric <= cap:
            method = "direct"
        elif split_metric <= cap:
            method = "split"
        else:
            raise BudgetExceeded(
                f"direct metric {direct_metric} and split metric {split_metric} both exceed {cap}"
            )
    elif budget is not None:
        metric = direct_metric if method == "direct" else split_metric
        if metric > budget:
            raise BudgetExceeded(f"{method} metric {metric} exceeds budget {budget}")

    members = GammaAlphabet(j).members
    weights = [comb(n, l) for l in range(n + 1)]
    big = max(abs(x) for x in members)

    if method == "direct":
        suffix = [0] * (n + 2)
        for l in range(n, -1, -1):
            suffix[l] = suffix[l + 1] + big * weights[l]

        def walk(depth: int, acc: int, prefix: tuple[int, ...]):
            if depth == n + 1:
                if acc == 0:
                    yield SolutionVector(n, prefix)
                return
            lim = suffix[depth + 1]
            for x in members:
                a2 = acc + x * weights[depth]
                if -lim <= a2 <= lim:
                    yield from walk(depth + 1, a2, prefix + (x,))

        yield from walk(0, 0, ())
        return

    right_len = (n + 1) // 2
    left_len = n + 1 - right_len
    by_sum: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for combo in itertools.product(members, repeat=right_len):
        s = sum(x * w for x, w in zip(combo, weights[left_len:]))
        by_sum[s].append(combo)
    for combo in itertools.product(members, repeat=left_len):
        s = sum(x * w for x, w in zip(combo, weights[:left_len]))
        for tail in by_sum.get(-s, ()):
            yield SolutionVector(n, combo + tail)


# ---------------------------------------------------------------------------
# equivalence classes
# ---------------------------------------------------------------------------

def enumerate_classes(n: int, j: int, budget: float | None = None) -> dict[FoldedKey, SolutionVector]:
    """Map each solution class to one realizable representative.

    Sweeps the folded space directly: pair sums range over |s| <= 2**j, the
    center (even n) over the alphabet, and the first pair sum is forced by
    the equation.  Every in-range folded vector is realizable by splitting
    each pair sum into ceil/floor halves, so the sweep sees exactly the
    classes of actual solutions.
    """
    if n < 1 or j < 0:
        raise ValueError("need n >= 1 and j >= 0")
    if budget is not None and class_enumeration_metric(n, j) > budget:
        raise BudgetExceeded(
            f"class metric {class_enumeration_metric(n, j)} exceeds budget {budget}"
        )
    hl = (n + 1) // 2
    weights = [comb(n, l) for l in range(hl)]
    even = n % 2 == 0
    center_w = comb(n, n // 2) if even else 0
    fold_b = 1 << j
    center_b = 1 << (j - 1) if j >= 1 else 1

    # max_tail[i]: largest |contribution| still available from slots i.. plus
    # the center and the forced first entry.
    max_tail = [0] * (hl + 1)
    for i in range(hl - 1, 0, -1):
        max_tail[i] = max_tail[i + 1] + fold_b * weights[i]
    slack = fold_b * weights[0] + (center_b * center_w if even else 0)

    found: dict[tuple, tuple[tuple[int, ...], int | None]] = {}

    def emit(half: tuple[int, ...], center: int | None) -> None:
        comps = half if center is None else half + (center,)
        norm, zero = _normalize_components(comps)
        key = ("Z",) if zero else norm
        if key not in found:
            found[key] = (half, center)

    def walk(idx: int, acc: int, chosen: tuple[int, ...]) -> None:
        if idx == hl:
            if even:
                for c in range(-center_b, center_b + 1):
                    s0 = -(acc + c * center_w)
                    if -fold_b <= s0 <= fold_b:
                        emit((s0,) + chosen, c)
            else:
                s0 = -acc
                if -fold_b <= s0 <= fold_b:
                    emit((s0,) + chosen, None)
            return
        w = weights[idx]
        lim = max_tail[idx + 1] + slack
        for s in range(-fold_b, fold_b + 1):
            a2 = acc + s * w
            if -lim <= a2 <= lim:
                walk(idx + 1, a2, chosen + (s,))

    walk(1, 0, ())

    out: dict[FoldedKey, SolutionVector] = {}
    for half, center in found.values():
        entries = [0] * (n + 1)
        for l, s in enumerate(half):
            entries[l] = (s + 1) // 2
            entries[n - l] = s // 2
        if center is not None:
            entries[n // 2] = center
        rep = SolutionVector(n, tuple(entries))
        out[canonical_key(rep)] = rep
    return out


def count_classes(n: int, j: int, budget: float | None = None) -> int:
    """Number of solution classes over the level-j alphabet."""
    return len(enumerate_classes(n, j, budget))


def gamma_via_integral(n: int, j: int, budget: float | None = None) -> int:
    """Recount the solutions through the sign-averaged nonnegative form.

    Writes each entry as a sign times a value in [0, 2**(j-1)]; averaging the
    indicator of a zero sum over all sign patterns, with weight 2 per nonzero
    value, reproduces the solution count exactly.  Must agree with
    count_solutions; the two follow entirely different routes.
    """
    if n < 1 or j < 1:
        raise ValueError("need n >= 1 and j >= 1")
    if budget is not None and gamma_integral_metric(n, j) > budget:
        raise BudgetExceeded(
            f"integral metric {gamma_integral_metric(n, j)} exceeds budget {budget}"
        )
    bound = 1 << (j - 1)
    weights = [comb(n, i) for i in range(n + 1)]
    total = 0
    # Opposite sign patterns match the same value vectors, so fix the first
    # sign positive and double.
    for pattern in range(1 << n):
        signed = [weights[0]]
        for i in range(n):
            w = weights[i + 1]
            signed.append(-w if (pattern >> i) & 1 else w)
        suffix = [0] * (n + 2)
        for i in range(n, -1, -1):
            suffix[i] = suffix[i + 1] + abs(signed[i]) * bound
        cur = {0: 1}
        for i in range(n + 1):
            lim = suffix[i + 1]
            step = signed[i]
            nxt: dict[int, int] = defaultdict(int)
            for s, c in cur.items():
                if -lim <= s <= lim:
                    nxt[s] += c
                for x in range(1, bound + 1):
                    s2 = s + x * step
                    if -lim <= s2 <= lim:
                        nxt[s2] += 2 * c
            cur = nxt
        total += cur.get(0, 0)
    q, rem = divmod(2 * total, 1 << (n + 1))
    if rem:
        raise ArithmeticError("sign-averaged recount did not divide evenly")
    return q
