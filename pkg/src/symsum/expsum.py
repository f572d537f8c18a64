"""Exact sign sums of symmetric Boolean functions and their perturbations.

For a set of elementary degrees K = [k1 < ... < ks] acting on n variables,
the sign sum equals sum over l = 0..n of sign(l) * C(n, l), where sign(l) is
(-1) raised to C(l, k1) + ... + C(l, ks).  The sign pattern repeats with
period 2**r where r is one more than the bit length exponent of ks, so a
perturbation F on the first j variables only contributes through a periodic
integer vector delta of that period:

    sign_sum(K on n+j variables, perturbed by F)
        = sum over l = 0..n of delta[l mod 2**r] * C(n, l).

All arithmetic is exact (Python integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

from .boolean_core import BooleanFunction, WeightProfile, weight_profile


def binomial(n: int, l: int) -> int:
    """C(n, l), zero outside 0 <= l <= n."""
    if l < 0 or l > n:
        return 0
    return comb(n, l)


def binom_parity(l: int, k: int) -> int:
    """C(l, k) mod 2: one exactly when the bits of k are a subset of l's."""
    if l < 0 or k < 0:
        return 0
    return 1 if k & ~l == 0 else 0


@dataclass(frozen=True)
class SymmetricSpec:
    """A strictly increasing tuple of elementary symmetric degrees."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degs = tuple(int(k) for k in self.degrees)
        object.__setattr__(self, "degrees", degs)
        if not degs:
            raise ValueError("at least one degree is required")
        if any(k < 1 for k in degs):
            raise ValueError("degrees must be positive")
        if any(a >= b for a, b in zip(degs, degs[1:])):
            raise ValueError("degrees must be strictly increasing")

    @classmethod
    def of(cls, *degrees: int) -> "SymmetricSpec":
        return cls(tuple(degrees))

    @property
    def top_degree(self) -> int:
        return self.degrees[-1]

    @property
    def r(self) -> int:
        """Smallest r with 2**r strictly above the top degree."""
        return self.top_degree.bit_length()

    @property
    def period(self) -> int:
        """Period 2**r of the sign pattern."""
        return 1 << self.r

    def sign(self, l: int) -> int:
        """(-1) to the sum of C(l, k) over the degrees, for l >= 0."""
        p = 0
        for k in self.degrees:
            p ^= binom_parity(l, k)
        return -1 if p else 1

    @cached_property
    def sign_row(self) -> tuple[int, ...]:
        """One full period of the sign pattern, index 0 first."""
        return tuple(self.sign(l) for l in range(self.period))

    def __str__(self) -> str:
        return "[" + ",".join(str(k) for k in self.degrees) + "]"


def exp_sum_symmetric(n: int, spec: SymmetricSpec) -> int:
    """Sign sum of the degree set on n variables, n >= 1."""
    if n < 1:
        raise ValueError("need at least one variable")
    row = spec.sign_row
    mask = spec.period - 1
    return sum(row[l & mask] * comb(n, l) for l in range(n + 1))


@dataclass(frozen=True)
class DeltaVector:
    """Periodic weights that a perturbation induces on the binomial row.

    ``values[a]`` is sum over m of profile[m] * sign(a + m); the vector is
    2**r-periodic.  For j >= 1 every entry is even with absolute value at
    most 2**j, so a halved view is available; for j = 0 entries are odd.
    """

    j: int
    r: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if self.j < 0:
            raise ValueError("variable count must be nonnegative")
        if len(vals) != self.period:
            raise ValueError(f"expected {self.period} entries, got {len(vals)}")
        bound = 1 << self.j
        for a, v in enumerate(vals):
            if abs(v) > bound:
                raise ValueError(f"entry {a} exceeds bound {bound}")
            if self.j >= 1 and v % 2:
                raise ValueError(f"entry {a} must be even when j >= 1")
            if self.j == 0 and v % 2 == 0:
                raise ValueError(f"entry {a} must be odd when j = 0")

    @property
    def period(self) -> int:
        return 1 << self.r

    def at(self, l: int) -> int:
        """Entry at any index, folded into the period."""
        return self.values[l & (self.period - 1)]

    def halved(self) -> tuple[int, ...]:
        """values / 2, the scale used for presentation; requires j >= 1."""
        if self.j < 1:
            raise ValueError("halved view requires at least one perturbed variable")
        return tuple(v // 2 for v in self.values)


def delta_vector(spec: SymmetricSpec, profile: WeightProfile) -> DeltaVector:
    """Periodic weight vector of a perturbation given by its weight profile."""
    period = spec.period
    row = spec.sign_row
    mask = period - 1
    values = tuple(
        sum(c * row[(a + m) & mask] for m, c in enumerate(profile.values))
        for a in range(period)
    )
    return DeltaVector(profile.j, spec.r, values)


def exp_sum_profile(spec: SymmetricSpec, profile: WeightProfile, inner_n: int) -> int:
    """Sign sum with the perturbation folded in; inner_n counts the variables
    beyond the perturbed block (inner_n >= 0)."""
    if inner_n < 0:
        raise ValueError("inner variable count must be nonnegative")
    dv = delta_vector(spec, profile)
    mask = dv.period - 1
    vals = dv.values
    return sum(vals[l & mask] * comb(inner_n, l) for l in range(inner_n + 1))


@dataclass(frozen=True)
class PerturbedSpec:
    """A symmetric degree set on n_total variables, XORed with a perturbation
    touching only the first j variables.

    The perturbation is either an explicit function ``f`` (then j = f.j) or,
    when ``f`` is None, the identity perturbation given directly by
    ``profile_override`` (defaults to the empty perturbation on 0 variables).
    """

    spec: SymmetricSpec
    f: BooleanFunction | None
    n_total: int
    profile_override: WeightProfile | None = None

    def __post_init__(self) -> None:
        if self.f is not None and self.profile_override is not None:
            raise ValueError("give either a function or a profile, not both")
        if self.n_total <= self.j:
            raise ValueError("need more variables than the perturbation touches")

    @property
    def j(self) -> int:
        if self.f is not None:
            return self.f.j
        if self.profile_override is not None:
            return self.profile_override.j
        return 0

    @property
    def inner_n(self) -> int:
        return self.n_total - self.j

    @cached_property
    def profile(self) -> WeightProfile:
        if self.f is not None:
            return weight_profile(self.f)
        if self.profile_override is not None:
            return self.profile_override
        return WeightProfile(0, (1,))

    def describe(self) -> str:
        parts = [f"n={self.n_total}", f"degrees={self.spec}"]
        if self.f is not None:
            parts.append(f"f=hex:{self.f.to_hex()}")
        elif self.profile_override is not None:
            parts.append(f"profile={list(self.profile_override.values)}")
        else:
            parts.append("f=0")
        return " ".join(parts)


def exp_sum_perturbation(p: PerturbedSpec) -> int:
    """Sign sum of the perturbed function, via the periodic weight vector."""
    return exp_sum_profile(p.spec, p.profile, p.inner_n)


def exp_sum_perturbation_decomposed(p: PerturbedSpec) -> int:
    """Sign sum via the weight-layer decomposition.

    Each weight layer m of the perturbation contributes profile[m] times the
    sign sum on the inner variables of the XOR of shifted degree sets
    {k - i : C(m, i) odd, k in degrees}; degree drops below zero vanish and
    degree zero flips the sign.  Must agree with exp_sum_perturbation.
    """
    n = p.inner_n
    total = 0
    for m, c in enumerate(p.profile.values):
        if c == 0:
            continue
        flips = 0
        degs: set[int] = set()
        for i in range(m + 1):
            if not binom_parity(m, i):
                continue
            for k in p.spec.degrees:
                d = k - i
                if d < 0:
                    continue
                if d == 0:
                    flips ^= 1
                elif d in degs:
                    degs.remove(d)
                else:
                    degs.add(d)
        if degs:
            inner = exp_sum_symmetric(n, SymmetricSpec(tuple(sorted(degs))))
            total += c * (-inner if flips else inner)
        else:
            total += c * (-1 if flips else 1) * (1 << n)
    return total


def _shift_degrees(k: int, t: int, offset: int) -> SymmetricSpec:
    """Degrees {k + offset - i : C(t, i) odd}, all required positive."""
    degs = sorted(k + offset - i for i in range(t + 1) if binom_parity(t, i))
    if degs and degs[0] < 1:
        raise ValueError("shifted degree set leaves the positive range")
    return SymmetricSpec(tuple(degs))


def shifted_identity_gap(k: int, t: int, profile: WeightProfile, n: int) -> int:
    """Difference between the two sides of the degree-shift identity.

    Left side: the perturbed sign sum for degrees {2k - i : C(t, i) odd} on
    n inner variables.  Right side: the same for degrees {2k + 1 - i} on
    n + 1 inner variables.  The gap vanishes for every n >= 1 exactly when
    the perturbation is balanced; at n = 0 the gap is minus the sign sum of
    the perturbation itself.
    """
    if k < 1 or t < 0:
        raise ValueError("need k >= 1 and t >= 0")
    if 2 * k - t < 1:
        raise ValueError("shift width t too large for k")
    if n < 0:
        raise ValueError("inner variable count must be nonnegative")
    low = _shift_degrees(2 * k, t, 0)
    high = _shift_degrees(2 * k, t, 1)
    left = exp_sum_profile(low, profile, n)
    right = exp_sum_profile(high, profile, n + 1)
    return left - right
