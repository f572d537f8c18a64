"""Balance classification of perturbed symmetric functions.

A perturbed symmetric function is balanced when its sign sum vanishes; the
witness is then the periodic weight vector laid along the binomial row, a
solution of the bounded Diophantine equation.  Balanced cases split into the
trivial classes (antisymmetric or alternating witnesses, present for
structural reasons at predictable indices) and sporadic ones.  For each
residue of the inner variable count modulo the period there is also an
exact criterion deciding whether every sufficiently large index with that
residue is balanced.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from math import comb

from .boolean_core import BooleanFunction, WeightProfile
from .diophantine import FoldedKey, SolutionVector, canonical_key, is_trivial_solution
from .expsum import (
    PerturbedSpec,
    SymmetricSpec,
    delta_vector,
    exp_sum_perturbation,
)


class VerificationError(RuntimeError):
    """A structurally guaranteed balance property failed to verify."""


class BalanceStatus(str, Enum):
    NOT_BALANCED = "not_balanced"
    TRIVIAL = "trivial"
    SPORADIC = "sporadic"


@dataclass(frozen=True)
class BalanceVerdict:
    """Outcome of classifying one perturbed symmetric function.

    ``witness`` holds the presentation-scale weight vector (halved for j >= 1)
    along indices 0..inner_n when the function is balanced; ``key`` is its
    canonical equivalence-class key.
    """

    n_total: int
    degrees: tuple[int, ...]
    j: int
    perturbation: str
    sign_sum: int
    status: BalanceStatus
    witness: tuple[int, ...] | None
    key: FoldedKey | None

    @property
    def balanced(self) -> bool:
        return self.status is not BalanceStatus.NOT_BALANCED

    @property
    def inner_n(self) -> int:
        return self.n_total - self.j

    def raw_witness(self) -> tuple[int, ...] | None:
        """Witness at the raw (unhalved) scale."""
        if self.witness is None:
            return None
        if self.j == 0:
            return self.witness
        return tuple(2 * w for w in self.witness)

    def to_record(self) -> dict:
        return {
            "n_total": self.n_total,
            "degrees": list(self.degrees),
            "perturbation": self.perturbation,
            "S": self.sign_sum,
            "status": self.status.value,
            "witness": None if self.witness is None else list(self.witness),
            "key": None if self.key is None else self.key.to_json(),
        }


def classify(p: PerturbedSpec) -> BalanceVerdict:
    """Balance status of a perturbed symmetric function, with witness."""
    s = exp_sum_perturbation(p)
    if s != 0:
        return BalanceVerdict(
            p.n_total, p.spec.degrees, p.j, p.describe(), s,
            BalanceStatus.NOT_BALANCED, None, None,
        )
    dv = delta_vector(p.spec, p.profile)
    scale = 2 if p.j >= 1 else 1
    entries = tuple(dv.at(l) // scale for l in range(p.inner_n + 1))
    vec = SolutionVector(p.inner_n, entries)
    key = canonical_key(vec)
    status = BalanceStatus.TRIVIAL if is_trivial_solution(vec) else BalanceStatus.SPORADIC
    return BalanceVerdict(
        p.n_total, p.spec.degrees, p.j, p.describe(), 0, status, entries, key
    )


def classify_profile(spec: SymmetricSpec, profile: WeightProfile, n_total: int,
                     perturbation: str | None = None) -> BalanceVerdict:
    """Classify with the perturbation given by its weight profile."""
    p = PerturbedSpec(spec, None, n_total, profile_override=profile)
    verdict = classify(p)
    if perturbation is not None:
        verdict = dataclasses.replace(verdict, perturbation=perturbation)
    return verdict


# ---------------------------------------------------------------------------
# residue criterion for eventual balance
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EventualBalanceReport:
    """Result of the residue criterion.

    When ``holds``, every function whose inner variable count is congruent to
    ``residue`` is balanced (for any inner count >= 1); ``z`` is the constant
    in the alternating pair-sum pattern.  When it fails, ``first_failure``
    is the smallest offset a where the pair sum breaks the pattern.
    """

    residue: int
    period: int
    holds: bool
    z: int | None
    first_failure: int | None


def eventual_balance(spec: SymmetricSpec, profile: WeightProfile, residue: int) -> EventualBalanceReport:
    """Check whether delta[a] + delta[residue - a] == (-1)**(a-1) * z for all a."""
    dv = delta_vector(spec, profile)
    period = dv.period
    res = residue % period
    z = -(dv.values[0] + dv.values[res])
    for a in range(period):
        t = dv.values[a] + dv.values[(res - a) % period]
        want = z if a % 2 else -z
        if t != want:
            return EventualBalanceReport(res, period, False, None, a)
    return EventualBalanceReport(res, period, True, z, None)


def eventual_balance_at(spec: SymmetricSpec, profile: WeightProfile, n_total: int) -> EventualBalanceReport:
    """Residue criterion evaluated at the residue of a concrete index."""
    if n_total <= profile.j:
        raise ValueError("need more variables than the perturbation touches")
    return eventual_balance(spec, profile, (n_total - profile.j) % spec.period)


@dataclass(frozen=True)
class WindowEntry:
    """One index of a balance window report.

    ``pre_threshold`` marks indices that are balanced although the residue
    criterion rejects their residue; those can only occur below the (finite
    but not explicitly known) threshold index of the eventual-balance law.
    """

    n_total: int
    inner_n: int
    residue: int
    sign_sum: int
    balanced: bool
    status: BalanceStatus
    criterion_holds: bool
    z: int | None
    pre_threshold: bool


def balance_window_report(spec: SymmetricSpec, profile: WeightProfile,
                          n_total_start: int, n_total_end: int) -> list[WindowEntry]:
    """Classify every index in a window and compare with the residue criterion."""
    if n_total_start <= profile.j:
        raise ValueError("window starts inside the perturbed block")
    reports = {
        res: eventual_balance(spec, profile, res) for res in range(spec.period)
    }
    out: list[WindowEntry] = []
    for n_total in range(n_total_start, n_total_end + 1):
        verdict = classify_profile(spec, profile, n_total)
        res = (n_total - profile.j) % spec.period
        rep = reports[res]
        if rep.holds and not verdict.balanced:
            raise VerificationError(
                f"residue criterion promises balance at n_total={n_total} but sign sum is {verdict.sign_sum}"
            )
        out.append(
            WindowEntry(
                n_total=n_total,
                inner_n=n_total - profile.j,
                residue=res,
                sign_sum=verdict.sign_sum,
                balanced=verdict.balanced,
                status=verdict.status,
                criterion_holds=rep.holds,
                z=rep.z,
                pre_threshold=verdict.balanced and not rep.holds,
            )
        )
    return out


# ---------------------------------------------------------------------------
# structural balanced families
# ---------------------------------------------------------------------------

def parity_function(j: int) -> BooleanFunction:
    """XOR of all j variables."""
    table = 0
    for x in range(1 << j):
        table |= (x.bit_count() & 1) << x
    return BooleanFunction(j, table)


def single_variable() -> BooleanFunction:
    """The function x1 on one variable."""
    return BooleanFunction(1, 0b10)


def verify_x1_family(k: int, m_values) -> list[int]:
    """Verify the single-variable perturbation of degree k is trivially
    balanced at every index 2**r * m + k - 1.

    Returns the verified indices; raises VerificationError on any failure.
    """
    if k < 1:
        raise ValueError("degree must be positive")
    spec = SymmetricSpec((k,))
    f = single_variable()
    out: list[int] = []
    for m in m_values:
        if m < 1:
            raise ValueError("family parameter m must be positive")
        n_total = spec.period * m + k - 1
        verdict = classify(PerturbedSpec(spec, f, n_total))
        if verdict.status is not BalanceStatus.TRIVIAL:
            raise VerificationError(
                f"degree {k}, index {n_total}: expected trivial balance, got "
                f"{verdict.status.value} (sign sum {verdict.sign_sum})"
            )
        out.append(n_total)
    return out


def verify_even_linear_family(l: int, D: int, m: int) -> tuple[int, int]:
    """Verify the two-sided family with an even linear perturbation.

    The XOR of 2m variables added to the degree 2**l set on 2**(l+1)*D - 1
    variables, and to the degree 2**l + 1 set on 2**(l+1)*D variables, are
    both trivially balanced.  All of l, D, m must be positive; with l = 0
    the second member genuinely fails (the XOR of two variables added to the
    degree-2 set on two variables has sign sum 4).  Returns the two verified
    indices.
    """
    if l < 1 or D < 1 or m < 1:
        raise ValueError("need l >= 1, D >= 1, m >= 1")
    j = 2 * m
    n1 = (1 << (l + 1)) * D - 1
    n2 = (1 << (l + 1)) * D
    if n1 <= j:
        raise ValueError("perturbation does not fit below the first index")
    f = parity_function(j)
    for n_total, k in ((n1, 1 << l), (n2, (1 << l) + 1)):
        verdict = classify(PerturbedSpec(SymmetricSpec((k,)), f, n_total))
        if verdict.status is not BalanceStatus.TRIVIAL:
            raise VerificationError(
                f"degree {k}, index {n_total}, parity width {j}: expected trivial "
                f"balance, got {verdict.status.value} (sign sum {verdict.sign_sum})"
            )
    return n1, n2


def periodic_propagation(p: PerturbedSpec, m_max: int) -> list[int]:
    """Verify trivial balance propagates from p.n_total in steps of the period.

    Requires the base case itself to be trivially balanced; returns all
    verified indices including the base.
    """
    if m_max < 0:
        raise ValueError("need m_max >= 0")
    base = classify(p)
    if base.status is not BalanceStatus.TRIVIAL:
        raise VerificationError(
            f"base index {p.n_total} is {base.status.value}, not trivially balanced"
        )
    out = [p.n_total]
    for m in range(1, m_max + 1):
        q = dataclasses.replace(p, n_total=p.n_total + m * p.spec.period)
        verdict = classify(q)
        if verdict.status is not BalanceStatus.TRIVIAL:
            raise VerificationError(
                f"propagated index {q.n_total}: expected trivial balance, got "
                f"{verdict.status.value} (sign sum {verdict.sign_sum})"
            )
        out.append(q.n_total)
    return out


# ---------------------------------------------------------------------------
# classical identity families behind sporadic witnesses
# ---------------------------------------------------------------------------

def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError("index must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def luca_szalay_gap(t: int) -> int:
    """Gap of the three-term identity C(m-2, a-2) - 2C(m-2, a-1) + C(m-2, a)
    with m = t*t and a = (t*t + t)/2; zero for every |t| >= 3."""
    if abs(t) < 3:
        raise ValueError("identity requires |t| >= 3")
    m = t * t
    a = (m + t) // 2
    return comb(m - 2, a - 2) - 2 * comb(m - 2, a - 1) + comb(m - 2, a)


def singmaster_parameters(i: int) -> tuple[int, int]:
    """Parameters (n, k) of the i-th two-adjacent-entries coincidence."""
    if i < 1:
        raise ValueError("index must be positive")
    n = fibonacci(2 * i + 2) * fibonacci(2 * i + 3) - 1
    k = fibonacci(2 * i) * fibonacci(2 * i + 3) - 1
    return n, k


def singmaster_gap(i: int) -> int:
    """Gap of C(n, k) + C(n, k+1) - C(n, k+2) at the i-th coincidence; zero."""
    n, k = singmaster_parameters(i)
    return comb(n, k) + comb(n, k + 1) - comb(n, k + 2)
