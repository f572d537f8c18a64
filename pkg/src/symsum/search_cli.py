"""Command line interface: exact sums, balance classification, solution and
class tables, exhaustive balanced-perturbation searches, and verification of
the structural families.

Exit codes: 0 on success, 1 when a verification or expectation fails, 2 on
usage errors.  The environment variable SYMSUM_THREADS caps worker threads
(default 1); output is byte-identical regardless of thread count.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from pathlib import Path

from .balance import (
    BalanceStatus,
    VerificationError,
    classify_profile,
    luca_szalay_gap,
    periodic_propagation,
    singmaster_gap,
    verify_even_linear_family,
    verify_x1_family,
)
from .boolean_core import WeightProfile, anf_parse, anf_to_function, weight_profile
from .diophantine import (
    BudgetExceeded,
    SolutionVector,
    canonical_key,
    class_enumeration_metric,
    count_classes,
    count_solutions,
    direct_enumeration_metric,
    enumerate_classes,
    gamma_via_integral,
)
from .expsum import PerturbedSpec, SymmetricSpec, exp_sum_symmetric

DEFAULT_GAMMA_BUDGET = 3.2e8
DEFAULT_OMEGA_BUDGET = 1.5e8
CHECKPOINT_EVERY = 10 ** 6

X1_PROFILE = (1, -1)
X1X2_PROFILE = (1, -2, 1)

# Verified sporadic witness vectors (presentation scale, indices 0..7) for the
# single-flip perturbation on 8 variables, keyed by degree set.
SPORADIC_WITNESSES_N8_X1 = {
    (3, 6): (0, 0, 1, -1, 0, 1, -1, 0),
    (1, 2, 6): (1, 0, -1, 0, 1, -1, 1, -1),
    (1, 5, 6): (1, -1, 1, -1, 0, 1, 0, -1),
    (2, 3, 5, 6): (0, 1, -1, 0, 1, -1, 0, 0),
    (1, 4, 7): (1, -1, 1, 0, -1, 1, 0, -1),
    (2, 3, 4, 7): (0, 1, -1, 1, 0, -1, 0, 0),
    (3, 4, 5, 7): (0, 0, 1, 0, -1, 1, -1, 0),
    (1, 2, 4, 5, 7): (1, 0, -1, 1, 0, -1, 1, -1),
}

# Same for the two-flip perturbation on 9 variables.
SPORADIC_WITNESSES_N9_X1X2 = {
    (3, 6): (0, 0, 1, -1, 0, 1, -1, 0),
    (3, 7): (0, -1, 2, -1, 0, 0, 0, 0),
    (6, 7): (0, 0, 0, 0, -1, 2, -1, 0),
    (1, 3, 7): (2, -1, 0, -1, 2, -2, 2, -2),
    (1, 4, 7): (2, -2, 1, 1, -2, 1, 1, -2),
    (1, 6, 7): (2, -2, 2, -2, 1, 0, 1, -2),
    (1, 2, 3, 7): (1, 0, 1, -2, 1, 1, -1, -1),
    (1, 2, 4, 7): (1, 1, -2, 2, -1, 0, 0, -1),
    (1, 2, 6, 7): (1, 1, -1, -1, 2, -1, 0, -1),
    (1, 3, 4, 6, 7): (2, -1, -1, 2, -1, -1, 2, -2),
    (1, 2, 3, 4, 6, 7): (1, 0, 0, 1, -2, 2, -1, -1),
    (5, 8): (0, 0, 0, -1, 2, -2, 1, 0),
    (2, 5, 8): (-1, 1, 1, -2, 1, 1, -2, 1),
    (3, 4, 5, 8): (0, -1, 1, 1, -2, 1, 0, 0),
    (3, 5, 6, 8): (0, -1, 2, -2, 1, 0, 0, 0),
    (4, 5, 6, 8): (0, 0, -1, 2, -1, -1, 1, 0),
    (2, 3, 4, 5, 8): (-1, 2, -2, 2, -1, 0, -1, 1),
    (2, 3, 5, 6, 8): (-1, 2, -1, -1, 2, -1, -1, 1),
    (2, 4, 5, 6, 8): (-1, 1, 0, 1, -2, 2, -2, 1),
}


def _thread_count() -> int:
    raw = os.environ.get("SYMSUM_THREADS", "")
    try:
        t = int(raw)
    except ValueError:
        t = 1
    return max(1, t)


def _parallel_map(fn, items):
    """Order-preserving map, fanned out when SYMSUM_THREADS allows."""
    items = list(items)
    t = min(_thread_count(), len(items)) if items else 1
    if t <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=t) as ex:
        return list(ex.map(fn, items))


def _parse_range(text: str) -> list[int]:
    """Parse '5' or '2..10' into a list of integers."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        a, b = int(lo), int(hi)
        if b < a:
            raise ValueError(f"empty range {text!r}")
        return list(range(a, b + 1))
    return [int(text)]


def _parse_degrees(text: str) -> SymmetricSpec:
    return SymmetricSpec(tuple(int(p) for p in text.replace(" ", "").split(",") if p))


def _parse_profile(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.replace(" ", "").split(",") if p)


def _perturbation_from_args(args) -> tuple[str, WeightProfile]:
    """Build (descriptor, profile) from --anf/--profile flags; default empty."""
    if getattr(args, "anf", None) and getattr(args, "profile", None):
        raise SystemExit2("give either --anf or --profile, not both")
    if getattr(args, "anf", None):
        expr = anf_parse(args.anf)
        j = args.vars if getattr(args, "vars", None) else expr.max_index
        if j == 0:
            raise SystemExit2("constant expressions carry no variables; use --profile")
        f = anf_to_function(expr, j)
        return f"anf:{expr}", weight_profile(f)
    if getattr(args, "profile", None):
        values = _parse_profile(args.profile)
        return f"profile:{','.join(str(v) for v in values)}", WeightProfile(len(values) - 1, values)
    return "f=0", WeightProfile(0, (1,))


class SystemExit2(Exception):
    """Usage error carried up to main for exit code 2."""


# ---------------------------------------------------------------------------
# search campaigns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Campaign:
    """An exhaustive sweep over degree sets and variable counts.

    ``n_convention`` fixes what the n bound limits: "total" bounds the full
    variable count (degree sets range over subsets of 1..k_max with top
    degree below the variable count), "inner" bounds the variable count
    beyond the perturbed block (top degree at most the inner count).
    """

    k_max: int
    n_max: int
    n_convention: str
    perturbations: tuple[tuple[str, tuple[int, ...]], ...]
    sporadic_only: bool = False

    def __post_init__(self) -> None:
        if self.k_max < 1 or self.n_max < 1:
            raise ValueError("bounds must be positive")
        if self.n_convention not in ("total", "inner"):
            raise ValueError("n_convention must be 'total' or 'inner'")
        for desc, values in self.perturbations:
            WeightProfile(len(values) - 1, values)

    def to_json(self) -> dict:
        return {
            "k_max": self.k_max,
            "n_max": self.n_max,
            "n_convention": self.n_convention,
            "perturbations": [
                {"descriptor": d, "profile": list(v)} for d, v in self.perturbations
            ],
            "sporadic_only": self.sporadic_only,
        }

    def digest(self) -> str:
        return hashlib.sha256(
            json.dumps(self.to_json(), sort_keys=True).encode()
        ).hexdigest()[:16]

    def n_totals(self, top_degree: int, j: int) -> list[int]:
        """Variable counts scanned for a degree set with the given top degree."""
        if self.n_convention == "total":
            lo = max(top_degree + 1, j + 1)
            return list(range(lo, self.n_max + 1))
        lo = max(top_degree, 1)
        return [inner + j for inner in range(lo, self.n_max + 1)]


@dataclass(frozen=True)
class FindingRecord:
    """One balanced case found by a campaign; re-checkable from its fields."""

    n_total: int
    degrees: tuple[int, ...]
    j: int
    perturbation: str
    profile: tuple[int, ...]
    status: str
    witness: tuple[int, ...]
    key: dict

    def to_json(self) -> dict:
        return {
            "n_total": self.n_total,
            "degrees": list(self.degrees),
            "perturbation": self.perturbation,
            "S": 0,
            "status": self.status,
            "witness": list(self.witness),
            "key": self.key,
        }

    def verify(self) -> bool:
        """Re-derive the classification from scratch and compare."""
        verdict = classify_profile(
            SymmetricSpec(self.degrees), WeightProfile(self.j, self.profile), self.n_total
        )
        return (
            verdict.sign_sum == 0
            and verdict.status.value == self.status
            and verdict.witness == self.witness
            and verdict.key is not None
            and verdict.key.to_json() == self.key
        )


def _iter_degree_sets(k_max: int):
    """All nonempty subsets of 1..k_max as ascending tuples, in lex order."""

    def rec(lo: int, prefix: tuple[int, ...]):
        for k in range(lo, k_max + 1):
            cur = prefix + (k,)
            yield cur
            yield from rec(k + 1, cur)

    yield from rec(1, ())


def _parity_masks(k_max: int, width: int) -> list[int]:
    """masks[k] has bit l set exactly when C(l, k) is odd, l < width."""
    return [
        sum(1 << l for l in range(width) if k & ~l == 0) for k in range(k_max + 1)
    ]


@dataclass
class ScanCounters:
    candidates: int = 0
    balanced: int = 0
    trivial: int = 0
    sporadic: int = 0

    def to_json(self) -> dict:
        return dataclasses.asdict(self)

    def add(self, other: "ScanCounters") -> None:
        self.candidates += other.candidates
        self.balanced += other.balanced
        self.trivial += other.trivial
        self.sporadic += other.sporadic


def _scan_degree_sets(campaign: Campaign, degree_sets) -> tuple[ScanCounters, list[FindingRecord]]:
    """Evaluate the campaign over the given degree sets, in order."""
    max_j = max(len(v) - 1 for _, v in campaign.perturbations)
    inner_max = campaign.n_max
    width = inner_max + max_j + 1
    masks = _parity_masks(campaign.k_max, width)
    rows = [[comb(n, l) for l in range(n + 1)] for n in range(inner_max + 1)]
    counters = ScanCounters()
    findings: list[FindingRecord] = []
    profiles = [
        (desc, values, len(values) - 1) for desc, values in campaign.perturbations
    ]
    for degs in degree_sets:
        mask = 0
        for k in degs:
            mask ^= masks[k]
        signs = [1 - 2 * ((mask >> l) & 1) for l in range(width)]
        top = degs[-1]
        deltas = {}
        for desc, values, j in profiles:
            deltas[desc] = [
                sum(c * signs[l + m] for m, c in enumerate(values))
                for l in range(inner_max + 1)
            ]
        n_lists = {j: campaign.n_totals(top, j) for _, _, j in profiles}
        n_all = sorted({n for lst in n_lists.values() for n in lst})
        for n_total in n_all:
            for desc, values, j in profiles:
                if n_total not in n_lists[j] or n_total <= j:
                    continue
                counters.candidates += 1
                inner = n_total - j
                if inner > inner_max:
                    continue
                delta = deltas[desc]
                row = rows[inner]
                s = 0
                for l in range(inner + 1):
                    s += delta[l] * row[l]
                if s != 0:
                    continue
                counters.balanced += 1
                verdict = classify_profile(
                    SymmetricSpec(degs), WeightProfile(j, values), n_total, desc
                )
                if verdict.sign_sum != 0:
                    raise AssertionError("fast scan and classifier disagree")
                if verdict.status is BalanceStatus.SPORADIC:
                    counters.sporadic += 1
                else:
                    counters.trivial += 1
                if campaign.sporadic_only and verdict.status is not BalanceStatus.SPORADIC:
                    continue
                findings.append(
                    FindingRecord(
                        n_total=n_total,
                        degrees=degs,
                        j=j,
                        perturbation=desc,
                        profile=values,
                        status=verdict.status.value,
                        witness=verdict.witness,
                        key=verdict.key.to_json(),
                    )
                )
    return counters, findings


def run_search(campaign: Campaign, out_path: Path | None = None,
               checkpoint_path: Path | None = None, resume: bool = False,
               log=lambda s: None) -> tuple[ScanCounters, list[FindingRecord]]:
    """Run a campaign with deterministic output and optional checkpointing.

    Degree sets are processed in lex order; with SYMSUM_THREADS > 1 they are
    chunked by leading degree and merged in order, so results and output
    bytes are identical to the serial run.  A checkpoint (protected by the
    campaign digest) is refreshed after at least 10**6 candidates since the
    previous write; resuming skips the recorded number of finished chunks.
    """
    digest = campaign.digest()
    all_sets = list(_iter_degree_sets(campaign.k_max))
    chunks = [
        [t for t in all_sets if t[0] == lead] for lead in range(1, campaign.k_max + 1)
    ]

    start_chunk = 0
    counters = ScanCounters()
    findings: list[FindingRecord] = []
    if resume:
        if checkpoint_path is None or not checkpoint_path.exists():
            raise SystemExit2("--resume needs an existing --checkpoint file")
        state = json.loads(checkpoint_path.read_text())
        if state.get("digest") != digest:
            raise SystemExit2("checkpoint belongs to a different campaign")
        start_chunk = state["chunks_done"]
        counters = ScanCounters(**state["counters"])
        findings = [
            FindingRecord(
                n_total=rec["n_total"],
                degrees=tuple(rec["degrees"]),
                j=len(rec["profile"]) - 1,
                perturbation=rec["perturbation"],
                profile=tuple(rec["profile"]),
                status=rec["status"],
                witness=tuple(rec["witness"]),
                key=rec["key"],
            )
            for rec in state["findings"]
        ]
        log(f"resumed at chunk {start_chunk} with {counters.candidates} candidates done")

    last_checkpoint = counters.candidates
    pending = chunks[start_chunk:]
    results = _parallel_map(lambda ch: _scan_degree_sets(campaign, ch), pending)
    done = start_chunk
    for res_counters, res_findings in results:
        counters.add(res_counters)
        findings.extend(res_findings)
        done += 1
        if checkpoint_path is not None and counters.candidates - last_checkpoint >= CHECKPOINT_EVERY:
            _write_checkpoint(checkpoint_path, digest, done, counters, findings)
            last_checkpoint = counters.candidates

    if checkpoint_path is not None:
        _write_checkpoint(checkpoint_path, digest, done, counters, findings)
    if out_path is not None:
        with out_path.open("w") as fh:
            header = {"type": "campaign", **campaign.to_json(), "digest": digest}
            fh.write(json.dumps(header, sort_keys=True) + "\n")
            for rec in findings:
                fh.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
    return counters, findings


def _write_checkpoint(path: Path, digest: str, chunks_done: int,
                      counters: ScanCounters, findings: list[FindingRecord]) -> None:
    state = {
        "digest": digest,
        "chunks_done": chunks_done,
        "counters": counters.to_json(),
        "findings": [
            {**rec.to_json(), "profile": list(rec.profile)} for rec in findings
        ],
    }
    path.write_text(json.dumps(state, sort_keys=True))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_expsum(args) -> int:
    spec = _parse_degrees(args.degrees)
    desc, profile = _perturbation_from_args(args)
    for n_total in _parse_range(args.n):
        if n_total <= profile.j:
            raise SystemExit2(f"n={n_total} does not exceed the perturbed block j={profile.j}")
        if profile.j == 0 and desc == "f=0":
            s = exp_sum_symmetric(n_total, spec)
        else:
            s = classify_profile(spec, profile, n_total).sign_sum
        if args.json:
            print(json.dumps({"n": n_total, "degrees": list(spec.degrees),
                              "perturbation": desc, "S": s}, sort_keys=True))
        else:
            print(f"{n_total} {s}")
    return 0


def cmd_classify(args) -> int:
    spec = _parse_degrees(args.degrees)
    desc, profile = _perturbation_from_args(args)
    for n_total in _parse_range(args.n):
        if n_total <= profile.j:
            raise SystemExit2(f"n={n_total} does not exceed the perturbed block j={profile.j}")
        verdict = classify_profile(spec, profile, n_total, desc)
        print(json.dumps(verdict.to_record(), sort_keys=True))
    return 0


def _print_grid(title: str, n_values: list[int], j_values: list[int],
                cells: dict[tuple[int, int], int | None], csv: bool) -> None:
    if csv:
        print("j\\n," + ",".join(str(n) for n in n_values))
        for j in j_values:
            row = [
                "*" if cells[(n, j)] is None else str(cells[(n, j)]) for n in n_values
            ]
            print(f"{j}," + ",".join(row))
        return
    widths = [
        max(len(f"n={n}"), max(len("*" if cells[(n, j)] is None else str(cells[(n, j)]))
                               for j in j_values)) + 2
        for n in n_values
    ]
    print(title.ljust(6) + "".join(f"n={n}".rjust(w) for n, w in zip(n_values, widths)))
    for j in j_values:
        row = [
            ("*" if cells[(n, j)] is None else str(cells[(n, j)])).rjust(w)
            for n, w in zip(n_values, widths)
        ]
        print(f"j={j}".ljust(6) + "".join(row))


def cmd_gamma(args) -> int:
    n_values = _parse_range(args.n)
    j_values = _parse_range(args.j)
    budget = args.budget

    def cell(nj: tuple[int, int]) -> int | None:
        n, j = nj
        if direct_enumeration_metric(n, j) > budget:
            return None
        return count_solutions(n, j)

    pairs = [(n, j) for j in j_values for n in n_values]
    values = _parallel_map(cell, pairs)
    cells = dict(zip(pairs, values))
    _print_grid("count", n_values, j_values, cells, args.csv)
    if args.cross_check:
        bad = 0
        for (n, j), v in cells.items():
            if v is None:
                continue
            alt = gamma_via_integral(n, j)
            ok = alt == v
            bad += 0 if ok else 1
            print(f"cross-check n={n} j={j}: direct={v} averaged={alt} "
                  f"{'ok' if ok else 'MISMATCH'}")
        if bad:
            return 1
    return 0


def cmd_omega(args) -> int:
    n_values = _parse_range(args.n)
    j_values = _parse_range(args.j)
    budget = args.budget

    def cell(nj: tuple[int, int]) -> int | None:
        n, j = nj
        if class_enumeration_metric(n, j) > budget:
            return None
        return count_classes(n, j)

    pairs = [(n, j) for j in j_values for n in n_values]
    values = _parallel_map(cell, pairs)
    cells = dict(zip(pairs, values))
    _print_grid("class", n_values, j_values, cells, args.csv)
    if args.classes_out:
        if len(n_values) != 1 or len(j_values) != 1:
            raise SystemExit2("--classes-out needs a single n and a single j")
        n, j = n_values[0], j_values[0]
        with Path(args.classes_out).open("w") as fh:
            for key, rep in sorted(
                enumerate_classes(n, j, budget).items(),
                key=lambda kv: (kv[0].is_zero, kv[0].half, kv[0].center or 0),
            ):
                fh.write(json.dumps({
                    "n": n,
                    "j": j,
                    "key": key.to_json(),
                    "realizable_example": list(rep.entries),
                }, sort_keys=True) + "\n")
    return 0


def _campaign_from_args(args, convention: str) -> Campaign:
    perturbations = []
    for text in args.profile or []:
        values = _parse_profile(text)
        perturbations.append((f"profile:{','.join(map(str, values))}", values))
    for text in args.anf or []:
        expr = anf_parse(text)
        f = anf_to_function(expr, expr.max_index)
        perturbations.append((f"anf:{expr}", tuple(weight_profile(f).values)))
    if not perturbations:
        perturbations.append(("profile:1,-1", X1_PROFILE))
    return Campaign(
        k_max=args.k_max,
        n_max=args.n_max,
        n_convention=convention,
        perturbations=tuple(perturbations),
        sporadic_only=args.sporadic_only,
    )


def cmd_search(args) -> int:
    out_path = Path(args.out) if args.out else None
    checkpoint = Path(args.checkpoint) if args.checkpoint else None
    campaign = _campaign_from_args(args, args.n_convention)
    counters, findings = run_search(
        campaign, out_path, checkpoint, args.resume, log=lambda s: print(s, file=sys.stderr)
    )
    summary = {
        "convention": args.n_convention,
        "candidates": counters.candidates,
        "balanced": counters.balanced,
        "trivial": counters.trivial,
        "sporadic": counters.sporadic,
        "recorded": len(findings),
    }
    print(json.dumps(summary, sort_keys=True))
    if args.expect_sporadic is not None and counters.sporadic != args.expect_sporadic:
        print(
            f"expected {args.expect_sporadic} sporadic findings, "
            f"found {counters.sporadic}"
        )
        return 1
    return 0


def _regenerate_witness_table(n_total: int, profile_values: tuple[int, ...]):
    """Sporadic degree sets and witnesses at one variable count, top degree
    below the variable count."""
    j = len(profile_values) - 1
    profile = WeightProfile(j, profile_values)
    out = {}
    for degs in _iter_degree_sets(n_total - 1):
        verdict = classify_profile(SymmetricSpec(degs), profile, n_total)
        if verdict.status is BalanceStatus.SPORADIC:
            out[degs] = verdict.witness
    return out


def cmd_tables(args) -> int:
    # Every witness in both tables lies in one solution class on 7 points:
    # the class of x_4 = 1, x_5 = -2, x_6 = 1.  Printed reference vectors are
    # class representatives, so rows are compared by class, not verbatim.
    shared_class = canonical_key(SolutionVector(7, (0, 0, 0, 0, 1, -2, 1, 0)))
    failures = 0
    for label, n_total, prof, expected in (
        ("single flip, 8 variables", 8, X1_PROFILE, SPORADIC_WITNESSES_N8_X1),
        ("double flip, 9 variables", 9, X1X2_PROFILE, SPORADIC_WITNESSES_N9_X1X2),
    ):
        inner = n_total - (len(prof) - 1)
        got = _regenerate_witness_table(n_total, prof)
        print(f"# sporadic witnesses: {label}")
        for degs in sorted(got):
            wit = ",".join(str(v) for v in got[degs])
            print(f"degrees=[{','.join(map(str, degs))}] witness=({wit})")
        problems: list[str] = []
        missing = sorted(set(expected) - set(got))
        extra = sorted(set(got) - set(expected))
        if missing or extra:
            problems.append(f"degree sets differ: missing={missing} extra={extra}")
        for degs in sorted(set(got) & set(expected)):
            key = canonical_key(SolutionVector(inner, got[degs]))
            want = canonical_key(SolutionVector(inner, expected[degs]))
            if key != want:
                problems.append(f"{list(degs)}: witness class differs from the reference row")
            elif key != shared_class:
                problems.append(f"{list(degs)}: witness outside the shared solution class")
        if problems:
            for line in problems:
                print(f"MISMATCH {line}")
            failures += 1
        else:
            print(f"ok: {len(got)} rows, every witness in the shared solution class")
    return 1 if failures else 0


def cmd_verify_families(args) -> int:
    checks: list[tuple[str, object]] = []

    def x1_grid():
        for k in range(1, args.x1_k_max + 1):
            verify_x1_family(k, range(1, args.x1_m_max + 1))
        return f"degrees 1..{args.x1_k_max}, steps 1..{args.x1_m_max}"

    def even_grid():
        count = 0
        for l in range(1, args.even_l_max + 1):
            for D in range(1, args.even_d_max + 1):
                for m in range(1, args.even_m_max + 1):
                    if (1 << (l + 1)) * D - 1 <= 2 * m:
                        continue
                    verify_even_linear_family(l, D, m)
                    count += 1
        return f"{count} parameter triples"

    def propagation():
        count = 0
        for k in (2, 3, 4, 5, 8):
            spec = SymmetricSpec((k,))
            base = spec.period + k - 1
            p = PerturbedSpec(spec, None, base, profile_override=WeightProfile(1, X1_PROFILE))
            periodic_propagation(p, args.propagation_m_max)
            count += 1
        return f"{count} base cases, {args.propagation_m_max} steps each"

    def luca_szalay():
        for t in range(3, args.luca_szalay_t_max + 1):
            for signed in (t, -t):
                gap = luca_szalay_gap(signed)
                if gap != 0:
                    raise VerificationError(f"identity gap {gap} at t={signed}")
        v = classify_profile(SymmetricSpec((15,)), WeightProfile(2, X1X2_PROFILE), 25)
        if v.status is not BalanceStatus.SPORADIC:
            raise VerificationError(f"square-index witness instance is {v.status.value}")
        return f"|t| in 3..{args.luca_szalay_t_max}, plus the degree-15 witness instance"

    def singmaster():
        for i in range(1, args.singmaster_i_max + 1):
            gap = singmaster_gap(i)
            if gap != 0:
                raise VerificationError(f"identity gap {gap} at i={i}")
        fixtures = [
            (5, 6, 10, 12, 13),
            (6, 8, 9, 10, 13),
            (6, 7, 11, 12, 14),
            (5, 6, 7, 8, 9, 11, 14),
        ]
        profile = WeightProfile(1, X1_PROFILE)
        # All four witnesses lie in the class of x_4 = x_5 = 1, x_6 = -1 on
        # 14 points.
        row = [0] * 15
        row[4], row[5], row[6] = 1, 1, -1
        want = canonical_key(SolutionVector(14, tuple(row)))
        for degs in fixtures:
            v = classify_profile(SymmetricSpec(degs), profile, 15)
            if v.status is not BalanceStatus.SPORADIC:
                raise VerificationError(
                    f"degrees {list(degs)}: expected sporadic, got {v.status.value}"
                )
            if v.key != want:
                raise VerificationError(
                    f"degrees {list(degs)}: witness outside the expected solution class"
                )
        return f"i in 1..{args.singmaster_i_max}, plus 4 witness instances on 15 variables"

    checks = [
        ("single-flip family", x1_grid),
        ("even-parity family", even_grid),
        ("period propagation", propagation),
        ("adjacent-square identity", luca_szalay),
        ("adjacent-entry identity", singmaster),
    ]
    failures = 0
    for name, fn in checks:
        try:
            detail = fn()
            print(f"ok {name}: {detail}")
        except VerificationError as exc:
            print(f"FAIL {name}: {exc}")
            failures += 1
    return 1 if failures else 0


def cmd_conjecture_scan(args) -> int:
    rows = []
    off_residue = 0
    for k in range(args.k_min, args.k_max + 1):
        spec = SymmetricSpec((k,))
        profile = WeightProfile(1, X1_PROFILE)
        residue = (k - 1) % spec.period
        for n_total in range(2, args.n_max + 1):
            verdict = classify_profile(spec, profile, n_total)
            if not verdict.balanced:
                continue
            on_residue = n_total % spec.period == residue
            if not on_residue:
                off_residue += 1
            rows.append((k, n_total, verdict.status.value, on_residue))
    for k, n_total, status, on_residue in rows:
        marker = "" if on_residue else "  <-- OFF-RESIDUE"
        print(f"k={k} n={n_total} status={status} "
              f"residue={'on' if on_residue else 'off'}{marker}")
    print(
        f"balanced cases: {len(rows)}; off-residue: {off_residue} "
        f"(degrees {args.k_min}..{args.k_max}, n up to {args.n_max})"
    )
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_perturbation_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--anf", help="perturbation as an expression, e.g. 'x1*x2 + x3'")
    p.add_argument("--profile", help="perturbation weight profile, e.g. '1,-2,1'")
    p.add_argument("--vars", type=int, help="variable count for --anf (default: max index)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symsum",
        description="Exact sign sums of symmetric Boolean functions, balance "
        "classification, and bounded Diophantine solution tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expsum", help="exact sign sums")
    p.add_argument("--degrees", required=True, help="comma-separated degree set, e.g. '3,4'")
    p.add_argument("--n", required=True, help="variable count or range, e.g. '1..10'")
    _add_perturbation_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expsum)

    p = sub.add_parser("classify", help="balance classification with witness")
    p.add_argument("--degrees", required=True)
    p.add_argument("--n", required=True)
    _add_perturbation_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gamma", help="solution-count table")
    p.add_argument("--n", required=True, help="range of n, e.g. '1..10'")
    p.add_argument("--j", required=True, help="range of alphabet levels, e.g. '1..7'")
    p.add_argument("--budget", type=float, default=DEFAULT_GAMMA_BUDGET,
                   help="cells with a larger search space print '*'")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--cross-check", action="store_true",
                   help="recount computed cells through the sign-averaged form")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("omega", help="solution-class table")
    p.add_argument("--n", required=True)
    p.add_argument("--j", required=True)
    p.add_argument("--budget", type=float, default=DEFAULT_OMEGA_BUDGET)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--classes-out", help="write one class per line (single cell only)")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("search", help="exhaustive balanced-perturbation sweep")
    p.add_argument("--k-max", type=int, required=True, help="largest degree")
    p.add_argument("--n-max", type=int, required=True, help="largest variable count")
    p.add_argument("--n-convention", choices=("total", "inner"), default="total",
                   help="what --n-max bounds (default: total)")
    p.add_argument("--profile", action="append", help="perturbation profile (repeatable)")
    p.add_argument("--anf", action="append", help="perturbation expression (repeatable)")
    p.add_argument("--sporadic-only", action="store_true")
    p.add_argument("--out", help="write findings as JSON lines")
    p.add_argument("--checkpoint", help="checkpoint file for resumable runs")
    p.add_argument("--resume", action="store_true")
    p.add_argument("--expect-sporadic", type=int,
                   help="fail (exit 1) unless the sporadic count equals this")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-families", help="verify structural balanced families")
    p.add_argument("--x1-k-max", type=int, default=16)
    p.add_argument("--x1-m-max", type=int, default=4)
    p.add_argument("--even-l-max", type=int, default=3)
    p.add_argument("--even-d-max", type=int, default=4)
    p.add_argument("--even-m-max", type=int, default=2)
    p.add_argument("--propagation-m-max", type=int, default=3)
    p.add_argument("--luca-szalay-t-max", type=int, default=12)
    p.add_argument("--singmaster-i-max", type=int, default=6)
    p.set_defaults(func=cmd_verify_families)

    p = sub.add_parser("tables", help="regenerate the sporadic witness tables")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("conjecture-scan", help="scan single-degree single-flip balance")
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(func=cmd_conjecture_scan)

    return parser


def _load_config(path: str) -> list[str]:
    """Turn key=value lines into long flags (bare flags use true/false)."""
    flags: list[str] = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SystemExit2(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        flag = "--" + key.strip().replace("_", "-")
        value = value.strip()
        if value.lower() == "true":
            flags.append(flag)
        elif value.lower() == "false":
            continue
        else:
            flags.extend([flag, value])
    return flags


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        config_flags: list[str] = []
        while argv and argv[0] == "--config":
            if len(argv) < 2:
                raise SystemExit2("--config needs a file path")
            config_flags.extend(_load_config(argv[1]))
            argv = argv[2:]
        if config_flags:
            if not argv:
                raise SystemExit2("--config needs a subcommand")
            explicit = {tok.split("=", 1)[0] for tok in argv[1:] if tok.startswith("--")}
            merged: list[str] = []
            skip_value = False
            for i, tok in enumerate(config_flags):
                if skip_value:
                    skip_value = False
                    continue
                if tok in explicit:
                    nxt = config_flags[i + 1] if i + 1 < len(config_flags) else ""
                    skip_value = not nxt.startswith("--") and i + 1 < len(config_flags)
                    continue
                merged.append(tok)
            argv = [argv[0]] + merged + argv[1:]
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


def console_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_entry()
