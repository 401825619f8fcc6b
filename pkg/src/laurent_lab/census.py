"""Census over the admissible exponent vectors and their root statistics.

For fixed (k, l, m) the census runs over all (l+1)-tuples of nonnegative
integers a = (a_0, ..., a_l) with sum_j (j+m) a_j = k+m, i.e. every exponent
vector for which m is the admissible pole multiplicity of f^(k) =
prod (f^(j))^(a_j).

Per-tuple root finding never builds the degree-k polynomial.  Two exact
shortcuts (each tested against the full scan on small instances) do the
work:

* roots below k+m: there (x-m)_k vanishes, so p(r) = 0 reduces to
  A(r) = 0 for the degree-l polynomial A; integer roots of A are extracted
  with exact integer arithmetic (isqrt for quadratics, divisor search above).
* roots in [k+m, k+l+2m]: p(r) = 0 is equivalent to A(r) equalling the
  precomputed integer target (-1)^k (r-m)_k / (k+m-1)_(k-l); candidates
  whose target is not an integer are impossible outright.

The tuple space is partitioned by the value of a_l; partitions are
aggregated independently and merged by plain count addition, so the result
is identical no matter how many workers run.
"""

from __future__ import annotations

import csv
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .classify import Classification, classify_with_roots
from .equation import Equation
from .exact import falling
from .indicial import poly_eval


def enumerate_A(k: int, l: int, m: int) -> Iterator[tuple[int, ...]]:
    """All (l+1)-tuples with sum_j (j+m) a_j = k+m, exactly once each.

    Order is lexicographic in (a_l, ..., a_1) ascending, with a_0 determined
    by the residue; this keeps memory at O(1) per tuple and the output
    deterministic.  Tuples with fewer than two factors would be yielded too
    (the tuple family does not itself require d >= 2), though the degree
    balance happens to exclude them.
    """
    if k <= l:
        raise ValueError(f"census needs k > l, got k={k}, l={l}")
    if m < 1 or l < 0:
        raise ValueError(f"census needs m >= 1 and l >= 0, got m={m}, l={l}")
    yield from _enumerate_suffix(k + m, l, m, ())


def _enumerate_suffix(
    remaining: int, j: int, m: int, suffix: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    if j == 0:
        if remaining % m == 0:
            yield (remaining // m, *suffix)
        return
    weight = j + m
    for aj in range(remaining // weight + 1):
        yield from _enumerate_suffix(remaining - weight * aj, j - 1, m, (aj, *suffix))


def count_compositions(c: Sequence[int], k: int) -> int:
    """Exact number of nonnegative integer solutions of sum c_i a_i = k.

    Computed by the one-coin-at-a-time convolution; c needs at least two
    entries, all positive, with c_0 and c_1 coprime (the hypothesis under
    which the count grows like k^l / (l! c_0...c_l)).
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if len(c) < 2:
        raise ValueError("need at least two weights")
    if any(ci < 1 for ci in c):
        raise ValueError("weights must be positive integers")
    if math.gcd(c[0], c[1]) != 1:
        raise ValueError(f"leading weights {c[0]}, {c[1]} must be coprime")
    ways = [0] * (k + 1)
    ways[0] = 1
    for coin in c:
        for total in range(coin, k + 1):
            ways[total] += ways[total - coin]
    return ways[k]


def census_total(k: int, l: int, m: int) -> int:
    """Exact tuple count, without enumerating; scales to very large k."""
    if k <= l:
        raise ValueError(f"census needs k > l, got k={k}, l={l}")
    if l == 0:
        return 1 if (k + m) % m == 0 else 0
    return count_compositions(tuple(range(m, l + m + 1)), k + m)


# ---------------------------------------------------------------------------
# fast exact root profile per tuple


def _t_falling_polys(l: int) -> list[list[int]]:
    """Expanded t(t-1)...(t-j+1) for j = 0..l, ascending coefficients."""
    polys = [[1]]
    for j in range(l):
        prev = polys[-1]
        out = [0] * (len(prev) + 1)
        for i, ci in enumerate(prev):
            out[i] += -j * ci
            out[i + 1] += ci
        polys.append(out)
    return polys


def _a_coeffs_in_t(
    a_vec: Sequence[int], weights: Sequence[int], tfall: list[list[int]]
) -> list[int]:
    """Coefficients of A(m + t) in powers of t, degree <= l."""
    out = [0] * len(a_vec)
    for j, aj in enumerate(a_vec):
        if aj == 0:
            continue
        w = aj * weights[j]
        for i, ci in enumerate(tfall[j]):
            out[i] += w * ci
    return out


def _base_weights(l: int, m: int) -> list[int]:
    return [(-1) ** j * falling(l + m - 1, l - j) for j in range(l + 1)]


def _int_roots_below(coeffs: Sequence[int], hi: int) -> list[int]:
    """Integer roots t of the given polynomial with 0 <= t < hi, exactly.

    Candidates come from the usual degree-wise extraction (linear solve,
    discriminant + isqrt, divisors of the constant term); every candidate is
    re-verified by exact evaluation before it is accepted.
    """
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    if not c:
        raise ValueError("the zero polynomial has no meaningful root set here")
    candidates = set()
    shift = 0
    while c[0] == 0:
        shift += 1
        c.pop(0)
    if shift:
        candidates.add(0)
    deg = len(c) - 1
    if deg == 1:
        b0, b1 = c
        if b0 % b1 == 0:
            candidates.add(-(b0 // b1))
    elif deg == 2:
        b0, b1, b2 = c
        disc = b1 * b1 - 4 * b2 * b0
        if disc >= 0:
            s = math.isqrt(disc)
            if s * s == disc:
                for num in (-b1 + s, -b1 - s):
                    if num % (2 * b2) == 0:
                        candidates.add(num // (2 * b2))
    elif deg >= 3:
        b0 = abs(c[0])
        divisor = 1
        while divisor * divisor <= b0:
            if b0 % divisor == 0:
                for base in (divisor, b0 // divisor):
                    candidates.add(base)
                    candidates.add(-base)
            divisor += 1
    return sorted(
        t for t in candidates if 0 <= t < hi and poly_eval(coeffs, t) == 0
    )


def _large_targets(k: int, l: int, m: int) -> list[tuple[int, int]]:
    """(r, required A(r) value) for each feasible r in [k+m, k+l+2m]."""
    den = falling(k + m - 1, k - l)
    sign = (-1) ** k
    out = []
    for r in range(k + m, k + l + 2 * m + 1):
        num = falling(r - m, k)
        if num % den == 0:
            out.append((r, sign * (num // den)))
    return out


def tuple_roots(a_vec: Sequence[int], k: int, l: int, m: int) -> list[int]:
    """All positive integer roots of p for one census tuple, fast and exact."""
    weights = _base_weights(l, m)
    tfall = _t_falling_polys(l)
    targets = _large_targets(k, l, m)
    return _tuple_roots(a_vec, k, m, weights, tfall, targets)


def _tuple_roots(a_vec, k, m, weights, tfall, targets) -> list[int]:
    ac = _a_coeffs_in_t(a_vec, weights, tfall)
    roots = [t + m for t in _int_roots_below(ac, k)]
    for r, target in targets:
        if poly_eval(ac, r - m) == target:
            roots.append(r)
    return roots


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusRow:
    """One tuple's record: roots split at k+m, their gcd, and the verdict."""

    a: tuple[int, ...]
    roots: tuple[int, ...]
    q: int | None
    small_root_count: int
    large_root_count: int
    label: str


@dataclass(frozen=True)
class CensusSummary:
    k: int
    l: int
    m: int
    total: int
    d_ge_2: int
    no_root: int
    single_root: int
    multi_root: int
    multi_small_root: int
    any_large_root: int
    label_counts: dict[str, int]
    large_root_histogram: dict[int, int]
    max_tuples_per_large_r: int
    asymptotic_ratio: Fraction


def _classify_tuple(a_vec, k, m, roots) -> Classification:
    eq = Equation.from_exponents(k, a_vec)
    return classify_with_roots(eq, m, tuple(roots))


def iter_census_rows(k: int, l: int, m: int) -> Iterator[CensusRow]:
    """Per-tuple records in enumeration order (valid d >= 2 tuples only)."""
    weights = _base_weights(l, m)
    tfall = _t_falling_polys(l)
    targets = _large_targets(k, l, m)
    boundary = k + m
    for a_vec in enumerate_A(k, l, m):
        if sum(a_vec) < 2:
            continue
        roots = _tuple_roots(a_vec, k, m, weights, tfall, targets)
        verdict = _classify_tuple(a_vec, k, m, roots)
        small = sum(1 for r in roots if r < boundary)
        yield CensusRow(
            a=a_vec,
            roots=tuple(roots),
            q=verdict.q,
            small_root_count=small,
            large_root_count=len(roots) - small,
            label=verdict.label,
        )


def _blank_agg(k: int, l: int, m: int) -> dict:
    return {
        "total": 0,
        "d_ge_2": 0,
        "no_root": 0,
        "single_root": 0,
        "multi_root": 0,
        "multi_small_root": 0,
        "any_large_root": 0,
        "labels": Counter(),
        "hist": {r: 0 for r in range(k + m, k + l + 2 * m + 1)},
    }


def _aggregate_partition(k: int, l: int, m: int, fixed_al: int | None) -> dict:
    """Aggregate counts over one a_l-slice of the tuple space (all of it
    when fixed_al is None)."""
    agg = _blank_agg(k, l, m)
    weights = _base_weights(l, m)
    tfall = _t_falling_polys(l)
    targets = _large_targets(k, l, m)
    boundary = k + m

    if fixed_al is None:
        tuples: Iterable[tuple[int, ...]] = enumerate_A(k, l, m)
    else:
        budget = k + m - (l + m) * fixed_al
        if budget < 0:
            return agg
        if l == 0:
            tuples = iter([(fixed_al,)]) if budget == 0 else iter(())
        else:
            tuples = (
                (*prefix, fixed_al)
                for prefix in _enumerate_suffix(budget, l - 1, m, ())
            )

    for a_vec in tuples:
        agg["total"] += 1
        if sum(a_vec) < 2:
            continue
        agg["d_ge_2"] += 1
        roots = _tuple_roots(a_vec, k, m, weights, tfall, targets)
        nroots = len(roots)
        if nroots == 0:
            agg["no_root"] += 1
        elif nroots == 1:
            agg["single_root"] += 1
        else:
            agg["multi_root"] += 1
        small = sum(1 for r in roots if r < boundary)
        if small >= 2:
            agg["multi_small_root"] += 1
        if nroots - small >= 1:
            agg["any_large_root"] += 1
            for r in roots:
                if r >= boundary:
                    agg["hist"][r] += 1
        agg["labels"][_classify_tuple(a_vec, k, m, roots).label] += 1
    return agg


def _partition_worker(args: tuple[int, int, int, int]) -> dict:
    return _aggregate_partition(*args)


def _merge_agg(target: dict, part: dict) -> None:
    for key in ("total", "d_ge_2", "no_root", "single_root", "multi_root",
                "multi_small_root", "any_large_root"):
        target[key] += part[key]
    target["labels"].update(part["labels"])
    for r, count in part["hist"].items():
        target["hist"][r] += count


def census_summary(k: int, l: int, m: int, threads: int | None = None) -> CensusSummary:
    """Aggregate root structure and classification counts over all tuples.

    threads > 1 splits the tuple space by the value of a_l across a process
    pool; the merge is plain addition, so the output is identical to the
    serial run.
    """
    if k <= l:
        raise ValueError(f"census needs k > l, got k={k}, l={l}")
    if threads is not None and threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    if threads is None or threads == 1 or l == 0:
        agg = _aggregate_partition(k, l, m, None)
    else:
        agg = _blank_agg(k, l, m)
        slices = [(k, l, m, al) for al in range((k + m) // (l + m) + 1)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_partition_worker, slices):
                _merge_agg(agg, part)

    ratio = Fraction(
        agg["total"] * math.factorial(l) * falling(l + m, l + 1), k**l
    )
    return CensusSummary(
        k=k,
        l=l,
        m=m,
        total=agg["total"],
        d_ge_2=agg["d_ge_2"],
        no_root=agg["no_root"],
        single_root=agg["single_root"],
        multi_root=agg["multi_root"],
        multi_small_root=agg["multi_small_root"],
        any_large_root=agg["any_large_root"],
        label_counts=dict(sorted(agg["labels"].items())),
        large_root_histogram=dict(agg["hist"]),
        max_tuples_per_large_r=max(agg["hist"].values(), default=0),
        asymptotic_ratio=ratio,
    )


def large_root_histogram(k: int, l: int, m: int) -> dict[int, int]:
    """How many tuples have p(r) = 0, for each r in [k+m, k+l+2m].

    A lean pass: only the large-root targets are tested, so this scales to
    large sweeps without paying for small-root extraction or classification.
    """
    if k <= l:
        raise ValueError(f"census needs k > l, got k={k}, l={l}")
    weights = _base_weights(l, m)
    tfall = _t_falling_polys(l)
    targets = _large_targets(k, l, m)
    hist = {r: 0 for r in range(k + m, k + l + 2 * m + 1)}
    if targets:
        for a_vec in enumerate_A(k, l, m):
            if sum(a_vec) < 2:
                continue
            ac = _a_coeffs_in_t(a_vec, weights, tfall)
            for r, target in targets:
                if poly_eval(ac, r - m) == target:
                    hist[r] += 1
    return hist


# ---------------------------------------------------------------------------
# CSV report

CSV_HEADER = [
    "k", "l", "m", "total", "d_ge_2", "no_root", "single_root", "multi_small",
    "any_large", "max_per_large_r", "label_counts_json", "asymptotic_ratio",
]


def _ratio_str(ratio: Fraction) -> str:
    value = Decimal(ratio.numerator) / Decimal(ratio.denominator)
    return str(value.quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))


def summary_csv_row(s: CensusSummary) -> list[str]:
    import json

    return [
        str(s.k), str(s.l), str(s.m), str(s.total), str(s.d_ge_2),
        str(s.no_root), str(s.single_root), str(s.multi_small_root),
        str(s.any_large_root), str(s.max_tuples_per_large_r),
        json.dumps(s.label_counts, sort_keys=True),
        _ratio_str(s.asymptotic_ratio),
    ]


def write_census_csv(summaries: Iterable[CensusSummary], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for s in summaries:
        writer.writerow(summary_csv_row(s))
