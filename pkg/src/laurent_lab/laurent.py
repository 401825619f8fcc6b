"""Truncated formal Laurent solutions, built by exact recursion and
re-verified by independent back-substitution.

Coefficient representation: write f = c0 * F with F = sum_n q_n z^(n-m) and
q_0 = 1.  Matching the lowest-order terms fixes v := c0^(d-1) exactly as a
rational number, and since c0^d = v*c0, every product of d coefficients on
the right side carries exactly one factor v.  The whole computation
therefore lives in Q even when c0 itself is irrational or non-real (d even
with v < 0), and no algebraic-number arithmetic is ever needed.

The recursion for n >= 1 is

    p(n) q_n = v * S(n),

where S(n) sums over all ways of splitting n = n_1 + ... + n_d across the d
factor slots with every part n_i < n; a slot of derivative order j weighs
its part as (n_i - m)_j q_(n_i).  Slots of equal order are interchangeable,
so S(n) is assembled from the per-order power series

    B_j = (sum_t (t-m)_j q_t z^t) ** a_j

(whose coefficients carry the multinomial multiplicities of the order-j
multiset implicitly) and a running product over the distinct orders; ordered
d-tuples are never enumerated.  Power coefficients advance one order per
step through the logarithmic-derivative recurrence P'G = a G'P, with the
index-n source coefficient first excluded (that is exactly the "every
n_i < n" condition) and then committed once q_n is known.

At a root r of p the equation p(r) q_r = v S(r) either forces nothing
(S(r) = 0, and q_r becomes a free choice, default 0) or is unsatisfiable
(S(r) != 0), which is recorded as an obstruction, not raised as an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .equation import Equation, pole_multiplicity
from .exact import falling, format_rational, parse_rational
from .indicial import indicial_data, poly_eval

# ---------------------------------------------------------------------------
# truncated Laurent series windows (the independent verification path)


@dataclass(frozen=True)
class LaurentWindow:
    """Exact coefficients for z**min_exp .. z**(min_exp + len(coeffs) - 1).

    The window is the truncation contract: operations shrink it as required
    and never silently extend it.
    """

    min_exp: int
    coeffs: tuple[Fraction, ...]

    def coefficient(self, exp: int) -> Fraction:
        idx = exp - self.min_exp
        if idx < 0 or idx >= len(self.coeffs):
            raise ValueError(f"exponent {exp} outside the exact window")
        return self.coeffs[idx]


def series_differentiate(w: LaurentWindow) -> LaurentWindow:
    """Termwise d/dz; exact, window shifts down by one exponent."""
    coeffs = tuple((w.min_exp + i) * c for i, c in enumerate(w.coeffs))
    return LaurentWindow(w.min_exp - 1, coeffs)


def series_multiply(a: LaurentWindow, b: LaurentWindow) -> LaurentWindow:
    """Truncated convolution; the result window is as long as the shorter input."""
    if not a.coeffs or not b.coeffs:
        raise ValueError("cannot multiply an empty series window")
    n = min(len(a.coeffs), len(b.coeffs))
    out = []
    for t in range(n):
        acc = Fraction(0)
        for i in range(t + 1):
            ca = a.coeffs[i]
            if ca:
                acc += ca * b.coeffs[t - i]
        out.append(acc)
    return LaurentWindow(a.min_exp + b.min_exp, tuple(out))


def series_power(w: LaurentWindow, e: int) -> LaurentWindow:
    if e < 1:
        raise ValueError("power must be >= 1")
    out = w
    for _ in range(e - 1):
        out = series_multiply(out, w)
    return out


def series_scale(w: LaurentWindow, s: Fraction) -> LaurentWindow:
    return LaurentWindow(w.min_exp, tuple(s * c for c in w.coeffs))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesSolution:
    """A truncated Laurent solution in the q-representation.

    qcoeffs[n] is q_n with c(n) = q_n * c0; order == len(qcoeffs) - 1.  When
    obstructed_at is set, the coefficients stop just below the obstructing
    root and the series is a valid solution prefix only.
    """

    m: int
    v: Fraction
    qcoeffs: tuple[Fraction, ...]
    order: int
    free_choices: dict[int, Fraction]
    obstructed_at: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "v": format_rational(self.v),
            "coeffs": [
                {"n": n, "q": format_rational(qn)} for n, qn in enumerate(self.qcoeffs)
            ],
            "free": {
                str(r): format_rational(val)
                for r, val in sorted(self.free_choices.items())
            },
            "obstructed_at": self.obstructed_at,
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "SeriesSolution":
        coeffs = sorted(payload["coeffs"], key=lambda item: item["n"])
        if [item["n"] for item in coeffs] != list(range(len(coeffs))):
            raise ValueError("series JSON must carry q_0..q_N without gaps")
        qcoeffs = tuple(parse_rational(item["q"]) for item in coeffs)
        return cls(
            m=int(payload["m"]),
            v=parse_rational(payload["v"]),
            qcoeffs=qcoeffs,
            order=len(qcoeffs) - 1,
            free_choices={
                int(r): parse_rational(val) for r, val in payload.get("free", {}).items()
            },
            obstructed_at=payload.get("obstructed_at"),
        )


@dataclass(frozen=True)
class VerificationReport:
    verified: bool
    first_mismatch_order: int | None
    checked_through: int


def default_order(eq: Equation, m: int) -> int:
    """Covers every root and three q-periods beyond the largest one."""
    return 4 * (eq.k + eq.l + 2 * m)


def leading_value(eq: Equation, m: int) -> Fraction:
    """v = c0^(d-1) = (-m)_k / prod_j (-m)_j^(a_j), exactly.

    Every factor of every (-m)_j is negative, so the denominator is never 0.
    """
    profile = pole_multiplicity(eq)
    if profile is None or profile.m != m:
        raise ValueError(f"inadmissible multiplicity m={m} for {eq.text()}")
    den = math.prod(falling(-m, j) ** aj for j, aj in enumerate(eq.a))
    return Fraction(falling(-m, eq.k), den)


def build_series(
    eq: Equation,
    m: int,
    order: int | None = None,
    free: dict[int, Fraction] | None = None,
) -> SeriesSolution:
    """Run the coefficient recursion up to the given order (inclusive).

    free maps roots of p to the q-value chosen there (default 0 at every
    root).  Keys outside the root set are rejected.  Hitting a root r with
    S(r) != 0 records obstructed_at = r and keeps the coefficients below r.
    """
    if order is None:
        order = default_order(eq, m)
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    data = indicial_data(eq, m)  # validates (eq, m) admissibility
    rootset = set(data.roots)
    free = {int(r): Fraction(val) for r, val in (free or {}).items()}
    bad = sorted(set(free) - rootset)
    if bad:
        raise ValueError(f"free choices {bad} are not roots of p (roots: {sorted(rootset)})")
    v = leading_value(eq, m)
    pcoeffs = data.coeffs

    groups = [(j, aj) for j, aj in enumerate(eq.a) if aj > 0]
    ngroups = len(groups)
    qs = [Fraction(1)]
    # source series per order group: src[gi][t] = (t-m)_j * q_t
    src = [[Fraction(falling(-m, j))] for j, _ in groups]
    # per-group powers B_gi = src_gi ** a_j
    pw = [[Fraction(falling(-m, j)) ** aj] for j, aj in groups]
    # running products over groups; prefix[0] aliases pw[0]
    prefix = [pw[0]]
    for t in range(1, ngroups):
        prefix.append([prefix[t - 1][0] * pw[t][0]])

    free_applied: dict[int, Fraction] = {}
    obstructed_at = None
    for n in range(1, order + 1):
        # power coefficients at order n with the index-n source excluded
        pw_hat = []
        for gi, (j, aj) in enumerate(groups):
            g, b = src[gi], pw[gi]
            acc = Fraction(0)
            for i in range(1, n):
                gi_c = g[i]
                if gi_c:
                    acc += ((aj + 1) * i - n) * gi_c * b[n - i]
            pw_hat.append(acc / (n * g[0]))
        # running products at order n, same exclusion
        run_hat = [pw_hat[0]]
        for t in range(1, ngroups):
            prev, cur = prefix[t - 1], pw[t]
            acc = run_hat[t - 1] * cur[0] + prev[0] * pw_hat[t]
            for u in range(1, n):
                pu = prev[u]
                if pu:
                    acc += pu * cur[n - u]
            run_hat.append(acc)
        s_n = run_hat[ngroups - 1]

        p_n = poly_eval(pcoeffs, n)
        if p_n != 0:
            if n in rootset:
                raise RuntimeError(f"scan marked {n} as a root but p({n}) != 0")
            q_n = v * s_n / p_n
        else:
            if n not in rootset:
                raise RuntimeError(
                    f"p({n}) = 0 beyond the proven root range for {eq.text()}"
                )
            if s_n != 0:
                obstructed_at = n
                break
            q_n = free.get(n, Fraction(0))
            free_applied[n] = q_n
        qs.append(q_n)

        # commit the index-n coefficients now that q_n is known
        for gi, (j, aj) in enumerate(groups):
            g_n = falling(n - m, j) * q_n
            src[gi].append(g_n)
            pw[gi].append(pw_hat[gi] + aj * g_n * pw[gi][0] / src[gi][0])
        for t in range(1, ngroups):
            prev = prefix[t - 1]
            delta_prev = prev[n] - run_hat[t - 1]
            delta_cur = pw[t][n] - pw_hat[t]
            prefix[t].append(run_hat[t] + delta_prev * pw[t][0] + prev[0] * delta_cur)

    return SeriesSolution(
        m=m,
        v=v,
        qcoeffs=tuple(qs),
        order=len(qs) - 1,
        free_choices=free_applied,
        obstructed_at=obstructed_at,
    )


def verify_series(eq: Equation, sol: SeriesSolution, through: int) -> VerificationReport:
    """Check F^(k) = v * prod_j (F^(j))^(a_j) coefficient by coefficient.

    This is the original equation divided by c0 (using c0^d = v c0),
    re-expanded with the window arithmetic above -- a code path independent
    of the recursion that built the series.  Orders 0..through of the
    identity are compared, which needs through <= sol.order - k so that both
    sides are exact that far.
    """
    k = eq.k
    if through < 1:
        raise ValueError(f"through must be >= 1, got {through}")
    if through > sol.order - k:
        raise ValueError(
            f"truncation too short: checking through order {through} needs a series "
            f"of order at least {through + k}, got {sol.order}"
        )
    f_window = LaurentWindow(-sol.m, tuple(sol.qcoeffs))

    derivs = [f_window]
    for _ in range(max(k, eq.l)):
        derivs.append(series_differentiate(derivs[-1]))
    lhs = derivs[k]

    rhs = None
    for j, aj in enumerate(eq.a):
        if aj == 0:
            continue
        part = series_power(derivs[j], aj)
        rhs = part if rhs is None else series_multiply(rhs, part)
    rhs = series_scale(rhs, sol.v)

    assert lhs.min_exp == rhs.min_exp == -(k + sol.m)
    for idx in range(through + 1):
        if lhs.coeffs[idx] != rhs.coeffs[idx]:
            return VerificationReport(
                verified=False, first_mismatch_order=idx, checked_through=through
            )
    return VerificationReport(verified=True, first_mismatch_order=None, checked_through=through)


def shape_check(sol: SeriesSolution, q: int) -> bool:
    """True iff q_n = 0 for every computed 1 <= n <= order with q not dividing n."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    return all(
        sol.qcoeffs[n] == 0 for n in range(1, sol.order + 1) if n % q != 0
    )
