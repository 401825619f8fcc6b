"""The degree-k polynomial governing Laurent coefficients, and its roots in N.

For an equation f^(k) = prod (f^(j))^(a_j) and admissible pole multiplicity m,
the coefficient recursion has the shape p(n) c(n) = s(n), where

    p(x) = (x-m)_k - sum_j a_j (-1)^(k-j) (k+m-1)_(k-j) (x-m)_j,

with (x)_j the falling factorial.  The same polynomial factors through the
degree-l polynomial

    A(x) = sum_j (-1)^j a_j (l+m-1)_(l-j) (x-m)_j

as p(x) = (x-m)_k - (-1)^k (k+m-1)_(k-l) A(x); build_p constructs both forms
and insists they agree.  The positive integer roots of p (all of which lie in
[m, k+l+2m]) control which Laurent coefficients may be nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .equation import Equation, from_factors, pole_multiplicity
from .exact import falling, gcd_list

# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, ascending powers)


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, ci in enumerate(p):
        if ci == 0:
            continue
        for j, cj in enumerate(q):
            out[i + j] += ci * cj
    return out


def poly_add_scaled(p: list[int], q: list[int], scale: int) -> list[int]:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for i, cj in enumerate(q):
        out[i] += scale * cj
    return out


def poly_eval(coeffs, x: int) -> int:
    """Horner evaluation with exact integers."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def falling_prefix_polys(c: int, jmax: int) -> list[list[int]]:
    """Expanded (x-c)_j for j = 0..jmax; entry j has degree exactly j."""
    polys = [[1]]
    for t in range(jmax):
        polys.append(poly_mul(polys[-1], [-(c + t), 1]))
    return polys


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndicialData:
    """p for a given (equation, m): monic degree-k integer coefficients,
    its positive integer roots, and their gcd (None when no roots)."""

    m: int
    coeffs: tuple[int, ...]
    roots: tuple[int, ...]
    q: int | None


def a_weights(eq: Equation, m: int) -> list[int]:
    """Per-j weights of A(x) in the (x-m)_j basis: (-1)^j a_j (l+m-1)_(l-j)."""
    l = eq.l
    return [(-1) ** j * eq.a[j] * falling(l + m - 1, l - j) for j in range(l + 1)]


def build_p(eq: Equation, m: int) -> IndicialData:
    """Exact coefficient vector of p; roots are filled by roots_in_N.

    Both construction routes (the direct sum over factors and the factored
    form through A(x)) are computed and must agree coefficient for
    coefficient.
    """
    profile = pole_multiplicity(eq)
    if profile is None or profile.m != m:
        raise ValueError(
            f"inadmissible multiplicity m={m} for {eq.text()}: "
            f"k = m*(d-1) + h has no such solution"
        )
    return _build_p_formal(eq, m)


def _build_p_formal(eq: Equation, m: int) -> IndicialData:
    """The polynomial as a formal object; no degree-balance requirement.

    Used by the reduction identity, which holds for every m >= 1."""
    k, l = eq.k, eq.l
    xm = falling_prefix_polys(m, k)

    direct = list(xm[k])
    for j, aj in enumerate(eq.a):
        if aj == 0:
            continue
        w = aj * (-1) ** (k - j) * falling(k + m - 1, k - j)
        direct = poly_add_scaled(direct, xm[j], -w)

    a_poly = [0]
    for j, wj in enumerate(a_weights(eq, m)):
        if wj != 0:
            a_poly = poly_add_scaled(a_poly, xm[j], wj)
    factored = poly_add_scaled(list(xm[k]), a_poly, -((-1) ** k) * falling(k + m - 1, k - l))
    factored = factored[: k + 1]

    if direct != factored:
        raise RuntimeError(f"the two constructions of p disagree for {eq.text()}, m={m}")
    assert len(direct) == k + 1 and direct[-1] == 1
    return IndicialData(m=m, coeffs=tuple(direct), roots=(), q=None)


def roots_in_N(data: IndicialData, eq: Equation) -> list[int]:
    """All positive integer roots of p, by exact scan of [1, k+l+2m].

    The scan deliberately starts at 1: that no root lies below m is a proved
    bound which the scan re-checks rather than assumes.
    """
    hi = eq.k + eq.l + 2 * data.m
    roots = [n for n in range(1, hi + 1) if poly_eval(data.coeffs, n) == 0]
    low = [r for r in roots if r < data.m]
    if low:
        raise RuntimeError(f"root(s) {low} below the pole multiplicity {data.m}; "
                           f"the lower root bound failed for {eq.text()}")
    return roots


def gcd_of_roots(roots) -> int | None:
    """gcd of the root set, or None when there are no roots."""
    roots = list(roots)
    if not roots:
        return None
    return gcd_list(roots)


def indicial_data(eq: Equation, m: int | None = None) -> IndicialData:
    """build_p + roots_in_N + gcd in one step; m defaults to the admissible one."""
    if m is None:
        profile = pole_multiplicity(eq)
        if profile is None:
            raise ValueError(f"{eq.text()} admits no pole multiplicity")
        m = profile.m
    data = build_p(eq, m)
    roots = roots_in_N(data, eq)
    return replace(data, roots=tuple(roots), q=gcd_of_roots(roots))


def p_at_m(eq: Equation, m: int) -> int:
    """p(m), which vanishes exactly when no factor is the 0-th derivative.

    The closed form is (-1)^(k+1) (k+m-1)_k a_0; direct evaluation of the
    built polynomial is the authority and the closed form is asserted
    against it.
    """
    data = build_p(eq, m)
    value = poly_eval(data.coeffs, m)
    closed = (-1) ** (eq.k + 1) * falling(eq.k + m - 1, eq.k) * eq.a[0]
    if value != closed:
        raise RuntimeError(f"closed form for p(m) disagrees with evaluation on {eq.text()}")
    return value


def reduce_if_a0_zero(eq: Equation, m: int) -> tuple[Equation, int]:
    """For a_0 = 0, the substitution g = f' lowers every derivative order.

    Returns the reduced equation g^(k-1) = prod (g^(j-1))^(a_j) with
    multiplicity m+1, after checking the exact polynomial identity
    p(x) = (x - m) * p_reduced(x).  The identity is formal, so the pair
    (eq, m) need not satisfy the degree balance (when it does, the reduced
    pair does too).
    """
    if eq.a[0] != 0:
        raise ValueError("reduction requires no zeroth-derivative factor")
    if m < 1:
        raise ValueError(f"multiplicity must be positive, got {m}")
    reduced = Equation.from_exponents(eq.k - 1, eq.a[1:])
    p = _build_p_formal(eq, m).coeffs
    p1 = _build_p_formal(reduced, m + 1).coeffs
    expected = tuple(poly_mul(list(p1), [-m, 1]))
    if p != expected:
        raise RuntimeError(f"p(x) != (x-m) * p1(x) for {eq.text()}, m={m}")
    return reduced, m + 1


def l1_roots_closed_form(m: int, k: int, a: int, b: int) -> list[int]:
    """All positive integer roots of p for f^(k) = f^a f'^b, in closed form.

    The small root (below k+m) is the solution of b(r+1) = k+m when that is
    an integer in range.  A large root exists in exactly one of three
    disjoint situations: r = k+2m+1 when a = 0 and k is odd, r = k+2m when
    b = 0 and k is even, r = k+2m-1 when b = 1 and k is odd.
    """
    if m < 1 or k <= 1 or a < 0 or b < 0 or a + b < 2:
        raise ValueError(f"needs m >= 1, k > 1, a,b >= 0, a+b >= 2 (m={m}, k={k}, a={a}, b={b})")
    if m * a + (m + 1) * b != k + m:
        raise ValueError(f"degree balance m*a + (m+1)*b = k+m fails (m={m}, k={k}, a={a}, b={b})")
    roots = set()
    if b > 0 and (k + m) % b == 0:
        r = (k + m) // b - 1
        if m <= r < k + m:
            roots.add(r)
    if a == 0 and k % 2 == 1:
        roots.add(k + 2 * m + 1)
    elif b == 0 and k % 2 == 0:
        roots.add(k + 2 * m)
    elif b == 1 and k % 2 == 1:
        assert a * m == k - 1
        roots.add(k + 2 * m - 1)
    return sorted(roots)


def l1_equation(k: int, a: int, b: int) -> Equation:
    """The Equation object for f^(k) = f^a f'^b."""
    return from_factors(k, [0] * a + [1] * b)
