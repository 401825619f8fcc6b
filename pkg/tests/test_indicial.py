import pytest

from laurent_lab.equation import Equation, from_factors, pole_multiplicity
from laurent_lab.indicial import (
    build_p,
    gcd_of_roots,
    indicial_data,
    l1_equation,
    l1_roots_closed_form,
    p_at_m,
    poly_eval,
    poly_mul,
    reduce_if_a0_zero,
    roots_in_N,
)

from oracles import p_eval_direct, roots_by_direct_scan

F2 = from_factors(2, [0, 0])       # f'' = f^2
F3 = from_factors(2, [0, 0, 0])    # f'' = f^3
FP2 = from_factors(3, [1, 1])      # f''' = f'^2


def all_admissible_tuples(k_max, l_max, m_max):
    """Every (equation, m) with k <= k_max, effective l <= l_max, m <= m_max."""
    out = []
    for k in range(2, k_max + 1):
        for l in range(min(l_max, k - 1) + 1):
            for m in range(1, m_max + 1):
                target = k + m
                vecs = [()]
                for j in range(l + 1):
                    vecs = [
                        (*v, aj)
                        for v in vecs
                        for aj in range(
                            (target - sum((i + m) * vi for i, vi in enumerate(v)))
                            // (j + m)
                            + 1
                        )
                    ]
                for v in vecs:
                    if sum((j + m) * aj for j, aj in enumerate(v)) != target:
                        continue
                    if sum(v) < 2 or v[-1] == 0:  # trimmed form only, no dupes
                        continue
                    out.append((Equation(k, v), m))
    return out


def test_hand_factorizations():
    d2 = indicial_data(F2)
    assert d2.m == 2 and d2.coeffs == (-6, -5, 1)  # (x-6)(x+1)
    assert d2.roots == (6,) and d2.q == 6

    d3 = indicial_data(F3)
    assert d3.m == 1 and d3.coeffs == (-4, -3, 1)  # (x-4)(x+1)
    assert d3.roots == (4,) and d3.q == 4

    dp = indicial_data(FP2)
    assert dp.m == 1 and dp.coeffs == (6, -1, -6, 1)  # (x-1)(x-6)(x+1)
    assert dp.roots == (1, 6) and dp.q == 1


def test_monic_degree_k():
    for eq, m in all_admissible_tuples(10, 2, 2):
        data = build_p(eq, m)
        assert len(data.coeffs) == eq.k + 1
        assert data.coeffs[-1] == 1


def test_build_p_rejects_inadmissible_m():
    with pytest.raises(ValueError):
        build_p(F2, 3)
    with pytest.raises(ValueError):
        build_p(from_factors(2, [0, 0, 0, 0]), 1)


def test_roots_match_direct_scan_oracle():
    # expanded-coefficient evaluation vs falling-product evaluation
    for eq, m in all_admissible_tuples(12, 2, 2):
        data = build_p(eq, m)
        assert roots_in_N(data, eq) == roots_by_direct_scan(eq, m)


def test_known_mixed_equation_roots():
    # f'' = f f': the closed form and the scan agree on the single root 2
    eq = from_factors(2, [0, 1])
    assert indicial_data(eq).roots == (2,)
    assert l1_roots_closed_form(1, 2, 1, 1) == [2]


def test_gcd_of_roots():
    assert gcd_of_roots([6]) == 6
    assert gcd_of_roots([1, 6]) == 1
    assert gcd_of_roots([]) is None


def test_p_at_m_examples():
    assert p_at_m(F2, 2) == -12
    assert p_at_m(FP2, 1) == 0
    assert p_at_m(F3, 1) == -6


def test_p_at_m_vanishes_iff_no_constant_factor():
    for eq, m in all_admissible_tuples(10, 2, 2):
        assert (p_at_m(eq, m) == 0) == (eq.a[0] == 0)
        data = build_p(eq, m)
        assert p_at_m(eq, m) == poly_eval(data.coeffs, m)


def test_reduce_examples():
    assert reduce_if_a0_zero(FP2, 1) == (F2, 2)
    eq4 = from_factors(4, [2, 2])
    assert reduce_if_a0_zero(eq4, 1) == (FP2, 2)
    with pytest.raises(ValueError):
        reduce_if_a0_zero(F2, 2)


def test_reduce_polynomial_identity_enumerated():
    # whenever a_0 = 0: p(x) = (x - m) * p_reduced(x) exactly
    for eq, m in all_admissible_tuples(12, 3, 2):
        if eq.a[0] != 0:
            continue
        reduced, m1 = reduce_if_a0_zero(eq, m)
        assert m1 == m + 1
        lhs = list(build_p(eq, m).coeffs)
        rhs = poly_mul(list(build_p(reduced, m1).coeffs), [-m, 1])
        assert lhs == rhs


def test_l1_closed_form_examples():
    assert l1_roots_closed_form(2, 2, 2, 0) == [6]
    assert l1_roots_closed_form(1, 3, 0, 2) == [1, 6]
    assert l1_roots_closed_form(1, 3, 2, 1) == [3, 4]


def test_l1_closed_form_rejects_bad_input():
    with pytest.raises(ValueError):
        l1_roots_closed_form(1, 3, 1, 1)  # balance fails
    with pytest.raises(ValueError):
        l1_roots_closed_form(1, 1, 1, 1)  # k too small
    with pytest.raises(ValueError):
        l1_roots_closed_form(1, 3, 0, 1)  # fewer than two factors... balance also fails


def test_l1_closed_form_matches_scan_small():
    for m in range(1, 4):
        for k in range(2, 16):
            for b in range((k + m) // (m + 1) + 1):
                rest = k + m - (m + 1) * b
                if rest % m:
                    continue
                a = rest // m
                if a + b < 2:
                    continue
                eq = l1_equation(k, a, b)
                assert l1_roots_closed_form(m, k, a, b) == roots_in_N(build_p(eq, m), eq)


def test_root_bounds_small():
    for eq, m in all_admissible_tuples(12, 3, 2):
        roots = indicial_data(eq, m).roots
        hi = eq.k + eq.l + 2 * m
        assert all(m <= r <= hi for r in roots)
        # the upper bound is attained exactly for single-order equations of
        # top order with k - l even
        expect_top = (eq.k - eq.l) % 2 == 0 and all(aj == 0 for aj in eq.a[:-1])
        assert (hi in roots) == expect_top
        # m is a root exactly when no factor is the plain function
        assert (m in roots) == (eq.a[0] == 0)


def test_all_zero_order_equations():
    # f^(k) = f^d: no roots for odd k, exactly (d+1)m for even k
    for k in range(2, 15):
        for d in range(2, k + 2):
            if k % (d - 1):
                continue
            m = k // (d - 1)
            eq = Equation(k, (d,))
            assert pole_multiplicity(eq).m == m
            roots = indicial_data(eq, m).roots
            if k % 2 == 1:
                assert roots == ()
            else:
                assert roots == ((d + 1) * m,)


def test_a_at_minus_one_identity():
    # A(-1) = (l+m-1)_{l-1} (k+m) for the degree-l companion polynomial, l >= 1
    from laurent_lab.exact import falling
    from laurent_lab.indicial import a_weights, falling_prefix_polys

    for eq, m in all_admissible_tuples(12, 3, 2):
        l = eq.l
        if l == 0:
            continue
        xm = falling_prefix_polys(m, l)
        a_poly = [0]
        for j, wj in enumerate(a_weights(eq, m)):
            a_poly = [
                (a_poly[i] if i < len(a_poly) else 0) + wj * (xm[j][i] if i < len(xm[j]) else 0)
                for i in range(max(len(a_poly), len(xm[j])))
            ]
        assert poly_eval(a_poly, -1) == falling(l + m - 1, l - 1) * (eq.k + m)


def test_oracle_polynomial_agreement():
    # expanded coefficients evaluate identically to the defining products
    for eq, m in all_admissible_tuples(10, 2, 2):
        data = build_p(eq, m)
        for n in range(-3, eq.k + eq.l + 2 * m + 2):
            assert poly_eval(data.coeffs, n) == p_eval_direct(eq, m, n)
