"""Independent brute-force reference implementations used only by tests.

Everything here is written the dumbest correct way, sharing as little code
as possible with the package: p is evaluated as falling-factorial products
(never expanded), coefficient sums run over ordered factor tuples, and
counting is done with nested loops.
"""

from fractions import Fraction
from itertools import product as iter_product


def falling_direct(x, j):
    out = 1
    for t in range(j):
        out *= x - t
    return out


def p_eval_direct(eq, m, n):
    """p(n) straight from its definition, no polynomial expansion."""
    k = eq.k
    total = falling_direct(n - m, k)
    for j, aj in enumerate(eq.a):
        if aj:
            total -= aj * (-1) ** (k - j) * falling_direct(k + m - 1, k - j) * falling_direct(n - m, j)
    return total


def roots_by_direct_scan(eq, m):
    hi = eq.k + eq.l + 2 * m
    return [n for n in range(1, hi + 1) if p_eval_direct(eq, m, n) == 0]


def ordered_tuple_sum(eq, m, qs, n):
    """S(n) as the literal sum over ordered d-tuples with every part < n."""
    slots = []
    for j, aj in enumerate(eq.a):
        slots.extend([j] * aj)
    total = Fraction(0)
    parts_range = range(min(n, len(qs)))

    def rec(i, remaining, acc):
        nonlocal total
        if i == len(slots) - 1:
            if remaining in parts_range:
                total += acc * falling_direct(remaining - m, slots[i]) * qs[remaining]
            return
        for part in parts_range:
            if part > remaining:
                break
            factor = falling_direct(part - m, slots[i]) * qs[part]
            if factor:
                rec(i + 1, remaining - part, acc * factor)

    rec(0, n, Fraction(1))
    return total


def series_by_ordered_recursion(eq, m, v, order, free):
    """The coefficient recursion driven by the ordered-tuple sum above."""
    qs = [Fraction(1)]
    obstructed = None
    for n in range(1, order + 1):
        s_n = ordered_tuple_sum(eq, m, qs, n)
        p_n = p_eval_direct(eq, m, n)
        if p_n != 0:
            qs.append(v * s_n / p_n)
        elif s_n != 0:
            obstructed = n
            break
        else:
            qs.append(Fraction(free.get(n, 0)))
    return qs, obstructed


def full_convolution(eq, m, qs):
    """T(n) for all n: the product over factor slots of their weighted series."""
    out = [Fraction(1)]
    started = False
    for j, aj in enumerate(eq.a):
        for _ in range(aj):
            factor = [falling_direct(t - m, j) * qs[t] for t in range(len(qs))]
            if not started:
                out = list(factor)
                started = True
            else:
                nxt = [Fraction(0)] * len(qs)
                for i, ci in enumerate(out):
                    if ci:
                        for t in range(len(qs) - i):
                            nxt[i + t] += ci * factor[t]
                out = nxt
    return out


def first_identity_failure(eq, m, v, qs, limit):
    """First n in [1, limit] where (n-m)_k q_n != v * T(n), or None.

    This is the order-n coefficient of the equation itself; it matches the
    residual p(n) q_n - v S(n) identically.
    """
    t_all = full_convolution(eq, m, qs)
    for n in range(1, limit + 1):
        if falling_direct(n - m, eq.k) * qs[n] != v * t_all[n]:
            return n
    return None


def enumerate_A_bruteforce(k, l, m):
    """All (l+1)-tuples with sum (j+m) a_j = k+m, by blunt nested ranges."""
    target = k + m
    ranges = [range(target // (j + m) + 1) for j in range(l + 1)]
    out = []
    for a_vec in iter_product(*ranges):
        if sum((j + m) * aj for j, aj in enumerate(a_vec)) == target:
            out.append(a_vec)
    return out


def count_compositions_bruteforce(c, k):
    def rec(i, remaining):
        if i == len(c) - 1:
            return 1 if remaining % c[i] == 0 else 0
        return sum(rec(i + 1, remaining - c[i] * a) for a in range(remaining // c[i] + 1))

    return rec(0, k)
