"""Decide what the root structure of p proves about meromorphic solutions.

Labels describe the proved shape of the solution SET, not a claim that
nonrational solutions exist; e.g. ELLIPTIC_RATIO_I means "any transcendental
meromorphic solution is elliptic with period ratio i".  Only the three
explicitly known equations additionally assert existence, which is why they
sit in the highest-precedence tier.  Every fired rule is appended to the
evidence trail with a one-line statement of the mathematical fact applied.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equation import Equation, pole_multiplicity
from .indicial import indicial_data

NO_POLE_RATIONAL = "NO_POLE_RATIONAL"
RATIONAL_ONLY = "RATIONAL_ONLY"
W_GENERAL = "W_GENERAL"
W_Q2_ELLIPTIC_OR_EXP = "W_Q2_ELLIPTIC_OR_EXP"
ELLIPTIC_RATIO_I = "ELLIPTIC_RATIO_I"
ELLIPTIC_RATIO_ZETA6 = "ELLIPTIC_RATIO_ZETA6"
KNOWN_NOT_IN_W = "KNOWN_NOT_IN_W"
UNRESOLVED_Q1 = "UNRESOLVED_Q1"

ALL_LABELS = (
    NO_POLE_RATIONAL,
    RATIONAL_ONLY,
    W_GENERAL,
    W_Q2_ELLIPTIC_OR_EXP,
    ELLIPTIC_RATIO_I,
    ELLIPTIC_RATIO_ZETA6,
    KNOWN_NOT_IN_W,
    UNRESOLVED_Q1,
)

# labels consistent with "every meromorphic solution lies in W"
W_COMPATIBLE = frozenset(
    {
        NO_POLE_RATIONAL,
        RATIONAL_ONLY,
        W_GENERAL,
        W_Q2_ELLIPTIC_OR_EXP,
        ELLIPTIC_RATIO_I,
        ELLIPTIC_RATIO_ZETA6,
    }
)


@dataclass(frozen=True)
class EvidenceItem:
    rule: str
    citation: str


@dataclass(frozen=True)
class Classification:
    label: str
    m: int | None
    roots: tuple[int, ...]
    q: int | None
    evidence: tuple[EvidenceItem, ...]

    def to_json_dict(self, eq: Equation) -> dict:
        return {
            "equation": eq.text(),
            "k": eq.k,
            "a": list(eq.a),
            "m": self.m,
            "roots": list(self.roots),
            "q": self.q,
            "label": self.label,
            "evidence": [
                {"rule": item.rule, "citation": item.citation} for item in self.evidence
            ],
        }


def euler_phi(n: int) -> int:
    out, p, rest = 1, 2, n
    while p * p <= rest:
        if rest % p == 0:
            power = 1
            while rest % p == 0:
                rest //= p
                power *= p
            out *= power - power // p
        p += 1
    if rest > 1:
        out *= rest - 1
    return out


_GCD_RULES = {
    2: (
        W_Q2_ELLIPTIC_OR_EXP,
        "coefficient support on even indices gives a period from any two poles; "
        "the solution is elliptic or has the form g(e^{cz}) with g rational",
    ),
    3: (
        ELLIPTIC_RATIO_ZETA6,
        "coefficient support on multiples of 3 produces periods with ratio "
        "exp(pi*i/3); transcendental solutions are elliptic with that ratio",
    ),
    4: (
        ELLIPTIC_RATIO_I,
        "coefficient support on multiples of 4 produces periods with ratio i; "
        "transcendental solutions are elliptic with period ratio i",
    ),
    6: (
        ELLIPTIC_RATIO_ZETA6,
        "coefficient support on multiples of 6 produces periods with ratio "
        "exp(pi*i/3); transcendental solutions are elliptic with that ratio",
    ),
}

_OVERRIDES = {
    (3, (0, 2)): (
        KNOWN_NOT_IN_W,
        "known_equation_weierstrass_integral",
        "f''' = f'^2 is solved by integrals of rescaled equianharmonic Weierstrass "
        "functions, which are meromorphic but neither rational, elliptic, nor "
        "rational in e^{cz}",
    ),
    (2, (3,)): (
        ELLIPTIC_RATIO_I,
        "known_equation_jacobi_dn",
        "f'' = f^3 is solved by rescaled Jacobi dn functions with period ratio i, "
        "and every transcendental meromorphic solution is such a function",
    ),
    (2, (2,)): (
        ELLIPTIC_RATIO_ZETA6,
        "known_equation_weierstrass",
        "f'' = f^2 is solved by rescaled equianharmonic Weierstrass functions with "
        "period ratio exp(pi*i/3), and every transcendental meromorphic solution "
        "is such a function",
    ),
}


def _parity_uniform(eq: Equation) -> bool:
    """True when the factor orders are all even or all odd."""
    parities = {j % 2 for j, aj in enumerate(eq.a) if aj > 0}
    return len(parities) == 1


def classify(eq: Equation) -> Classification:
    """Map an equation to its solution-class verdict with an evidence trail."""
    evidence: list[EvidenceItem] = []

    profile = pole_multiplicity(eq)
    if profile is None:
        evidence.append(
            EvidenceItem(
                "no_admissible_multiplicity",
                "no positive integer m satisfies k = m*(d-1) + h, so a pole is "
                "impossible in any Laurent solution; pole-free meromorphic "
                "solutions of this equation class are rational",
            )
        )
        return Classification(NO_POLE_RATIONAL, None, (), None, tuple(evidence))

    m = profile.m
    data = indicial_data(eq, m)
    return _decide(eq, m, data.roots, evidence)


def classify_with_roots(eq: Equation, m: int, roots: tuple[int, ...]) -> Classification:
    """The decision tiers below the pole check, for callers (the census)
    that already hold the admissible m and the full sorted root set."""
    return _decide(eq, m, roots, [])


def _decide(
    eq: Equation, m: int, roots: tuple[int, ...], evidence: list[EvidenceItem]
) -> Classification:
    """Shared decision tiers for classify() and the census fast path.

    Callers guarantee m is the admissible multiplicity and roots is the full
    sorted root set of p in [1, k+l+2m].
    """
    q = None
    if roots:
        g = roots[0]
        for r in roots[1:]:
            g = _gcd(g, r)
        q = g

    override = _OVERRIDES.get((eq.k, eq.a))
    if override is not None:
        label, rule, citation = override
        evidence.append(EvidenceItem(rule, citation))
        return Classification(label, m, tuple(roots), q, tuple(evidence))

    if not roots:
        evidence.append(
            EvidenceItem(
                "empty_root_set",
                "the associated polynomial has no positive integer roots, so the "
                "only Laurent solution with a pole of multiplicity m is the pure "
                "leading term; meromorphic solutions are rational",
            )
        )
        return Classification(RATIONAL_ONLY, m, tuple(roots), q, tuple(evidence))

    if len(roots) == 1:
        r = roots[0]
        if r == m or r == 1:
            evidence.append(
                EvidenceItem(
                    "single_root_trivial",
                    "the only positive integer root equals the pole multiplicity "
                    "(a sole root 1 forces m = 1 as well); differentiating reduces "
                    "to an equation with no positive integer roots, so solutions "
                    "are rational",
                )
            )
            return Classification(RATIONAL_ONLY, m, tuple(roots), q, tuple(evidence))
        if r in _GCD_RULES:
            label, citation = _GCD_RULES[r]
            evidence.append(EvidenceItem(f"single_root_q{r}", citation))
            return Classification(label, m, tuple(roots), q, tuple(evidence))
        evidence.append(
            EvidenceItem(
                "single_root_phi_gate",
                f"a sole root {r} makes q = {r} with euler_phi(q) > 2; coefficient "
                "support on multiples of q would force more than two independent "
                "periods, so transcendental solutions are excluded and solutions "
                "are rational",
            )
        )
        return Classification(RATIONAL_ONLY, m, tuple(roots), q, tuple(evidence))

    # two or more roots: decide by the gcd q
    if q in _GCD_RULES:
        label, citation = _GCD_RULES[q]
        evidence.append(EvidenceItem(f"multi_root_q{q}", citation))
        return Classification(label, m, tuple(roots), q, tuple(evidence))
    if q != 1:
        evidence.append(
            EvidenceItem(
                "multi_root_phi_gate",
                f"the root gcd q = {q} has euler_phi(q) > 2; coefficient support "
                "on multiples of q would force more than two independent periods, "
                "so transcendental solutions are excluded and solutions are "
                "rational",
            )
        )
        assert euler_phi(q) > 2
        return Classification(RATIONAL_ONLY, m, tuple(roots), q, tuple(evidence))

    if _parity_uniform(eq):
        evidence.append(
            EvidenceItem(
                "multi_root_q1_parity",
                "with factor orders all even or all odd, the only equations "
                "admitting nonrational meromorphic solutions are f''=f^2, f''=f^3 "
                "and f'''=f'^2; this is none of them, so solutions are rational",
            )
        )
        return Classification(RATIONAL_ONLY, m, tuple(roots), q, tuple(evidence))
    if eq.l <= 1:
        evidence.append(
            EvidenceItem(
                "multi_root_q1_first_order",
                "for f^(k) = f^a f'^b the remaining two-root q=1 cases integrate "
                "to k f^(k-1) = f^k + c, whose meromorphic solutions are known to "
                "be rational, elliptic, or rational in e^{cz}",
            )
        )
        return Classification(W_GENERAL, m, tuple(roots), q, tuple(evidence))
    evidence.append(
        EvidenceItem(
            "multi_root_q1_open",
            "the root gcd is 1 and neither the parity argument nor the first-order "
            "reduction applies; the divisibility argument yields no period and the "
            "implemented theory does not decide this case",
        )
    )
    return Classification(UNRESOLVED_Q1, m, tuple(roots), q, tuple(evidence))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
