"""Exact integer/rational helpers: primes, divisor sums, multiplicative
orders, and the registries of prime-variable equations and fraction bounds
used by the verification claims.

Everything here is exact arithmetic; no floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import InputError

# Scanners guarantee exactness for operands up to 2^63.  The solved forms are
# at most cubic in the scanned variables, so any single bound above 2^21 could
# push intermediates past that width; reject instead of wrapping.
MAX_SCAN_BOUND = 2_000_000


def primes_upto(n: int) -> list[int]:
    """All primes <= n, ascending (simple sieve)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, n + 1) if sieve[i]]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=65536)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ((p, exponent), ...), p ascending."""
    if n < 1:
        raise InputError(f"cannot factorize {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def divisor_sum(n: int) -> int:
    total = 1
    for p, e in factorize(n):
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def is_perfect(n: int) -> bool:
    """True when the divisor sum of n equals 2n."""
    if n < 1:
        raise InputError(f"is_perfect needs n >= 1, got {n}")
    return divisor_sum(n) == 2 * n


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    return all(e == 1 for _, e in factorize(n))


def mult_order(t: int, a: int) -> int:
    """Least k >= 1 with t^k = 1 mod a; requires gcd(t, a) = 1."""
    if a < 1:
        raise InputError(f"modulus must be positive, got {a}")
    if math.gcd(t, a) != 1:
        raise InputError(f"mult_order needs gcd(t, a) = 1, got t={t}, a={a}")
    if a == 1:
        return 1
    t %= a
    k = 1
    cur = t
    while cur != 1:
        cur = cur * t % a
        k += 1
    return k


def order_divides(t: int, a: int, b: int) -> bool:
    return pow(t, b, a) == 1 % a


def order_is_exactly(t: int, a: int, b: int) -> bool:
    """True when the multiplicative order of t mod a is exactly b."""
    if pow(t, b, a) != 1 % a:
        return False
    return all(pow(t, b // ell, a) != 1 % a for ell in prime_factors(b)) if b > 1 else True


# ---------------------------------------------------------------------------
# Equation registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EquationSpec:
    """A prime-variable equation with a solved form for one variable.

    ``solved`` maps the free variables to (numerator, denominator) of the
    dependent variable; the value is admissible only when the denominator is
    strictly positive and divides the numerator.  ``unreduced`` is the
    original relation before solving, used by the brute-force oracle.
    ``chain`` lists every variable (fixed, free, dependent) in the strict
    ascending order the primes must satisfy.
    """

    id: str
    fixed: tuple[tuple[str, int], ...]
    free: tuple[str, ...]
    dependent: str
    chain: tuple[str, ...]
    solved: Callable[..., tuple[int, int]]
    unreduced: Callable[..., bool]
    note: str = ""

    def variables(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.fixed) + self.free + (self.dependent,)


def _check_bounds(eq: EquationSpec, bounds: dict[str, int]) -> None:
    for name in eq.free + (eq.dependent,):
        if name not in bounds:
            raise InputError(f"missing bound for variable {name!r}")
        if bounds[name] > MAX_SCAN_BOUND:
            raise InputError(
                f"bound {bounds[name]} for {name!r} exceeds the exact-arithmetic "
                f"limit {MAX_SCAN_BOUND}"
            )
        if bounds[name] < 2:
            raise InputError(f"bound for {name!r} must admit at least one prime")


def _chain_ok(eq: EquationSpec, values: dict[str, int]) -> bool:
    seq = [values[name] for name in eq.chain]
    return all(a < b for a, b in zip(seq, seq[1:]))


def scan_equation(eq: EquationSpec, bounds: dict[str, int]) -> list[tuple[int, ...]]:
    """All prime tuples (free..., dependent) within bounds satisfying eq.

    Exact arithmetic throughout; result sorted lexicographically.
    """
    _check_bounds(eq, bounds)
    fixed = dict(eq.fixed)
    prime_pool = {name: primes_upto(bounds[name]) for name in eq.free}
    hits = []

    def rec(idx: int, values: dict[str, int]) -> None:
        if idx == len(eq.free):
            num, den = eq.solved(**{n: values[n] for n in values})
            if den <= 0 or num <= 0 or num % den != 0:
                return
            dep = num // den
            if dep > bounds[eq.dependent] or not is_prime(dep):
                return
            full = dict(values)
            full[eq.dependent] = dep
            full.update(fixed)
            if not _chain_ok(eq, full):
                return
            hits.append(tuple(full[n] for n in eq.free + (eq.dependent,)))
            return
        name = eq.free[idx]
        for p in prime_pool[name]:
            nxt = dict(values)
            nxt[name] = p
            rec(idx + 1, nxt)

    rec(0, dict(fixed))
    return sorted(hits)


def scan_equation_bruteforce(eq: EquationSpec, bounds: dict[str, int]) -> list[tuple[int, ...]]:
    """Independent oracle: test every prime tuple against the unreduced form."""
    _check_bounds(eq, bounds)
    fixed = dict(eq.fixed)
    names = eq.free + (eq.dependent,)
    pools = [primes_upto(bounds[n]) for n in names]
    hits = []

    def rec(idx: int, values: dict[str, int]) -> None:
        if idx == len(names):
            if _chain_ok(eq, values) and eq.unreduced(
                **{n: values[n] for n in values if n in names or n in fixed}
            ):
                hits.append(tuple(values[n] for n in names))
            return
        for p in pools[idx]:
            nxt = dict(values)
            nxt[names[idx]] = p
            rec(idx + 1, nxt)

    rec(0, dict(fixed))
    return sorted(hits)


def _build_equations() -> dict[str, EquationSpec]:
    eqs = [
        EquationSpec(
            id="lemma23",
            fixed=(),
            free=("p", "q"),
            dependent="r",
            chain=("p", "q", "r"),
            solved=lambda p, q: (1 + (p + 1) * q, q * (p * p - p - 1) - (p + 1)),
            unreduced=lambda p, q, r: p * p * q * r
            == 1 + q + r + p * q + p * r + q * r + p * q * r,
            note="order p^2*q*r, commutator of order q*r, trivial pairwise meet",
        ),
        EquationSpec(
            id="lemma24",
            fixed=(),
            free=("p", "q"),
            dependent="r",
            chain=("p", "q", "r"),
            # The unreduced form is the cross-multiplication of the solved
            # form itself, so the oracle checks the same relation.
            solved=lambda p, q: (p * p * q + p * q + p + 1, p * p - p * q - p - 1),
            unreduced=lambda p, q, r: r * (p * p - p * q - p - 1)
            == p * p * q + p * q + p + 1,
            note="order p^2*q*r, commutator of order p*q",
        ),
        EquationSpec(
            id="thm26-noP-a",
            fixed=(),
            free=("p", "q"),
            dependent="r",
            chain=("p", "q", "r"),
            solved=lambda p, q: (
                p * p * q + p * q + q + 1,
                p * p * q - p * q - p - q - 1,
            ),
            unreduced=lambda p, q, r: p * p * q * r
            == 1 + q + r + p * r + p * q + q * r + p * p * q + p * q * r,
            note="commutator of order q, no normal subgroup of order p, variant a",
        ),
        EquationSpec(
            id="thm26-noP-b",
            fixed=(),
            free=("p", "q"),
            dependent="r",
            chain=("p", "q", "r"),
            solved=lambda p, q: (p * p * q + p * q + q + 1, p * p * q - p * q - q - 1),
            unreduced=lambda p, q, r: p * p * q * r
            == 1 + q + r + p * q + q * r + p * p * q + p * q * r,
            note="commutator of order q, no normal subgroup of order p, variant b",
        ),
        EquationSpec(
            id="thm26-final",
            fixed=(("p", 2),),
            free=("q",),
            dependent="r",
            chain=("p", "q", "r"),
            solved=lambda p, q: (7 * q + 3, q - 3),
            unreduced=lambda p, q, r: q * r == 3 + 7 * q + 3 * r,
            note="p = 2 forced; the two solutions give the order-380 and order-364 hits",
        ),
        EquationSpec(
            id="rem37-s1",
            fixed=(("p", 2),),
            free=("q", "r"),
            dependent="s",
            chain=("p", "q", "r", "s"),
            solved=lambda p, q, r: (1 + r + 3 * q + 3 * q * r, q * r - 3 * q),
            unreduced=lambda p, q, r, s: s * (q * r - 3 * q) == 1 + r + 3 * q + 3 * q * r,
            note="four-distinct-prime order, ten normal subgroups, commutator of order q",
        ),
        EquationSpec(
            id="rem37-s2",
            fixed=(("p", 2),),
            free=("q", "r"),
            dependent="s",
            chain=("p", "q", "r", "s"),
            solved=lambda p, q, r: (1 + 3 * r + 3 * q * r, q * r - 3 * r - 1),
            unreduced=lambda p, q, r, s: s * (q * r - 3 * r - 1)
            == 1 + 3 * r + 3 * q * r,
            note="four-distinct-prime order, ten normal subgroups, commutator of order r",
        ),
    ]
    return {eq.id: eq for eq in eqs}


EQUATIONS: dict[str, EquationSpec] = _build_equations()


def get_equation(eq_id: str) -> EquationSpec:
    try:
        return EQUATIONS[eq_id]
    except KeyError:
        raise InputError(f"unknown equation id {eq_id!r}") from None


# ---------------------------------------------------------------------------
# Fraction-bound registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FractionBound:
    """A sum of exact rational multiples of |G| claimed to be strictly < |G|.

    Lone additive constants and single-prime terms are folded in as fractions
    of |G| instantiated at the minimal admissible prime tuple (the worst
    case), recorded in ``note``.
    """

    id: str
    terms: tuple[Fraction, ...]
    note: str = ""


def check_bound(bound: FractionBound) -> tuple[Fraction, bool]:
    """Exact sum of the terms and whether the strict < 1 claim holds."""
    total = sum(bound.terms, Fraction(0))
    return total, total < 1


def _fr(*pairs: tuple[int, int]) -> tuple[Fraction, ...]:
    return tuple(Fraction(a, b) for a, b in pairs)


# Minimal admissible tuples: the tau in {8, 9, 10} cases force p = 2 and
# 3 not dividing the order, so (2, 5, 7, 11) with |G| = 770 is the worst case
# for the folded constants.  The tau = 10, p > 2 chains use (3, 5, 7, 11)
# with |G| = 1155.
_G_EVEN = 770
_G_ODD = 1155

BOUNDS: dict[str, FractionBound] = {
    b.id: b
    for b in [
        FractionBound(
            id="lemma34-a",
            terms=_fr((1, 2), (1, 5), (1, 10), (1, 14), (2, 22), (1, _G_EVEN)),
            note="eight normal subgroups, qr > 2s; lone 1 folded as 1/770",
        ),
        FractionBound(
            id="lemma34-b",
            terms=_fr((1, 2), (1, 5), (1, 10), (1, 14), (2, 35), (1, _G_EVEN)),
            note="eight normal subgroups, qr < 2s; lone 1 folded as 1/770",
        ),
        FractionBound(
            id="lemma36-a",
            terms=_fr((1, 2), (1, 5), (1, 10), (1, 14), (1, 22), (3, 70)),
            note="nine normal subgroups, qr > 2s",
        ),
        FractionBound(
            id="lemma36-b",
            terms=_fr((1, 2), (1, 5), (1, 10), (1, 14), (1, 35), (3, 70)),
            note="nine normal subgroups, qr < 2s",
        ),
        FractionBound(
            id="lemma38-a",
            terms=_fr((1, 2), (1, 5), (1, 10), (1, 14), (1, 22), (4, 70)),
            note="ten normal subgroups, qr > 2s",
        ),
        FractionBound(
            id="lemma38-b",
            terms=_fr((1, 2), (1, 5), (1, 10), (1, 14), (1, 35), (4, 70)),
            note="ten normal subgroups, qr < 2s",
        ),
        FractionBound(
            id="rem33-b",
            terms=_fr((1, 3), (1, 5), (1, 15), (4, 21)),
            note="eight normal subgroups, odd smallest prime",
        ),
        FractionBound(
            id="rem37-chain-a",
            terms=_fr(
                (1, 3), (1, 5), (1, 11), (1, 15), (1, 33), (1, 55),
                (1, 105), (1, 165), (1, _G_ODD),
            ),
            note="ten normal subgroups, odd smallest prime, prime commutator, pqr > rs; "
            "1, r, s folded at (3,5,7,11)",
        ),
        FractionBound(
            id="rem37-chain-b",
            terms=_fr(
                (1, 3), (1, 5), (1, 15), (1, 17), (1, 51), (1, 85),
                (1, 105), (1, 165), (1, _G_ODD),
            ),
            note="ten normal subgroups, odd smallest prime, prime commutator, pqr < rs; "
            "1, r, s folded at (3,5,7,11)",
        ),
        FractionBound(
            id="rem37-chain-c",
            terms=_fr(
                (1, 3), (1, 5), (1, 15), (1, 21), (1, 33), (1, 105),
                (1, 165), (1, 231), (1, _G_ODD),
            ),
            note="ten normal subgroups, odd smallest prime, two-prime commutator, qr > ps; "
            "1, q, r folded at (3,5,7,11)",
        ),
        FractionBound(
            id="rem37-chain-d",
            terms=_fr(
                (1, 3), (1, 5), (1, 15), (1, 21), (1, 35), (1, 105),
                (1, 165), (1, 231), (1, _G_ODD),
            ),
            note="ten normal subgroups, odd smallest prime, two-prime commutator, qr < ps; "
            "1, q, r folded at (3,5,7,11)",
        ),
    ]
}


def get_bound(bound_id: str) -> FractionBound:
    try:
        return BOUNDS[bound_id]
    except KeyError:
        raise InputError(f"unknown bound id {bound_id!r}") from None
