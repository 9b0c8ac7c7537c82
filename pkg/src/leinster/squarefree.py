"""Enumeration of all groups of a given squarefree order.

Every group of squarefree order is a split metacyclic extension
C_a x| C_b with gcd(a, b) = 1 and a faithful twist (a classical fact, not
re-proved here; the Holder counting formula is kept alongside as an
independent safety net, and the two are required to agree).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import constructors
from .errors import InputError
from .groups import GroupTable
from .numtheory import divisors, factorize, is_squarefree, order_is_exactly, prime_factors


@dataclass(frozen=True, order=True)
class MetacyclicDescriptor:
    """Canonical (a, b, t) data for one isomorphism class of squarefree order.

    a is the cyclic kernel order, b the acting cyclic order, t the twist.
    The twist acts faithfully (its multiplicative order mod a is exactly b),
    and is canonicalized to the minimum of {t^k mod a : gcd(k, b) = 1}.
    b = 1 encodes the cyclic group, with t = 1.
    """

    a: int
    b: int
    t: int

    def __post_init__(self):
        n = self.a * self.b
        if not is_squarefree(n):
            raise InputError(f"order {n} is not squarefree")
        if math.gcd(self.a, self.b) != 1:
            raise InputError(f"need gcd(a, b) = 1, got ({self.a}, {self.b})")
        if self.b == 1:
            if self.t != 1:
                raise InputError("the cyclic descriptor must carry t = 1")
            return
        if math.gcd(self.t, self.a) != 1 or not (1 <= self.t < self.a):
            raise InputError(f"twist {self.t} is not a reduced unit mod {self.a}")
        if not order_is_exactly(self.t, self.a, self.b):
            raise InputError(
                f"twist {self.t} does not act faithfully: order mod {self.a} != {self.b}"
            )
        if self.t != canonical_twist(self.a, self.b, self.t):
            raise InputError(f"twist {self.t} is not in canonical form")

    @property
    def order(self) -> int:
        return self.a * self.b

    @property
    def label(self) -> str:
        return f"SF({self.a},{self.b},{self.t})"

    def pretty_label(self) -> str:
        """Human-friendly structure string, e.g. S3xC5 or D30."""
        if self.b == 1:
            return f"C{self.a}"
        # split off the primes of a on which the twist acts trivially; they
        # form a central direct factor
        trivial = [p for p in prime_factors(self.a) if self.t % p == 1]
        a0 = math.prod(trivial) if trivial else 1
        a1 = self.a // a0
        t1 = self.t % a1
        if (a1, self.b) == (3, 2):
            core = "S3"
        elif self.b == 2 and t1 == a1 - 1:
            core = f"D{2 * a1}"
        else:
            core = f"SF({a1},{self.b},{t1})"
        return f"{core}xC{a0}" if a0 > 1 else core


def canonical_twist(a: int, b: int, t: int) -> int:
    """Minimum of the power orbit {t^k mod a : gcd(k, b) = 1}."""
    return min(pow(t, k, a) for k in range(1, b + 1) if math.gcd(k, b) == 1)


def _make_descriptor(a: int, b: int, t: int) -> MetacyclicDescriptor:
    if b == 1:
        return MetacyclicDescriptor(a, 1, 1)
    return MetacyclicDescriptor(a, b, canonical_twist(a, b, t))


@lru_cache(maxsize=8192)
def enumerate_squarefree(n: int) -> tuple[MetacyclicDescriptor, ...]:
    """One canonical descriptor per isomorphism class of order n, by (a, t)."""
    if n < 1 or not is_squarefree(n):
        raise InputError(f"{n} is not a squarefree positive integer")
    found = set()
    for a in divisors(n):
        b = n // a
        if b == 1:
            found.add(MetacyclicDescriptor(a, 1, 1))
            continue
        # a faithful action needs, for every prime l | b, some prime p | a
        # with p = 1 mod l
        a_primes = prime_factors(a)
        if any(all(p % ell != 1 for p in a_primes) for ell in prime_factors(b)):
            continue
        for t in range(2, a):
            if math.gcd(t, a) == 1 and order_is_exactly(t, a, b):
                found.add(_make_descriptor(a, b, t))
    return tuple(sorted(found, key=lambda d: (d.a, d.t)))


@lru_cache(maxsize=8192)
def holder_count(n: int) -> int:
    """Number of isomorphism classes of groups of squarefree order n,
    by the classical counting formula (independent of the enumeration)."""
    if n < 1 or not is_squarefree(n):
        raise InputError(f"{n} is not a squarefree positive integer")
    total = 0
    for d in divisors(n):
        m = n // d
        prod = 1
        for p in prime_factors(m):
            c = sum(1 for q in prime_factors(d) if q % p == 1)
            prod *= (p**c - 1) // (p - 1)
            if prod == 0:
                break
        total += prod
    return total


def realize(desc: MetacyclicDescriptor) -> GroupTable:
    """Explicit GroupTable for a descriptor (delegates to the constructors)."""
    if desc.b == 1:
        g = constructors.build(constructors.cyclic(desc.a))
    else:
        g = constructors.build(constructors.semidirect(desc.a, desc.b, desc.t))
    g.label = desc.pretty_label()
    return g


def split_metacyclic_normal_orders(a: int, b: int, t: int) -> list[int]:
    """Sorted multiset of normal-subgroup orders of x^a = y^b = 1,
    y x y^-1 = x^t with gcd(a, b) = 1 (faithfulness not required).

    The normal subgroups are exactly <x^d, y^e> for e | b and
    d | gcd(a, t^e - 1): coprimality of a and b pins the x-coset of any
    normal subgroup to the trivial one, and d | t^e - 1 is what conjugation
    by x demands.
    """
    if math.gcd(a, b) != 1:
        raise InputError(f"need gcd(a, b) = 1, got ({a}, {b})")
    t %= a
    if pow(t, b, a) != 1 % a:
        raise InputError(f"twist {t} does not satisfy t^{b} = 1 mod {a}")
    orders = []
    for f in divisors(b):
        e = b // f
        te = pow(t, e, a)
        g = a if te == 1 % a else math.gcd(a, te - 1)
        for d in divisors(g):
            orders.append((a // d) * f)
    return sorted(orders)


def descriptor_normal_orders(desc: MetacyclicDescriptor) -> list[int]:
    return split_metacyclic_normal_orders(desc.a, desc.b, desc.t)
