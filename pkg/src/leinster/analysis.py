"""Per-group reports: sigma, tau, and the Leinster verdict.

Two computation paths produce the same report shape: the explicit engine
(normal_subgroups on a GroupTable) and the structural path for split
metacyclic groups and coprime direct products.  The structural path is the
authoritative one above the engine capacity; the two are cross-validated on
their overlap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError
from .groups import GroupTable, normal_subgroups
from .squarefree import MetacyclicDescriptor, descriptor_normal_orders, split_metacyclic_normal_orders


@dataclass(frozen=True)
class LeinsterReport:
    """Record of one group's normal-subgroup order data."""

    label: str
    order: int
    normal_orders: tuple[int, ...]  # sorted multiset
    sigma: int
    tau: int
    is_leinster: bool
    odd_normal_count: int

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "normal_orders": list(self.normal_orders),
            "sigma": self.sigma,
            "tau": self.tau,
            "leinster": self.is_leinster,
            "odd_normal_count": self.odd_normal_count,
        }

    @classmethod
    def from_json(cls, d: dict) -> "LeinsterReport":
        return cls(
            label=d["label"],
            order=d["order"],
            normal_orders=tuple(d["normal_orders"]),
            sigma=d["sigma"],
            tau=d["tau"],
            is_leinster=d["leinster"],
            odd_normal_count=d["odd_normal_count"],
        )


def report_from_orders(label: str, order: int, orders: list[int]) -> LeinsterReport:
    orders = sorted(orders)
    sigma = sum(orders)
    return LeinsterReport(
        label=label,
        order=order,
        normal_orders=tuple(orders),
        sigma=sigma,
        tau=len(orders),
        is_leinster=sigma == 2 * order,
        odd_normal_count=sum(1 for m in orders if m % 2 == 1),
    )


def analyze(G: GroupTable) -> LeinsterReport:
    """Engine path: enumerate the normal subgroups explicitly."""
    orders = [N.size for N in normal_subgroups(G)]
    return report_from_orders(G.label or f"<order {G.order}>", G.order, orders)


def analyze_descriptor(desc: MetacyclicDescriptor) -> LeinsterReport:
    """Structural path for a squarefree-order group."""
    return report_from_orders(desc.pretty_label(), desc.order, descriptor_normal_orders(desc))


def analyze_split_metacyclic(a: int, b: int, t: int, label: str = "") -> LeinsterReport:
    """Structural path for any split metacyclic group with gcd(a, b) = 1."""
    return report_from_orders(
        label or f"SD({a},{b},{t})", a * b, split_metacyclic_normal_orders(a, b, t)
    )


def analyze_cyclic(n: int) -> LeinsterReport:
    """Structural path for a cyclic group: one normal subgroup per divisor."""
    return analyze_split_metacyclic(n, 1, 1, label=f"C{n}")


def analyze_coprime_product(r1: LeinsterReport, r2: LeinsterReport) -> LeinsterReport:
    """Report for the direct product of two groups of coprime order.

    sigma and tau are multiplicative and the normal-subgroup orders are the
    pairwise products; this equals the engine result wherever both sides are
    computable.
    """
    if math.gcd(r1.order, r2.order) != 1:
        raise InputError(
            f"orders {r1.order} and {r2.order} are not coprime; "
            "the structural product rule does not apply"
        )
    if r1.order == 1:
        return r2
    if r2.order == 1:
        return r1
    orders = sorted(m1 * m2 for m1 in r1.normal_orders for m2 in r2.normal_orders)
    return report_from_orders(f"{r1.label}x{r2.label}", r1.order * r2.order, orders)
