"""Shared fixtures and an independent brute-force normal-subgroup oracle.

The oracle builds the *full* subgroup lattice as the join-closure of all
cyclic subgroups (every subgroup is the join of its cyclic subgroups), then
filters by an element-wise normality check.  The engine under test instead
works from normal closures of conjugacy classes, so agreement between the
two is meaningful.
"""

import pytest

from leinster import constructors
from leinster.groups import GroupTable


def cyclic_subgroup(G: GroupTable, g: int) -> frozenset:
    out = {G.identity}
    cur = g
    while cur not in out:
        out.add(cur)
        cur = G.mul(cur, g)
    return frozenset(out)


def join(G: GroupTable, a: frozenset, b: frozenset) -> frozenset:
    members = set(a | b)
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            for z in (G.mul(x, y), G.mul(y, x)):
                if z not in members:
                    members.add(z)
                    frontier.append(z)
    return frozenset(members)


def all_subgroups_bruteforce(G: GroupTable) -> set[frozenset]:
    subs = {cyclic_subgroup(G, g) for g in range(G.order)}
    worklist = list(subs)
    while worklist:
        a = worklist.pop()
        for b in list(subs):
            j = join(G, a, b)
            if j not in subs:
                subs.add(j)
                worklist.append(j)
    return subs


def is_normal_bruteforce(G: GroupTable, sub: frozenset) -> bool:
    return all(
        G.mul(G.mul(g, h), G.inv(g)) in sub for g in range(G.order) for h in sub
    )


def normal_orders_bruteforce(G: GroupTable) -> list[int]:
    return sorted(
        len(s) for s in all_subgroups_bruteforce(G) if is_normal_bruteforce(G, s)
    )


# Small groups exercised by several suites: a mix of abelian, dihedral,
# dicyclic, semidirect, and permutation-defined groups.
ORACLE_SPECS = [
    "C1",
    "C12",
    "C2xC2",
    "C2xC2xC3",
    "S3",
    "A4",
    "D8",
    "D12",
    "D20",
    "Dic3",
    "Dic4",
    "Dic5",
    "SD(5,4,2)",
    "SD(7,3,2)",
    "SD(7,6,3)",
    "SD(13,3,3)",
    "SD(7,8,6)",
    "S3xC5",
    "C3xD8",
]


@pytest.fixture(scope="session", params=ORACLE_SPECS)
def oracle_group(request):
    return constructors.build(constructors.parse_spec(request.param))
