"""Finite lattices stored as explicit order, join and meet tables.

Elements are the integers ``0..n-1``; ``names`` only matter for display and
serialization. Congruence lattices, commutator structures and reticulations
all sit on top of :class:`FiniteLattice`.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .errors import LatticeLawViolation


def reflexive_transitive_closure(n: int, pairs: Iterable[tuple[int, int]]) -> list[list[bool]]:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        leq[a][b] = True
    for k in range(n):
        row_k = leq[k]
        for i in range(n):
            if leq[i][k]:
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return leq


def topological_order(names: Sequence[str], leq: Sequence[Sequence[bool]]) -> list[int]:
    """Linear extension of ``leq``; among available elements the smallest name wins."""
    n = len(names)
    below = [sum(1 for j in range(n) if j != i and leq[j][i]) for i in range(n)]
    heap = [(names[i], i) for i in range(n) if below[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for j in range(n):
            if j != i and leq[i][j]:
                below[j] -= 1
                if below[j] == 0:
                    heapq.heappush(heap, (names[j], j))
    if len(order) != n:
        raise LatticeLawViolation("order relation has a cycle")
    return order


@dataclass(frozen=True)
class FiniteLattice:
    names: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...] = field(repr=False)
    join: tuple[tuple[int, ...], ...] = field(repr=False)
    meet: tuple[tuple[int, ...], ...] = field(repr=False)
    bottom: int
    top: int

    @classmethod
    def from_order(cls, names: Sequence[str], leq: Sequence[Sequence[bool]]) -> FiniteLattice:
        n = len(names)
        if n == 0:
            raise LatticeLawViolation("a lattice needs at least one element")
        for i in range(n):
            for j in range(i + 1, n):
                if leq[i][j] and leq[j][i]:
                    raise LatticeLawViolation(
                        f"order is not antisymmetric: {names[i]} and {names[j]}",
                        (names[i], names[j]),
                    )
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                ups = [z for z in range(n) if leq[a][z] and leq[b][z]]
                lub = [z for z in ups if all(leq[z][w] for w in ups)]
                downs = [z for z in range(n) if leq[z][a] and leq[z][b]]
                glb = [z for z in downs if all(leq[w][z] for w in downs)]
                if not lub or not glb:
                    kind = "join" if not lub else "meet"
                    raise LatticeLawViolation(
                        f"no {kind} for {names[a]} and {names[b]}", (names[a], names[b])
                    )
                join[a][b] = join[b][a] = lub[0]
                meet[a][b] = meet[b][a] = glb[0]
        bottom = reduce(lambda x, y: meet[x][y], range(n))
        top = reduce(lambda x, y: join[x][y], range(n))
        return cls(
            tuple(names),
            tuple(tuple(bool(v) for v in row) for row in leq),
            tuple(map(tuple, join)),
            tuple(map(tuple, meet)),
            bottom,
            top,
        )

    @property
    def size(self) -> int:
        return len(self.names)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    def join_all(self, elems: Iterable[int]) -> int:
        return reduce(lambda x, y: self.join[x][y], elems, self.bottom)

    def meet_all(self, elems: Iterable[int]) -> int:
        return reduce(lambda x, y: self.meet[x][y], elems, self.top)

    def downset(self, x: int) -> frozenset[int]:
        return frozenset(z for z in range(self.size) if self.leq[z][x])

    def upset(self, x: int) -> frozenset[int]:
        return frozenset(z for z in range(self.size) if self.leq[x][z])

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse diagram edges ``(lower, upper)``."""
        n = self.size
        edges = []
        for a in range(n):
            for b in range(n):
                if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in range(n)):
                    edges.append((a, b))
        return tuple(edges)

    @cached_property
    def coatoms(self) -> tuple[int, ...]:
        return tuple(a for a, b in self.covers if b == self.top)

    def complements(self, x: int) -> tuple[int, ...]:
        return tuple(
            y for y in range(self.size)
            if self.join[x][y] == self.top and self.meet[x][y] == self.bottom
        )

    @cached_property
    def boolean_center(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.size) if self.complements(x))

    def distributivity_witness(self) -> tuple[int, int, int] | None:
        j, m = self.join, self.meet
        for a, b, c in itertools.product(range(self.size), repeat=3):
            if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
                return (a, b, c)
        return None

    def pentagon_witness(self) -> tuple[int, int, int, int, int] | None:
        """Five elements forming N5 as ``(bottom, a, b, c, top)`` with a < b, or None."""
        j, m = self.join, self.meet
        n = self.size
        for a in range(n):
            for b in range(n):
                if not self.lt(a, b):
                    continue
                for c in range(n):
                    if m[a][c] == m[b][c] and j[a][c] == j[b][c]:
                        return (m[a][c], a, b, c, j[a][c])
        return None

    def ideals(self) -> tuple[frozenset[int], ...]:
        """All lattice ideals, via the principal downsets (finite lattices only)."""
        return tuple(self.downset(x) for x in range(self.size))

    def ideal_generated(self, elems: Iterable[int]) -> frozenset[int]:
        return self.downset(self.join_all(elems))


def brute_force_ideals(lat: FiniteLattice) -> set[frozenset[int]]:
    """Nonempty downsets closed under binary join, by subset enumeration."""
    n = lat.size
    found = set()
    for mask in range(1, 1 << n):
        s = [i for i in range(n) if mask >> i & 1]
        members = frozenset(s)
        if any(lat.le(z, x) and z not in members for x in s for z in range(n)):
            continue
        if all(lat.join[a][b] in members for a in s for b in s):
            found.add(members)
    return found


def order_isomorphism(leq1: Sequence[Sequence[bool]], leq2: Sequence[Sequence[bool]]) -> list[int] | None:
    """Backtracking search for an order isomorphism; returns the image list or None."""
    n = len(leq1)
    if n != len(leq2):
        return None

    def profile(leq, i):
        return (sum(leq[j][i] for j in range(n)), sum(leq[i][j] for j in range(n)))

    p1 = [profile(leq1, i) for i in range(n)]
    p2 = [profile(leq2, i) for i in range(n)]
    if sorted(p1) != sorted(p2):
        return None
    order = sorted(range(n), key=lambda i: p1[i])
    image = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        i = order[k]
        for cand in range(n):
            if used[cand] or p2[cand] != p1[i]:
                continue
            if all(
                leq1[i][j] == leq2[cand][image[j]] and leq1[j][i] == leq2[image[j]][cand]
                for j in order[:k]
            ):
                image[i] = cand
                used[cand] = True
                if extend(k + 1):
                    return True
                used[cand] = False
        image[i] = -1
        return False

    return image if extend(0) else None


def product_order(leq1, leq2) -> list[list[bool]]:
    n1, n2 = len(leq1), len(leq2)
    return [
        [leq1[a // n2][b // n2] and leq2[a % n2][b % n2] for b in range(n1 * n2)]
        for a in range(n1 * n2)
    ]
