"""Congruences as canonical partitions, generation, and the lattice Con(A)."""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .algebra import FiniteAlgebra, Morphism, compatibility_witness
from .errors import RangeViolation
from .lattice import FiniteLattice


def canonical(labels: Sequence[int]) -> tuple[int, ...]:
    """Map every point to the least point carrying the same label."""
    first: dict[int, int] = {}
    return tuple(first.setdefault(int(lab), x) for x, lab in enumerate(labels))


@dataclass(frozen=True)
class Congruence:
    """A partition of ``0..n-1``; ``parent[x]`` is the least member of x's class."""

    parent: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Congruence:
        return cls(canonical(labels))

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], n: int) -> Congruence:
        labels = list(range(n))
        for i, block in enumerate(classes):
            for x in block:
                labels[x] = n + i
        return cls.from_labels(labels)

    @classmethod
    def delta(cls, n: int) -> Congruence:
        return cls(tuple(range(n)))

    @classmethod
    def nabla(cls, n: int) -> Congruence:
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def num_classes(self) -> int:
        return sum(1 for x, p in enumerate(self.parent) if x == p)

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        blocks: dict[int, list[int]] = {}
        for x, p in enumerate(self.parent):
            blocks.setdefault(p, []).append(x)
        return tuple(tuple(b) for b in blocks.values())

    def relates(self, x: int, y: int) -> bool:
        return self.parent[x] == self.parent[y]

    def generators(self) -> Iterator[tuple[int, int]]:
        return ((p, x) for x, p in enumerate(self.parent) if p != x)

    def __le__(self, other: Congruence) -> bool:
        q = other.parent
        return all(q[x] == q[p] for x, p in enumerate(self.parent))

    def __lt__(self, other: Congruence) -> bool:
        return self != other and self <= other

    def meet(self, other: Congruence) -> Congruence:
        return Congruence.from_labels([p * self.n + q for p, q in zip(self.parent, other.parent)])

    def join(self, other: Congruence) -> Congruence:
        return Congruence(_close_pairs(self.n, (), itertools.chain(self.generators(), other.generators())))

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.classes]

    def __str__(self):
        return "|".join(",".join(map(str, c)) for c in self.classes)


def _close_pairs(n: int, tables: Sequence[np.ndarray], pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Least equivalence containing ``pairs`` and closed under the basic translations of ``tables``.

    Quick-find union with class lists (smaller class relabelled); every
    successful merge queues its pair, and each queued pair is pushed through
    every argument slot of every operation.
    """
    label = np.arange(n)
    members = {i: [i] for i in range(n)}
    work: list[tuple[int, int]] = []

    def merge(x, y):
        lx, ly = int(label[x]), int(label[y])
        if lx == ly:
            return
        if len(members[lx]) < len(members[ly]):
            lx, ly = ly, lx
        moved = members.pop(ly)
        label[moved] = lx
        members[lx].extend(moved)
        work.append((int(x), int(y)))

    for x, y in pairs:
        merge(x, y)
    slices = [(t, axis) for t in tables for axis in range(t.ndim)]
    while work:
        x, y = work.pop()
        for t, axis in slices:
            u = t.take(x, axis=axis).ravel()
            v = t.take(y, axis=axis).ravel()
            for i in np.nonzero(label[u] != label[v])[0]:
                merge(u[i], v[i])
    return canonical(label)


def cg(A: FiniteAlgebra, pairs: Iterable[tuple[int, int]]) -> Congruence:
    pairs = list(pairs)
    for x, y in pairs:
        if not (0 <= x < A.size and 0 <= y < A.size):
            raise RangeViolation(f"pair {(x, y)} is outside the universe of {A.name}")
    tables = [o.table for o in A.ops if o.arity > 0]
    return Congruence(_close_pairs(A.size, tables, pairs))


def is_congruence(A: FiniteAlgebra, theta: Congruence) -> bool:
    return theta.n == A.size and compatibility_witness(A, theta.parent) is None


def kernel(u: Morphism) -> Congruence:
    return Congruence.from_labels(u.map)


def _sort_key(theta: Congruence):
    return (-theta.num_classes, theta.parent)


@dataclass(frozen=True, eq=False)
class CongruenceLattice:
    algebra: FiniteAlgebra = field(repr=False)
    congruences: tuple[Congruence, ...]
    lattice: FiniteLattice = field(repr=False)
    principal: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.congruences)

    @property
    def delta(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.congruences) - 1

    @property
    def compact(self) -> tuple[int, ...]:
        # every congruence of a finite algebra is finitely generated
        return tuple(range(self.size))

    def index(self, theta: Congruence) -> int:
        return self._index[theta]

    @cached_property
    def _index(self) -> dict[Congruence, int]:
        return {c: i for i, c in enumerate(self.congruences)}

    def name(self, i: int) -> str:
        return self.lattice.names[i]


@lru_cache(maxsize=None)
def con_lattice(A: FiniteAlgebra) -> CongruenceLattice:
    """Principal congruences, closed under joins, with Delta added."""
    principal = {cg(A, [(a, b)]) for a, b in itertools.combinations(range(A.size), 2)}
    found = set(principal) | {Congruence.delta(A.size)}
    frontier = list(found)
    while frontier:
        new = []
        for x in frontier:
            for y in list(found):
                z = cg(A, itertools.chain(x.generators(), y.generators()))
                if z not in found:
                    found.add(z)
                    new.append(z)
        frontier = new
    elems = sorted(found, key=_sort_key)
    n = len(elems)
    leq = [[elems[i] <= elems[j] for j in range(n)] for i in range(n)]
    index = {c: i for i, c in enumerate(elems)}
    names = tuple(f"c{i}" for i in range(n))
    join = tuple(tuple(index[elems[i].join(elems[j])] for j in range(n)) for i in range(n))
    meet = tuple(tuple(index[elems[i].meet(elems[j])] for j in range(n)) for i in range(n))
    lat = FiniteLattice(names, tuple(map(tuple, leq)), join, meet, 0, n - 1)
    prin = tuple(sorted(index[c] for c in principal))
    return CongruenceLattice(A, tuple(elems), lat, prin)


def is_modular(L: CongruenceLattice) -> tuple[bool, tuple[Congruence, ...] | None]:
    w = L.lattice.pentagon_witness()
    if w is None:
        return True, None
    return False, tuple(L.congruences[i] for i in w)


def warn_if_not_modular(L: CongruenceLattice) -> bool:
    ok, witness = is_modular(L)
    if not ok:
        warnings.warn(
            f"Con({L.algebra.name}) is not modular (pentagon {[str(c) for c in witness]}); "
            "commutator results are outside the supported theory",
            stacklevel=3,
        )
    return ok


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length n."""
    if n == 0:
        yield ()
        return

    def grow(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from grow(prefix, max(top, b))
            prefix.pop()

    yield from grow([0], 0)


def brute_force_congruences(A: FiniteAlgebra) -> set[Congruence]:
    """Every partition of the universe that the operations respect (test oracle)."""
    out = set()
    for rgs in set_partitions(A.size):
        theta = Congruence.from_labels(rgs)
        if is_congruence(A, theta):
            out.add(theta)
    return out
