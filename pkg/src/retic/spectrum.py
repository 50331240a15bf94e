"""Prime elements, radicals, the Zariski topology and morphism adjoints."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Sequence

from .algebra import Morphism
from .congruence import Congruence, cg, con_lattice
from .errors import BasisViolation
from .structure import CommutatorStructure, as_structure

MATERIALIZE_LIMIT = 16


def is_prime(S: CommutatorStructure, phi: int, over: str = "compact") -> bool:
    """``phi`` is proper and ``[a,b] <= phi`` forces ``a <= phi`` or ``b <= phi``.

    ``over="compact"`` quantifies over the compact set only; ``over="all"``
    over every element.
    """
    if phi == S.top:
        return False
    pool = S.compact if over == "compact" else range(S.size)
    le = S.lattice.leq
    return not any(
        le[S.comm[a][b]][phi] and not le[a][phi] and not le[b][phi]
        for a, b in itertools.combinations_with_replacement(pool, 2)
    )


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    structure: CommutatorStructure = field(repr=False)
    primes: tuple[int, ...]
    maximals: tuple[int, ...]
    minimals: tuple[int, ...]
    radical: tuple[int, ...]
    semiprime: bool

    @cached_property
    def radicals(self) -> tuple[int, ...]:
        """The radical elements, i.e. the fixed points of ``radical``."""
        return tuple(x for x in range(len(self.radical)) if self.radical[x] == x)

    def frame_join(self, elems: Iterable[int]) -> int:
        return self.radical[self.structure.lattice.join_all(elems)]

    def zero_set(self, theta: int) -> frozenset[int]:
        """V(theta): the primes above theta."""
        le = self.structure.lattice.leq
        return frozenset(p for p in self.primes if le[theta][p])

    def basic_open(self, theta: int) -> frozenset[int]:
        """D(theta): the primes not above theta."""
        return frozenset(self.primes) - self.zero_set(theta)


@lru_cache(maxsize=None)
def _spectrum(S: CommutatorStructure) -> SpectrumReport:
    lat = S.lattice
    primes = tuple(p for p in range(S.size) if is_prime(S, p))
    radical = tuple(lat.meet_all(p for p in primes if lat.le(x, p)) for x in range(S.size))
    minimals = tuple(p for p in primes if not any(lat.lt(q, p) for q in primes))
    return SpectrumReport(
        S, primes, lat.coatoms, minimals, radical, radical[lat.bottom] == lat.bottom
    )


def spectrum(obj) -> SpectrumReport:
    return _spectrum(as_structure(obj))


# -- finite topologies -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FiniteTopology:
    """Topology on a finite point set, given by a generating family of opens.

    Everything is decided through minimal open neighbourhoods, so the open
    family itself is only materialized for small point sets.
    """

    points: tuple[Hashable, ...]
    generators: tuple[frozenset, ...] = field(repr=False)
    basis: tuple[frozenset, ...] = field(repr=False)
    notes: tuple[str, ...] = ()

    @cached_property
    def neighbourhood(self) -> dict[Hashable, frozenset]:
        full = frozenset(self.points)
        return {
            x: full.intersection(*[g for g in self.generators if x in g])
            for x in self.points
        }

    def is_open(self, U: Iterable) -> bool:
        U = frozenset(U)
        return U <= frozenset(self.points) and all(self.neighbourhood[x] <= U for x in U)

    def is_closed(self, F: Iterable) -> bool:
        return self.is_open(frozenset(self.points) - frozenset(F))

    def interior(self, U: Iterable) -> frozenset:
        U = frozenset(U)
        return frozenset(x for x in U if self.neighbourhood[x] <= U)

    def closure(self, F: Iterable) -> frozenset:
        F = frozenset(F)
        return frozenset(x for x in self.points if self.neighbourhood[x] & F)

    @property
    def materialized(self) -> bool:
        return len(self.points) <= MATERIALIZE_LIMIT

    @cached_property
    def opens(self) -> frozenset[frozenset]:
        if not self.materialized:
            raise ValueError(f"{len(self.points)} points: the open family is not materialized")
        family = {frozenset()}
        for x in self.points:
            family |= {U | self.neighbourhood[x] for U in family}
        return frozenset(family)

    def specialization(self) -> list[tuple[Hashable, Hashable]]:
        """Pairs ``(x, y)`` with ``x != y`` and ``x`` in the closure of ``{y}``."""
        return [
            (x, y) for x in self.points for y in self.points
            if x != y and y in self.neighbourhood[x]
        ]

    def is_t0(self) -> bool:
        return all(
            self.neighbourhood[x] != self.neighbourhood[y]
            for x, y in itertools.combinations(self.points, 2)
        )

    def is_t1(self) -> bool:
        return all(self.neighbourhood[x] == {x} for x in self.points)

    def is_discrete(self) -> bool:
        return self.is_t1()

    def is_hausdorff(self) -> bool:
        return all(
            not (self.neighbourhood[x] & self.neighbourhood[y])
            for x, y in itertools.combinations(self.points, 2)
        )

    def is_zero_dimensional(self) -> bool:
        """Every minimal neighbourhood is also closed (so clopens form a basis)."""
        return all(self.is_closed(self.neighbourhood[x]) for x in self.points)

    def subspace(self, points: Iterable) -> FiniteTopology:
        keep = [x for x in self.points if x in set(points)]
        ks = frozenset(keep)
        return FiniteTopology(
            tuple(keep),
            tuple(sorted({g & ks for g in self.generators}, key=_set_key)),
            tuple(sorted({b & ks for b in self.basis}, key=_set_key)),
        )

    def generates(self, family: Iterable[frozenset]) -> bool:
        """Do the members of ``family`` form a basis of this topology?"""
        family = [frozenset(f) for f in family]
        if not all(self.is_open(f) for f in family):
            return False
        return all(
            any(x in f and f <= self.neighbourhood[x] for f in family)
            for x in self.points
        )


def _set_key(s):
    return (len(s), sorted(map(repr, s)))


@lru_cache(maxsize=None)
def _zariski(S: CommutatorStructure) -> FiniteTopology:
    sp = _spectrum(S)
    generators = tuple(sp.basic_open(t) for t in range(S.size))
    basis = tuple(sp.basic_open(a) for a in S.compact)
    T = FiniteTopology(tuple(sp.primes), generators, basis)
    if not T.generates(basis):
        return FiniteTopology(T.points, generators, basis, ("compact basic opens do not form a basis",))
    return T


def zariski(obj, check_basis: bool = True) -> FiniteTopology:
    """Spec with opens D(theta); the designated basis is D(a) for compact a."""
    S = as_structure(obj)
    T = _zariski(S)
    if check_basis and T.notes:
        raise BasisViolation(f"{S.name}: {T.notes[0]}", [sorted(b) for b in T.basis])
    return T


@dataclass(frozen=True)
class SpectralReport:
    t0: bool
    compact: bool
    sober: bool
    basis_intersection_closed: bool
    notes: tuple[str, ...] = ()

    @property
    def spectral(self) -> bool:
        return self.t0 and self.compact and self.sober and self.basis_intersection_closed


def _irreducible(T: FiniteTopology, F: frozenset) -> bool:
    if not F:
        return False
    closed_parts = [T.closure({x}) for x in F]
    # F is a finite union of point closures; it is irreducible iff one of them is F
    return any(c == F for c in closed_parts)


def spectral_space_check(T: FiniteTopology) -> SpectralReport:
    notes = ["compact: automatic for a finite space"]
    if T.materialized:
        closed_sets = {frozenset(T.points) - U for U in T.opens}
        sober = all(
            sum(1 for x in F if T.closure({x}) == F) == 1
            for F in closed_sets if _irreducible(T, F)
        )
    else:
        sober = T.is_t0()
        notes.append("sober: finite T0 spaces are sober; closed sets not enumerated")
    basis = set(T.basis)
    closed = all(a & b in basis for a in T.basis for b in T.basis)
    return SpectralReport(T.is_t0(), True, sober, closed, tuple(notes))


# -- morphisms -----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Adjoints:
    """Index-level ``star`` (preimage, target -> source) and ``bullet`` (image, source -> target)."""

    morphism: Morphism = field(repr=False)
    star: tuple[int, ...]
    bullet: tuple[int, ...]

    def star_of(self, beta: Congruence) -> Congruence:
        LA, LB = con_lattice(self.morphism.source), con_lattice(self.morphism.target)
        return LA.congruences[self.star[LB.index(beta)]]

    def bullet_of(self, alpha: Congruence) -> Congruence:
        LA, LB = con_lattice(self.morphism.source), con_lattice(self.morphism.target)
        return LB.congruences[self.bullet[LA.index(alpha)]]


def preimage(u: Morphism, beta: Congruence) -> Congruence:
    return Congruence.from_labels([beta.parent[v] for v in u.map])


def image(u: Morphism, alpha: Congruence) -> Congruence:
    return cg(u.target, [(u.map[a], u.map[b]) for a, b in alpha.generators()])


@lru_cache(maxsize=None)
def morphism_adjoints(u: Morphism) -> Adjoints:
    LA, LB = con_lattice(u.source), con_lattice(u.target)
    star = tuple(LA.index(preimage(u, b)) for b in LB.congruences)
    bullet = tuple(LB.index(image(u, a)) for a in LA.congruences)
    for i, j in itertools.product(range(LA.size), range(LB.size)):
        if LB.lattice.le(bullet[i], j) != LA.lattice.le(i, star[j]):
            raise AssertionError(
                f"{u.name}: adjunction fails at ({LA.congruences[i]}, {LB.congruences[j]})"
            )
    return Adjoints(u, star, bullet)


def is_admissible(u: Morphism) -> bool:
    adj = morphism_adjoints(u)
    source_primes = set(spectrum(u.source).primes)
    return all(adj.star[p] in source_primes for p in spectrum(u.target).primes)


def names_of(S: CommutatorStructure, elems: Sequence[int]) -> list[str]:
    return [S.names[i] for i in sorted(elems)]
