"""Abstract commutator structures: a finite lattice with a commutator and a compact set.

Both backends end up here. ``from_finite_algebra`` wraps Con(A) with its
commutator table; ``validate_structure`` reads a hand-written lattice. Strict
structures are join-dense in their compact set, which in the finite case
forces every element to be compact; lax structures drop that requirement and
are the only finite way to get a proper compact subset.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Mapping

from .algebra import FiniteAlgebra
from .commutator import commutator_table
from .congruence import CongruenceLattice
from .errors import (
    CommutatorAxiomViolation,
    CompactSetViolation,
    JoinDensityViolation,
    LatticeLawViolation,
    ParseError,
)
from .lattice import FiniteLattice, reflexive_transitive_closure, topological_order

MODES = ("strict", "lax")


@dataclass(frozen=True, eq=False)
class CommutatorStructure:
    name: str
    lattice: FiniteLattice = field(repr=False)
    comm: tuple[tuple[int, ...], ...] = field(repr=False)
    compact: tuple[int, ...]
    principal: tuple[int, ...]
    mode: str = "strict"
    algebra: FiniteAlgebra | None = field(default=None, repr=False)
    congruences: CongruenceLattice | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def names(self) -> tuple[str, ...]:
        return self.lattice.names

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def strict(self) -> bool:
        return self.mode == "strict"

    @property
    def label(self) -> str:
        return "strict" if self.strict else "lax (formal model)"

    @cached_property
    def compact_set(self) -> frozenset[int]:
        return frozenset(self.compact)

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise ParseError(f"{self.name}: unknown element {name!r}") from None

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    def le(self, a: int, b: int) -> bool:
        return self.lattice.leq[a][b]

    def join(self, a: int, b: int) -> int:
        return self.lattice.join[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.lattice.meet[a][b]

    def bracket(self, a: int, b: int) -> int:
        return self.comm[a][b]

    def key(self):
        """Name-level description; two structures with equal keys are the same input."""
        n = self.names
        return (
            frozenset((n[a], n[b]) for a in range(self.size) for b in range(self.size) if self.le(a, b)),
            frozenset((n[a], n[b], n[self.comm[a][b]]) for a in range(self.size) for b in range(self.size)),
            frozenset(n[k] for k in self.compact),
            frozenset(n[p] for p in self.principal),
            self.mode,
        )


# -- axiom checks ----------------------------------------------------------------

def _commutator_violation(lat: FiniteLattice, comm) -> tuple[str, tuple] | None:
    n = lat.size
    nm = lat.names
    for a, b in itertools.product(range(n), repeat=2):
        if comm[a][b] != comm[b][a]:
            return "commutator is not commutative", (nm[a], nm[b])
        if not lat.le(comm[a][b], lat.meet[a][b]):
            return "commutator exceeds the meet", (nm[a], nm[b])
    for a, a2, b in itertools.product(range(n), repeat=3):
        if lat.le(a, a2) and not lat.le(comm[a][b], comm[a2][b]):
            return "commutator is not monotone", (nm[a], nm[a2], nm[b])
        if comm[a][lat.join[a2][b]] != lat.join[comm[a][a2]][comm[a][b]]:
            return "commutator does not distribute over joins", (nm[a], nm[a2], nm[b])
    if comm[lat.top][lat.top] != lat.top:
        return "[top, top] must be top", (nm[lat.top], nm[lat.top])
    return None


def _check_structure(lat: FiniteLattice, comm, compact, principal, mode: str, name: str) -> None:
    problem = _commutator_violation(lat, comm)
    if problem:
        raise CommutatorAxiomViolation(f"{name}: {problem[0]} at {problem[1]}", problem[1])
    nm = lat.names
    K = set(compact)
    for required in (lat.bottom, lat.top):
        if required not in K:
            raise CompactSetViolation(f"{name}: compact set must contain {nm[required]}", (nm[required],))
    for a, b in itertools.combinations(sorted(K), 2):
        if lat.join[a][b] not in K:
            raise CompactSetViolation(
                f"{name}: compact set is not closed under join at ({nm[a]}, {nm[b]})", (nm[a], nm[b])
            )
    for p in principal:
        if p not in K:
            raise CompactSetViolation(f"{name}: principal element {nm[p]} is not compact", (nm[p],))
    for k in sorted(K):
        if lat.join_all(p for p in principal if lat.le(p, k)) != k:
            raise CompactSetViolation(f"{name}: {nm[k]} is not a join of principal elements", (nm[k],))
    if mode == "strict":
        for x in range(lat.size):
            if lat.join_all(k for k in K if lat.le(k, x)) != x:
                raise JoinDensityViolation(
                    f"{name}: {nm[x]} is not the join of the compact elements below it", (nm[x],)
                )
        # a finite join-dense, join-closed compact set is everything
        assert len(K) == lat.size, f"{name}: strict structure with a proper compact set"


@lru_cache(maxsize=None)
def from_finite_algebra(A: FiniteAlgebra) -> CommutatorStructure:
    T = commutator_table(A)
    L = T.congruences
    principal = tuple(sorted(set(L.principal) | {L.delta}))
    S = CommutatorStructure(
        A.name, L.lattice, T.comm, L.compact, principal, "strict", algebra=A, congruences=L
    )
    _check_structure(S.lattice, S.comm, S.compact, S.principal, S.mode, S.name)
    return S


def as_structure(obj) -> CommutatorStructure:
    if isinstance(obj, CommutatorStructure):
        return obj
    if isinstance(obj, FiniteAlgebra):
        return from_finite_algebra(obj)
    raise TypeError(f"expected an algebra or a commutator structure, got {type(obj).__name__}")


# -- file format -------------------------------------------------------------------

def _names(raw, key: str, known: dict[str, int] | None, where: str) -> list:
    value = raw.get(key)
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ParseError(f"{where}: {key!r} must be a list of element names")
    if known is not None:
        for x in value:
            if x not in known:
                raise ParseError(f"{where}: {key!r} mentions unknown element {x!r}")
    return value


def validate_structure(raw: str | Mapping, mode: str | None = None) -> CommutatorStructure:
    """Parse and check a structure description; ``mode`` overrides the one in the file."""
    if isinstance(raw, str):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(raw, Mapping):
        raise ParseError("structure description must be an object")
    if raw.get("kind") != "commutator-structure":
        raise ParseError(f"expected kind 'commutator-structure', got {raw.get('kind')!r}")
    name = raw.get("name", "structure")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    mode = mode or raw.get("mode", "strict")
    if mode not in MODES:
        raise ParseError(f"{name}: mode must be one of {MODES}, got {mode!r}")

    given = _names(raw, "elements", None, name)
    if not given:
        raise LatticeLawViolation(f"{name}: a lattice needs at least one element")
    if len(set(given)) != len(given):
        raise ParseError(f"{name}: duplicate element names")
    pos = {x: i for i, x in enumerate(given)}
    pairs = raw.get("leq", [])
    if not isinstance(pairs, list):
        raise ParseError(f"{name}: 'leq' must be a list of pairs")
    edges = []
    for p in pairs:
        if not (isinstance(p, list) and len(p) == 2 and all(x in pos for x in p)):
            raise ParseError(f"{name}: bad order pair {p!r}")
        edges.append((pos[p[0]], pos[p[1]]))
    leq0 = reflexive_transitive_closure(len(given), edges)

    # canonical order: linear extension, ties broken by name
    order = topological_order(given, leq0)
    names = [given[i] for i in order]
    pos = {x: i for i, x in enumerate(names)}
    leq = [[leq0[order[i]][order[j]] for j in range(len(order))] for i in range(len(order))]
    lat = FiniteLattice.from_order(names, leq)

    comm = [list(row) for row in lat.meet]
    overrides = raw.get("commutator", {})
    if not isinstance(overrides, Mapping):
        raise ParseError(f"{name}: 'commutator' must map 'x,y' to an element")
    seen: dict[tuple[int, int], int] = {}
    for k, v in overrides.items():
        parts = k.split(",") if isinstance(k, str) else []
        if len(parts) != 2 or not all(p.strip() in pos for p in parts) or v not in pos:
            raise ParseError(f"{name}: bad commutator entry {k!r}: {v!r}")
        a, b = (pos[p.strip()] for p in parts)
        c = pos[v]
        for key in ((a, b), (b, a)):
            if seen.get(key, c) != c:
                raise CommutatorAxiomViolation(
                    f"{name}: commutator is not commutative at ({names[a]}, {names[b]})",
                    (names[a], names[b]),
                )
            seen[key] = c
            comm[key[0]][key[1]] = c

    compact = sorted(pos[x] for x in set(_names(raw, "compact", pos, name)))
    if "principal" in raw and raw["principal"] is not None:
        principal = sorted(pos[x] for x in set(_names(raw, "principal", pos, name)))
    else:
        principal = list(compact)
    comm_t = tuple(map(tuple, comm))
    _check_structure(lat, comm_t, compact, principal, mode, name)
    return CommutatorStructure(name, lat, comm_t, tuple(compact), tuple(principal), mode)


def structure_to_dict(S: CommutatorStructure) -> dict:
    nm = S.names
    lat = S.lattice
    overrides = {}
    for a in range(S.size):
        for b in range(a, S.size):
            if S.comm[a][b] != lat.meet[a][b]:
                overrides[f"{nm[a]},{nm[b]}"] = nm[S.comm[a][b]]
    out = {
        "kind": "commutator-structure",
        "name": S.name,
        "mode": S.mode,
        "elements": list(nm),
        "leq": [[nm[a], nm[b]] for a, b in lat.covers],
        "commutator": overrides,
        "compact": [nm[k] for k in S.compact],
    }
    if tuple(S.principal) != tuple(S.compact):
        out["principal"] = [nm[p] for p in S.principal]
    return out
