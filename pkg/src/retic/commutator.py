"""The commutator of congruences and the operations derived from it.

The commutator is computed through the pair algebra A(alpha): generate on it
the congruence D by the diagonal pairs ``((c,c),(d,d))`` with ``c beta d``;
then ``x [alpha,beta] y`` iff ``((x,x),(x,y))`` lies in D. Both orientations
are computed and must agree.

The index-level helpers (``residuum_index`` and friends) work on any object
exposing ``lattice`` and ``comm`` tables, so commutator structures reuse them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache


from .algebra import FiniteAlgebra, _require_congruence, pair_subalgebra
from .congruence import (
    Congruence,
    CongruenceLattice,
    _close_pairs,
    cg,
    con_lattice,
    warn_if_not_modular,
)
from .errors import CommutatorAsymmetry, NotACongruence, NotARing
from .lattice import FiniteLattice

RING_OPS = ("+", "-", "*", "0", "1")
LATTICE_OPS = ("meet", "join", "0", "1")


def _one_orientation(A: FiniteAlgebra, alpha: Congruence, beta: Congruence) -> Congruence:
    P, idx = pair_subalgebra(A, alpha)
    diag = [(idx.index(x, x), idx.index(p, p)) for p, x in beta.generators()]
    D = cg(P, diag)
    relation = [
        (x, y)
        for x in range(A.size)
        for y in range(A.size)
        if alpha.relates(x, y) and D.parent[idx.index(x, y)] == D.parent[idx.index(x, x)]
    ]
    result = Congruence(_close_pairs(A.size, (), relation))
    if sum(len(c) ** 2 for c in result.classes) != len(relation):
        raise CommutatorAsymmetry(
            f"{A.name}: the pair-algebra relation for ({alpha}, {beta}) is not an equivalence",
            (alpha, beta),
        )
    return result


def commutator(A: FiniteAlgebra, alpha: Congruence, beta: Congruence) -> Congruence:
    for theta in (alpha, beta):
        _require_congruence(A, theta)
    left = _one_orientation(A, alpha, beta)
    right = _one_orientation(A, beta, alpha)
    if left != right:
        raise CommutatorAsymmetry(
            f"{A.name}: orientations disagree on ({alpha}, {beta}): {left} vs {right}",
            (alpha, beta, left, right),
        )
    return left


@dataclass(frozen=True, eq=False)
class CommutatorTable:
    congruences: CongruenceLattice = field(repr=False)
    comm: tuple[tuple[int, ...], ...]
    modular: bool

    @property
    def lattice(self) -> FiniteLattice:
        return self.congruences.lattice

    def __call__(self, i: int, j: int) -> int:
        return self.comm[i][j]


@lru_cache(maxsize=None)
def commutator_table(A: FiniteAlgebra) -> CommutatorTable:
    L = con_lattice(A)
    modular = warn_if_not_modular(L)
    n = L.size
    comm = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            c = L.index(commutator(A, L.congruences[i], L.congruences[j]))
            comm[i][j] = comm[j][i] = c
    return CommutatorTable(L, tuple(map(tuple, comm)), modular)


# -- index-level operations over (lattice, comm) -------------------------------

def iterate_index(S, a: int, n: int) -> int:
    """``[a,a]`` iterated ``n`` times, each step squaring the previous result."""
    x = a
    for _ in range(n):
        x = S.comm[x][x]
    return x


def residuum_index(S, a: int, b: int) -> int:
    lat = S.lattice
    return lat.join_all(g for g in range(lat.size) if lat.le(S.comm[a][g], b))


def annihilator_index(S, a: int) -> int:
    return residuum_index(S, a, S.lattice.bottom)


def boolean_center_index(S) -> tuple[int, ...]:
    lat = S.lattice
    return tuple(
        a for a in range(lat.size)
        if lat.join[a][annihilator_index(S, a)] == lat.top
    )


def hyperarchimedean_index(S, compact) -> tuple[bool, dict[int, int | None]]:
    center = set(boolean_center_index(S))
    bound = S.lattice.size
    steps: dict[int, int | None] = {}
    for a in compact:
        steps[a] = next((k for k in range(1, bound + 1) if iterate_index(S, a, k) in center), None)
    return all(v is not None for v in steps.values()), steps


# -- algebra-level wrappers -------------------------------------------------------

def _idx(A: FiniteAlgebra, theta: Congruence) -> int:
    try:
        return con_lattice(A).index(theta)
    except KeyError:
        raise NotACongruence(f"{theta} is not a congruence of {A.name}") from None


def iterated_commutator(A: FiniteAlgebra, alpha: Congruence, n: int) -> Congruence:
    if n < 1:
        raise ValueError("n must be positive")
    T = commutator_table(A)
    return T.congruences.congruences[iterate_index(T, _idx(A, alpha), n)]


def residuum(A: FiniteAlgebra, alpha: Congruence, beta: Congruence) -> Congruence:
    T = commutator_table(A)
    return T.congruences.congruences[residuum_index(T, _idx(A, alpha), _idx(A, beta))]


def annihilator(A: FiniteAlgebra, alpha: Congruence) -> Congruence:
    return residuum(A, alpha, Congruence.delta(A.size))


def boolean_center(L: CongruenceLattice, T: CommutatorTable) -> list[Congruence]:
    """Complemented congruences; each must also satisfy ``[a, a^perp] = Delta``."""
    members = boolean_center_index(T)
    for a in members:
        perp = annihilator_index(T, a)
        if T.comm[a][perp] != L.delta:
            raise AssertionError(f"[{L.name(a)}, {L.name(perp)}] is not Delta")
    return [L.congruences[a] for a in members]


def is_hyperarchimedean(A: FiniteAlgebra) -> tuple[bool, dict[Congruence, int | None]]:
    T = commutator_table(A)
    L = T.congruences
    ok, steps = hyperarchimedean_index(T, L.compact)
    return ok, {L.congruences[a]: n for a, n in steps.items()}


# -- independent oracles ---------------------------------------------------------

def ring_axiom_witness(R: FiniteAlgebra) -> str | None:
    if not R.has_ops(RING_OPS):
        return f"missing ring operations {[o for o in RING_OPS if not R.has_ops([o])]}"
    add, neg, mul = R.op("+"), R.op("-"), R.op("*")
    zero, one = int(R.op("0")), int(R.op("1"))
    el = range(R.size)
    for x in el:
        if add[x, zero] != x or add[x, neg[x]] != zero:
            return f"additive identity/inverse fails at {x}"
        if mul[x, one] != x or mul[one, x] != x:
            return f"multiplicative identity fails at {x}"
    for x, y in itertools.product(el, el):
        if add[x, y] != add[y, x]:
            return f"addition not commutative at {(x, y)}"
    for x, y, z in itertools.product(el, el, el):
        if add[add[x, y], z] != add[x, add[y, z]]:
            return f"addition not associative at {(x, y, z)}"
        if mul[mul[x, y], z] != mul[x, mul[y, z]]:
            return f"multiplication not associative at {(x, y, z)}"
        if mul[x, add[y, z]] != add[mul[x, y], mul[x, z]] or mul[add[y, z], x] != add[mul[y, x], mul[z, x]]:
            return f"distributivity fails at {(x, y, z)}"
    return None


def lattice_axiom_witness(A: FiniteAlgebra) -> str | None:
    if not A.has_ops(LATTICE_OPS):
        return "missing lattice operations"
    m, j = A.op("meet"), A.op("join")
    bot, top = int(A.op("0")), int(A.op("1"))
    el = range(A.size)
    for x in el:
        if m[x, x] != x or j[x, x] != x or m[x, bot] != bot or j[x, top] != top:
            return f"idempotence/bounds fail at {x}"
    for x, y in itertools.product(el, el):
        if m[x, y] != m[y, x] or j[x, y] != j[y, x] or m[x, j[x, y]] != x or j[x, m[x, y]] != x:
            return f"commutativity/absorption fails at {(x, y)}"
    for x, y, z in itertools.product(el, el, el):
        if m[m[x, y], z] != m[x, m[y, z]] or j[j[x, y], z] != j[x, j[y, z]]:
            return f"associativity fails at {(x, y, z)}"
    return None


def _ideal_closure(R: FiniteAlgebra, gens) -> set[int]:
    add, mul = R.op("+"), R.op("*")
    ideal = {int(R.op("0"))} | set(gens)
    frontier = list(ideal)
    while frontier:
        new = set()
        for x in frontier:
            for r in range(R.size):
                new.update((int(mul[r, x]), int(mul[x, r])))
            for y in ideal:
                new.add(int(add[x, y]))
        new -= ideal
        ideal |= new
        frontier = list(new)
    return ideal


def ring_ideal_oracle(R: FiniteAlgebra, alpha: Congruence, beta: Congruence) -> Congruence:
    """Congruence of the ideal ``IJ + JI`` for the zero-classes I, J of alpha and beta."""
    problem = ring_axiom_witness(R)
    if problem:
        raise NotARing(f"{R.name}: {problem}")
    zero = int(R.op("0"))
    mul, add, neg = R.op("*"), R.op("+"), R.op("-")
    I = [x for x in range(R.size) if alpha.relates(x, zero)]
    J = [x for x in range(R.size) if beta.relates(x, zero)]
    gens = {int(mul[i, j]) for i in I for j in J} | {int(mul[j, i]) for i in I for j in J}
    ideal = _ideal_closure(R, gens)
    labels = [0] * R.size
    # x ~ y iff x - y lies in the ideal
    for x in range(R.size):
        labels[x] = min(y for y in range(R.size) if int(add[x, neg[y]]) in ideal)
    return Congruence.from_labels(labels)
