"""Built-in algebras and structures, named morphisms, and the random generator."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .algebra import FiniteAlgebra, Morphism, check_morphism, make_algebra
from .errors import InputError
from .structure import CommutatorStructure, validate_structure


def zn(n: int) -> FiniteAlgebra:
    return make_algebra(
        f"Z{n}",
        n,
        [
            ("+", 2, lambda x, y: (x + y) % n),
            ("-", 1, lambda x: (-x) % n),
            ("*", 2, lambda x, y: (x * y) % n),
            ("0", 0, 0),
            ("1", 0, 1 % n),
        ],
        tags=["ring"],
    )


def _matrix_ring(name: str, elements: list[tuple[int, int, int, int]]) -> FiniteAlgebra:
    index = {m: i for i, m in enumerate(elements)}

    def add(x, y):
        return index[tuple((a + b) % 2 for a, b in zip(elements[x], elements[y]))]

    def mul(x, y):
        a, b, c, d = elements[x]
        e, f, g, h = elements[y]
        return index[((a * e + b * g) % 2, (a * f + b * h) % 2,
                      (c * e + d * g) % 2, (c * f + d * h) % 2)]

    return make_algebra(
        name,
        len(elements),
        [
            ("+", 2, add),
            ("-", 1, lambda x: x),
            ("*", 2, mul),
            ("0", 0, index[(0, 0, 0, 0)]),
            ("1", 0, index[(1, 0, 0, 1)]),
        ],
        tags=["ring"],
    )


def m2z2() -> FiniteAlgebra:
    """2x2 matrices over Z2; entry ``(a, b, c, d)`` is element ``8a + 4b + 2c + d``."""
    return _matrix_ring("M2(Z2)", list(itertools.product((0, 1), repeat=4)))


def t2z2() -> FiniteAlgebra:
    """Upper-triangular 2x2 matrices over Z2."""
    return _matrix_ring("T2(Z2)", [m for m in itertools.product((0, 1), repeat=4) if m[2] == 0])


def bounded_lattice(name: str, leq: list[list[bool]]) -> FiniteAlgebra:
    n = len(leq)

    def lub(x, y):
        ups = [z for z in range(n) if leq[x][z] and leq[y][z]]
        return next(z for z in ups if all(leq[z][w] for w in ups))

    def glb(x, y):
        downs = [z for z in range(n) if leq[z][x] and leq[z][y]]
        return next(z for z in downs if all(leq[w][z] for w in downs))

    bottom = next(z for z in range(n) if all(leq[z]))
    top = next(z for z in range(n) if all(leq[w][z] for w in range(n)))
    return make_algebra(
        name, n,
        [("meet", 2, glb), ("join", 2, lub), ("0", 0, bottom), ("1", 0, top)],
        tags=["lattice"],
    )


def chain(n: int) -> FiniteAlgebra:
    return bounded_lattice(f"C{n}", [[i <= j for j in range(n)] for i in range(n)])


def _order(n: int, pairs) -> list[list[bool]]:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        leq[0][i] = leq[i][n - 1] = True
    for a, b in pairs:
        leq[a][b] = True
    return leq


def diamond() -> FiniteAlgebra:
    return bounded_lattice("M3", _order(5, []))


def pentagon() -> FiniteAlgebra:
    # 0 < 1 < 2 < 4, 0 < 3 < 4
    return bounded_lattice("N5", _order(5, [(1, 2)]))


def trivial() -> FiniteAlgebra:
    return make_algebra("one", 1, [("+", 2, lambda x, y: 0), ("0", 0, 0)])


def free_set(n: int = 4) -> FiniteAlgebra:
    """A set with no operations; Con is the whole partition lattice (not modular)."""
    return FiniteAlgebra(f"set{n}", n, ())


STRICT_CHAIN = {
    "kind": "commutator-structure",
    "name": "strict-chain",
    "elements": ["0", "a", "1"],
    "leq": [["0", "a"], ["a", "1"]],
    "commutator": {},
    "compact": ["0", "a", "1"],
    "mode": "strict",
}

LAX_CHAIN = {
    "kind": "commutator-structure",
    "name": "lax-chain",
    "elements": ["0", "a", "b", "1"],
    "leq": [["0", "a"], ["a", "b"], ["b", "1"]],
    "commutator": {"b,b": "a"},
    "compact": ["0", "b", "1"],
    "mode": "lax",
}


def strict_chain() -> CommutatorStructure:
    return validate_structure(STRICT_CHAIN)


def lax_chain() -> CommutatorStructure:
    return validate_structure(LAX_CHAIN)


def algebras() -> list[FiniteAlgebra]:
    """The algebra members of the shipped corpus, in canonical order."""
    return (
        [zn(n) for n in range(2, 13)]
        + [t2z2(), m2z2()]
        + [chain(n) for n in range(2, 6)]
        + [diamond(), pentagon(), trivial()]
    )


def structures() -> list[CommutatorStructure]:
    return [strict_chain(), lax_chain()]


def reduction(A: FiniteAlgebra, B: FiniteAlgebra) -> Morphism:
    """``x -> x mod |B|`` between two Zn algebras."""
    return check_morphism([x % B.size for x in range(A.size)], A, B, f"{A.name}->{B.name}")


def named_morphisms() -> list[Morphism]:
    return [reduction(zn(12), zn(4)), reduction(zn(4), zn(2))]


# -- random lax structures -------------------------------------------------------

@dataclass
class Corpus:
    name: str
    algebras: list[FiniteAlgebra] = field(default_factory=list)
    structures: list[CommutatorStructure] = field(default_factory=list)
    morphisms: list[Morphism] = field(default_factory=list)


def _random_lattice(rng: random.Random, size: int) -> list[list[bool]] | None:
    """A random bounded order on ``0..size-1`` (0 bottom, size-1 top); None if not a lattice."""
    from .lattice import FiniteLattice, reflexive_transitive_closure
    from .errors import LatticeLawViolation

    pairs = [(0, i) for i in range(size)] + [(i, size - 1) for i in range(size)]
    pairs += [(i, j) for i in range(1, size - 1) for j in range(i + 1, size - 1) if rng.random() < 0.4]
    leq = reflexive_transitive_closure(size, pairs)
    try:
        FiniteLattice.from_order([str(i) for i in range(size)], leq)
    except LatticeLawViolation:
        return None
    return leq


def _random_candidate(rng: random.Random, max_size: int, index: int) -> dict:
    from .lattice import FiniteLattice

    # larger sizes are rejected more often, so draw them more often
    sizes = list(range(2, max_size + 1))
    size = rng.choices(sizes, weights=[k * k for k in sizes])[0]
    leq = None
    while leq is None:
        leq = _random_lattice(rng, size)
    names = [f"e{i}" for i in range(size)]
    lat = FiniteLattice.from_order(names, leq)
    top, bottom = lat.top, lat.bottom
    # shrink the meet at a few pairs; [1,1] = 1 and [x,0] = 0 are left alone
    pairs = [(i, j) for i in range(size) for j in range(i, size)
             if bottom not in (i, j) and not i == j == top]
    comm = {}
    for i, j in rng.sample(pairs, min(len(pairs), rng.choice((0, 1, 1, 2, 3)))):
        below = sorted(lat.downset(lat.meet[i][j]))
        comm[f"{names[i]},{names[j]}"] = names[rng.choice(below)]
    middle = [x for x in range(size) if x not in (bottom, top)]
    compact = {bottom, top} | {x for x in middle if rng.random() < 0.6}
    compact = {lat.join[a][b] for a in compact for b in compact}
    while True:
        closed = {lat.join[a][b] for a in compact for b in compact}
        if closed == compact:
            break
        compact = closed
    return {
        "kind": "commutator-structure",
        "name": f"lax-random-{index:03d}",
        "elements": names,
        "leq": [[names[a], names[b]] for a in range(size) for b in range(size) if a != b and leq[a][b]],
        "commutator": comm,
        "compact": [names[x] for x in sorted(compact)],
        "mode": "lax",
    }


def random_lax_structures(count: int = 100, max_size: int = 6, seed: int = 1) -> list[CommutatorStructure]:
    """Draw candidates until ``count`` of them pass validation; deterministic for a seed."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        raw = _random_candidate(rng, max_size, len(out))
        try:
            out.append(validate_structure(raw))
        except InputError:
            continue
    return out


FAMILIES = ("rings-zn", "lattice-chains", "random-lax-structures")


def generate_corpus(family: str, *, up_to: int | None = None, count: int = 100,
                    max_size: int = 6, seed: int = 1) -> Corpus:
    if family == "rings-zn":
        top = up_to or 12
        return Corpus(family, algebras=[zn(n) for n in range(2, top + 1)])
    if family == "lattice-chains":
        top = up_to or 5
        return Corpus(family, algebras=[chain(n) for n in range(2, top + 1)])
    if family == "random-lax-structures":
        return Corpus(family, structures=random_lax_structures(count, max_size, seed))
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def shipped() -> Corpus:
    return Corpus(
        "shipped",
        algebras=algebras(),
        structures=structures() + random_lax_structures(5, 6, 1),
        morphisms=named_morphisms(),
    )
