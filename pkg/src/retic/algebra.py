"""Finite algebras over the universe ``{0..n-1}`` and the constructions on them."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    ArityMismatch,
    NotACongruence,
    NotAMorphism,
    ParseError,
    RangeViolation,
    SignatureMismatch,
)


@dataclass(frozen=True)
class Signature:
    symbols: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [s for s, _ in self.symbols]
        if len(set(names)) != len(names):
            raise ParseError(f"duplicate operation names in signature: {names}")
        for name, arity in self.symbols:
            if not isinstance(arity, int) or isinstance(arity, bool) or arity < 0:
                raise ArityMismatch(f"operation {name!r} has invalid arity {arity!r}")

    def arity(self, name: str) -> int:
        return dict(self.symbols)[name]

    def same_as(self, other: Signature) -> bool:
        return dict(self.symbols) == dict(other.symbols)


@dataclass(frozen=True, eq=False)
class Operation:
    name: str
    arity: int
    table: np.ndarray = field(repr=False)


def _freeze(table) -> np.ndarray:
    arr = np.array(table, dtype=np.int64)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """Operation tables are numpy arrays of shape ``(n,) * arity``.

    Equality and hashing look only at the size and the tables, so isomorphic
    copies built twice share cached lattices.
    """

    name: str
    size: int
    ops: tuple[Operation, ...]
    tags: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.size < 1:
            raise RangeViolation(f"{self.name}: size must be positive, got {self.size}")
        Signature(tuple((op.name, op.arity) for op in self.ops))
        for op in self.ops:
            t = op.table
            if t.ndim != op.arity or any(d != self.size for d in t.shape):
                raise ArityMismatch(
                    f"{self.name}: table of {op.name!r} has shape {t.shape}, "
                    f"expected {(self.size,) * op.arity}"
                )
            if t.size and (t.min() < 0 or t.max() >= self.size):
                bad = tuple(int(i) for i in np.argwhere((t < 0) | (t >= self.size))[0])
                raise RangeViolation(
                    f"{self.name}: entry {int(t[bad]) if bad else int(t)} of {op.name!r} "
                    f"at {bad} is outside 0..{self.size - 1}",
                    (op.name, bad),
                )

    @property
    def signature(self) -> Signature:
        return Signature(tuple((op.name, op.arity) for op in self.ops))

    def op(self, name: str) -> np.ndarray:
        for o in self.ops:
            if o.name == name:
                return o.table
        raise KeyError(name)

    def has_ops(self, names: Iterable[str]) -> bool:
        have = {o.name for o in self.ops}
        return all(n in have for n in names)

    @cached_property
    def key(self):
        return (self.size, tuple((o.name, o.arity, o.table.tobytes()) for o in self.ops))

    def __eq__(self, other):
        return isinstance(other, FiniteAlgebra) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        sig = ", ".join(f"{n}/{a}" for n, a in self.signature.symbols)
        return f"FiniteAlgebra({self.name!r}, size={self.size}, ops=[{sig}])"


def make_algebra(name: str, size: int, ops: Sequence[tuple[str, int, Callable | int]],
                 tags: Iterable[str] = ()) -> FiniteAlgebra:
    """Tabulate Python functions; a constant is given as a bare int."""
    built = []
    for op_name, arity, fn in ops:
        if arity == 0:
            table = fn() if callable(fn) else fn
        else:
            table = np.zeros((size,) * arity, dtype=np.int64)
            for args in itertools.product(range(size), repeat=arity):
                table[args] = fn(*args)
        built.append(Operation(op_name, arity, _freeze(table)))
    return FiniteAlgebra(name, size, tuple(built), frozenset(tags))


def _shape(x, depth: int, where: str) -> list:
    if depth == 0:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ParseError(f"{where}: expected an element index, got {x!r}")
        return []
    if not isinstance(x, list):
        raise ArityMismatch(f"{where}: table nesting is shallower than the arity")
    inner = [_shape(item, depth - 1, where) for item in x]
    if any(s != inner[0] for s in inner[1:]):
        raise ArityMismatch(f"{where}: ragged table")
    return [len(x)] + (inner[0] if inner else [])


def validate_algebra(raw: str | Mapping) -> FiniteAlgebra:
    if isinstance(raw, (str, bytes)):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, Mapping):
        raise ParseError("algebra description must be an object")
    if raw.get("kind", "algebra") != "algebra":
        raise ParseError(f"kind is {raw.get('kind')!r}, expected 'algebra'")
    name = raw.get("name", "A")
    size = raw.get("size")
    if isinstance(size, bool) or not isinstance(size, int):
        raise ParseError(f"{name}: size must be an integer")
    if size < 1:
        raise RangeViolation(f"{name}: size must be positive")
    ops_raw = raw.get("ops")
    if not isinstance(ops_raw, list):
        raise ParseError(f"{name}: 'ops' must be a list")
    ops = []
    for entry in ops_raw:
        if not isinstance(entry, Mapping) or "name" not in entry or "arity" not in entry:
            raise ParseError(f"{name}: every op needs 'name' and 'arity'")
        op_name, arity = entry["name"], entry["arity"]
        if isinstance(arity, bool) or not isinstance(arity, int) or arity < 0:
            raise ArityMismatch(f"{name}: op {op_name!r} has invalid arity {arity!r}")
        if "table" not in entry:
            raise ParseError(f"{name}: op {op_name!r} has no table")
        where = f"{name}: op {op_name!r}"
        shape = _shape(entry["table"], arity, where)
        if shape != [size] * arity:
            raise ArityMismatch(f"{where}: table shape {shape} does not match arity {arity} over size {size}")
        table = np.array(entry["table"], dtype=np.int64)
        bad = np.argwhere((table < 0) | (table >= size))
        if bad.size:
            at = tuple(int(i) for i in bad[0])
            raise RangeViolation(
                f"{where}: entry {int(table[at])} at {list(at)} is outside 0..{size - 1}", (op_name, at)
            )
        ops.append(Operation(op_name, arity, _freeze(table)))
    tags = raw.get("tags", [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise ParseError(f"{name}: 'tags' must be a list of strings")
    return FiniteAlgebra(name, size, tuple(ops), frozenset(tags))


def algebra_to_dict(A: FiniteAlgebra) -> dict:
    out = {"kind": "algebra", "name": A.name, "size": A.size}
    if A.tags:
        out["tags"] = sorted(A.tags)
    out["ops"] = [
        {"name": o.name, "arity": o.arity, "table": o.table.tolist()} for o in A.ops
    ]
    return out


def _grid(index: np.ndarray, arity: int):
    return np.ix_(*([index] * arity))


def product(A: FiniteAlgebra, B: FiniteAlgebra) -> FiniteAlgebra:
    """Componentwise product; the pair ``(a, b)`` is element ``a * |B| + b``."""
    if not A.signature.same_as(B.signature):
        raise SignatureMismatch(f"{A.name} and {B.name} have different signatures")
    m = B.size
    first = np.arange(A.size * m) // m
    second = np.arange(A.size * m) % m
    ops = []
    for o in A.ops:
        ta, tb = o.table, B.op(o.name)
        if o.arity == 0:
            table = int(ta) * m + int(tb)
        else:
            table = ta[_grid(first, o.arity)] * m + tb[_grid(second, o.arity)]
        ops.append(Operation(o.name, o.arity, _freeze(table)))
    return FiniteAlgebra(f"{A.name}x{B.name}", A.size * m, tuple(ops), A.tags & B.tags)


def compatibility_witness(A: FiniteAlgebra, parent: Sequence[int]):
    """First ``(op, args)`` where an operation fails to respect the partition, else None.

    ``parent`` maps every element to its class representative; compatibility
    holds iff ``f(args)`` is related to ``f(rep(args))`` for every tuple.
    """
    p = np.asarray(parent, dtype=np.int64)
    for o in A.ops:
        if o.arity == 0:
            continue
        classes = p[o.table]
        at_reps = classes[_grid(p, o.arity)]
        bad = np.argwhere(classes != at_reps)
        if bad.size:
            return (o.name, tuple(int(i) for i in bad[0]))
    return None


def _require_congruence(A: FiniteAlgebra, theta) -> np.ndarray:
    p = np.asarray(theta.parent, dtype=np.int64)
    if len(p) != A.size:
        raise NotACongruence(f"partition has {len(p)} points but {A.name} has {A.size}")
    witness = compatibility_witness(A, p)
    if witness is not None:
        raise NotACongruence(f"{A.name}: operation {witness[0]!r} breaks the partition at {witness[1]}", witness)
    return p


@dataclass(frozen=True, eq=False)
class Morphism:
    source: FiniteAlgebra
    target: FiniteAlgebra
    map: tuple[int, ...]
    name: str = ""

    @property
    def surjective(self) -> bool:
        return len(set(self.map)) == self.target.size

    def kernel_labels(self) -> tuple[int, ...]:
        first = {}
        return tuple(first.setdefault(v, x) for x, v in enumerate(self.map))


def check_morphism(mapping: Sequence[int], A: FiniteAlgebra, B: FiniteAlgebra, name: str = "") -> Morphism:
    if len(mapping) != A.size:
        raise NotAMorphism(f"map has {len(mapping)} entries, {A.name} has {A.size} elements")
    if any(not 0 <= int(v) < B.size for v in mapping):
        raise NotAMorphism(f"map leaves the universe of {B.name}")
    if not A.signature.same_as(B.signature):
        raise SignatureMismatch(f"{A.name} and {B.name} have different signatures")
    u = np.asarray(mapping, dtype=np.int64)
    for o in A.ops:
        tb = B.op(o.name)
        if o.arity == 0:
            if u[int(o.table)] != int(tb):
                raise NotAMorphism(f"constant {o.name!r} is not preserved", (o.name, ()))
            continue
        lhs = u[o.table]
        rhs = tb[_grid(u, o.arity)]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            args = tuple(int(i) for i in bad[0])
            raise NotAMorphism(f"operation {o.name!r} does not commute at {args}", (o.name, args))
    return Morphism(A, B, tuple(int(v) for v in mapping), name)


def identity_morphism(A: FiniteAlgebra) -> Morphism:
    return Morphism(A, A, tuple(range(A.size)), f"id_{A.name}")


def quotient(A: FiniteAlgebra, theta) -> tuple[FiniteAlgebra, Morphism]:
    """Quotient algebra with classes numbered by increasing representative, plus the projection."""
    p = _require_congruence(A, theta)
    reps = np.unique(p)
    cls = np.full(A.size, -1, dtype=np.int64)
    cls[reps] = np.arange(len(reps))
    proj = cls[p]
    ops = []
    for o in A.ops:
        if o.arity == 0:
            table = int(proj[int(o.table)])
        else:
            table = proj[o.table[_grid(reps, o.arity)]]
        ops.append(Operation(o.name, o.arity, _freeze(table)))
    classes = "|".join(map(str, reps.tolist()))
    Q = FiniteAlgebra(f"{A.name}/[{classes}]", len(reps), tuple(ops), A.tags)
    return Q, Morphism(A, Q, tuple(int(v) for v in proj), f"p_{Q.name}")


@dataclass(frozen=True, eq=False)
class PairIndex:
    """Forward and backward maps between pairs ``(x, y)`` and the pair algebra's universe."""

    pairs: tuple[tuple[int, int], ...]
    lookup: np.ndarray = field(repr=False)
    n: int

    def index(self, x: int, y: int) -> int:
        return int(self.lookup[x * self.n + y])


def pair_subalgebra(A: FiniteAlgebra, alpha) -> tuple[FiniteAlgebra, PairIndex]:
    """The subalgebra of ``A x A`` on the pairs related by ``alpha``, in lexicographic order."""
    p = _require_congruence(A, alpha)
    n = A.size
    xs, ys = np.nonzero(p[:, None] == p[None, :])
    lookup = np.full(n * n, -1, dtype=np.int64)
    lookup[xs * n + ys] = np.arange(len(xs))
    ops = []
    for o in A.ops:
        if o.arity == 0:
            c = int(o.table)
            table = lookup[c * n + c]
        else:
            codes = o.table[_grid(xs, o.arity)] * n + o.table[_grid(ys, o.arity)]
            table = lookup[codes]
        ops.append(Operation(o.name, o.arity, _freeze(table)))
    pairs = tuple(zip(xs.tolist(), ys.tolist()))
    lookup.flags.writeable = False
    return FiniteAlgebra(f"{A.name}(pairs)", len(pairs), tuple(ops)), PairIndex(pairs, lookup, n)
