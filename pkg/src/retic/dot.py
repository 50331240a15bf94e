"""Graphviz text for Hasse diagrams and specialization orders."""
from __future__ import annotations

import json

from .lattice import FiniteLattice
from .spectrum import FiniteTopology


def _quote(s: str) -> str:
    return json.dumps(str(s))


def export_dot(obj, name: str = "G", labels=None) -> str:
    """A lattice becomes its Hasse diagram (edges point up); a topology becomes
    the specialization order restricted to covering pairs.

    ``labels`` maps topology points to node names; lattices use their element names.
    """
    if isinstance(obj, FiniteLattice):
        nodes = list(obj.names)
        edges = [(obj.names[a], obj.names[b]) for a, b in obj.covers]
    elif isinstance(obj, FiniteTopology):
        label = labels or (lambda p: str(p))
        nodes = [label(p) for p in obj.points]
        spec = set(obj.specialization())
        # keep only covers: drop (x, z) when some y sits strictly between
        edges = [
            (label(y), label(x)) for x, y in sorted(spec, key=repr)
            if not any((x, z) in spec and (z, y) in spec for z in obj.points if z not in (x, y))
        ]
    else:
        raise TypeError(f"cannot export {type(obj).__name__}")
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    lines += [f"  {_quote(n)};" for n in nodes]
    lines += [f"  {_quote(a)} -> {_quote(b)};" for a, b in sorted(set(edges))]
    lines.append("}")
    return "\n".join(lines) + "\n"
