"""Reading and writing corpus files.

``.alg`` holds one algebra, ``.cms`` one commutator structure and ``.mor``
one morphism between two algebras named in the same directory.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from .algebra import FiniteAlgebra, Morphism, algebra_to_dict, check_morphism, validate_algebra
from .corpus import Corpus
from .errors import ParseError
from .structure import CommutatorStructure, structure_to_dict, validate_structure

EXTENSIONS = (".alg", ".cms", ".mor")


def _read_json(path: Path):
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON: {exc}") from None


def _format(obj, depth: int) -> str:
    pad = " " * depth
    if isinstance(obj, dict) and obj:
        items = [f'{pad} {json.dumps(k)}: {_format(v, depth + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, list) and any(isinstance(x, (list, dict)) for x in obj):
        # lists of scalars stay on one line, so table rows read as rows
        if all(isinstance(x, list) and not any(isinstance(y, (list, dict)) for y in x) for x in obj):
            return "[" + f",\n{pad} ".join(json.dumps(x) for x in obj) + "]"
        items = [f"{pad} {_format(x, depth + 1)}" for x in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return json.dumps(obj)


def dumps(obj) -> str:
    return _format(obj, 0) + "\n"


def load_algebra(path) -> FiniteAlgebra:
    return validate_algebra(_read_json(Path(path)))


def load_structure(path, mode: str | None = None) -> CommutatorStructure:
    return validate_structure(_read_json(Path(path)), mode)


def morphism_to_dict(u: Morphism) -> dict:
    return {"kind": "morphism", "name": u.name, "source": u.source.name,
            "target": u.target.name, "map": list(u.map)}


def morphism_from_dict(raw, algebras: Mapping[str, FiniteAlgebra]) -> Morphism:
    if not isinstance(raw, Mapping) or raw.get("kind") != "morphism":
        raise ParseError("expected an object with kind 'morphism'")
    ends = []
    for key in ("source", "target"):
        name = raw.get(key)
        if name not in algebras:
            raise ParseError(f"morphism {key} {name!r} is not a known algebra")
        ends.append(algebras[name])
    mapping = raw.get("map")
    if not isinstance(mapping, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in mapping):
        raise ParseError("morphism 'map' must be a list of integers")
    return check_morphism(mapping, ends[0], ends[1], raw.get("name", f"{ends[0].name}->{ends[1].name}"))


def load_file(path, algebras: Mapping[str, FiniteAlgebra] | None = None):
    path = Path(path)
    if path.suffix == ".alg":
        return load_algebra(path)
    if path.suffix == ".cms":
        return load_structure(path)
    if path.suffix == ".mor":
        if algebras is None:
            algebras = {A.name: A for A in (load_algebra(p) for p in sorted(path.parent.glob("*.alg")))}
        return morphism_from_dict(_read_json(path), algebras)
    raise ParseError(f"{path}: unknown extension (expected one of {', '.join(EXTENSIONS)})")


def load_dir(path) -> Corpus:
    """Every corpus file below ``path``, in sorted path order; morphisms last."""
    root = Path(path)
    files = sorted(p for p in root.rglob("*") if p.suffix in EXTENSIONS and p.is_file())
    corpus = Corpus(root.name)
    for p in files:
        if p.suffix == ".alg":
            corpus.algebras.append(load_algebra(p))
        elif p.suffix == ".cms":
            corpus.structures.append(load_structure(p))
    known = {A.name: A for A in corpus.algebras}
    if len(known) != len(corpus.algebras):
        raise ParseError(f"{root}: two algebras share a name")
    for p in files:
        if p.suffix == ".mor":
            corpus.morphisms.append(morphism_from_dict(_read_json(p), known))
    return corpus


def load(path) -> Corpus:
    """A directory or a single file, as a corpus."""
    path = Path(path)
    if path.is_dir():
        return load_dir(path)
    if not path.exists():
        raise ParseError(f"{path}: no such file")
    obj = load_file(path)
    corpus = Corpus(path.stem)
    if isinstance(obj, FiniteAlgebra):
        corpus.algebras.append(obj)
    elif isinstance(obj, CommutatorStructure):
        corpus.structures.append(obj)
    else:
        corpus.morphisms.append(obj)
    return corpus


def file_name(obj) -> str:
    stem = obj.name.lower().replace("(", "").replace(")", "").replace("->", "-to-")
    if isinstance(obj, FiniteAlgebra):
        return stem + ".alg"
    if isinstance(obj, CommutatorStructure):
        return stem + ".cms"
    return stem + ".mor"


def to_dict(obj) -> dict:
    if isinstance(obj, FiniteAlgebra):
        return algebra_to_dict(obj)
    if isinstance(obj, CommutatorStructure):
        return structure_to_dict(obj)
    return morphism_to_dict(obj)


def write_corpus(corpus: Corpus, out) -> list[Path]:
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for obj in [*corpus.algebras, *corpus.structures, *corpus.morphisms]:
        target = out / file_name(obj)
        target.write_text(dumps(to_dict(obj)))
        written.append(target)
    return written
