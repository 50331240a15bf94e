"""The ``retic`` command line."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .algebra import FiniteAlgebra
from .commutator import commutator_table
from .corpus import FAMILIES, generate_corpus, shipped
from .dot import export_dot
from .errors import InputError, ReticError
from .reticulation import reticulate
from .spectrum import spectral_space_check, spectrum, zariski
from .structure import as_structure
from .verify import SUITES, render, run, verdict, oracle_findings

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


def _one(path: str):
    """The single algebra or structure stored in ``path``."""
    corpus = io.load(path)
    members = [*corpus.algebras, *corpus.structures]
    if len(members) != 1:
        raise InputError(f"{path}: expected one algebra or structure, found {len(members)}")
    return members[0]


def _header(obj) -> str:
    if isinstance(obj, FiniteAlgebra):
        return f"algebra {obj.name} (size {obj.size})"
    return f"structure {obj.name} [{obj.label}]"


def _listing(names) -> str:
    return "{" + ", ".join(names) + "}"


def _write_json(path: str | None, data) -> None:
    if path:
        Path(path).write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# -- subcommands ---------------------------------------------------------------------

def cmd_con(args) -> int:
    obj = _one(args.file)
    S = as_structure(obj)
    out = [_header(obj)]
    data = {"name": S.name, "elements": list(S.names)}
    if S.congruences is not None:
        L = S.congruences
        out.append(f"{L.size} congruences")
        for i, theta in enumerate(L.congruences):
            out.append(f"{L.name(i)} = {json.dumps(theta.to_json())}")
        data["congruences"] = {L.name(i): t.to_json() for i, t in enumerate(L.congruences)}
    else:
        out.append(f"{S.size} elements: {_listing(S.names)}")
    out.append("covers: " + ", ".join(f"{S.names[a]}<{S.names[b]}" for a, b in S.lattice.covers))
    data["order"] = [[int(S.le(a, b)) for b in range(S.size)] for a in range(S.size)]
    print("\n".join(out))
    _write_json(args.json, data)
    return EXIT_OK


def cmd_comm(args) -> int:
    obj = _one(args.file)
    S = as_structure(obj)
    nm = S.names
    width = max(len(n) for n in nm)
    out = [_header(obj), " " * width + " | " + " ".join(n.rjust(width) for n in nm)]
    for a in range(S.size):
        out.append(nm[a].rjust(width) + " | " + " ".join(nm[S.comm[a][b]].rjust(width) for b in range(S.size)))
    data = {"name": S.name, "elements": list(nm),
            "commutator": [[nm[S.comm[a][b]] for b in range(S.size)] for a in range(S.size)]}
    status = EXIT_OK
    if args.check_oracles:
        if not isinstance(obj, FiniteAlgebra):
            out.append("oracles: skipped (not an algebra)")
        else:
            commutator_table(obj)
            verdicts = [verdict(obj.name, f, False) for f in oracle_findings(obj)]
            for v in verdicts:
                extra = f" witness={json.dumps(v.witness)}" if v.witness is not None else ""
                note = f" ({v.note})" if v.note else ""
                out.append(f"oracle {v.check}: {v.status}{extra}{note}")
            data["oracles"] = [v.to_json() for v in verdicts]
            if any(v.status == "fail" for v in verdicts):
                status = EXIT_VIOLATION
    print("\n".join(out))
    _write_json(args.json, data)
    return status


def cmd_spec(args) -> int:
    obj = _one(args.file)
    S = as_structure(obj)
    sp = spectrum(S)
    nm = S.names
    names = lambda xs: [nm[x] for x in sorted(xs)]
    primes = set(sp.primes)
    out = [
        _header(obj),
        f"Spec = {_listing(names(sp.primes))}",
        f"Max = {_listing(names(m for m in sp.maximals if m in primes))}",
        f"Min = {_listing(names(sp.minimals))}",
        "radical: " + ", ".join(f"{nm[x]}->{nm[sp.radical[x]]}" for x in range(S.size)),
        f"semiprime: {str(sp.semiprime).lower()}",
    ]
    data = {"name": S.name, "mode": S.mode, "spec": names(sp.primes),
            "max": names(m for m in sp.maximals if m in primes), "min": names(sp.minimals),
            "radical": {nm[x]: nm[sp.radical[x]] for x in range(S.size)}, "semiprime": sp.semiprime}
    T = zariski(S, check_basis=False)
    if args.topology:
        label = lambda U: _listing(names(U))
        if T.materialized:
            opens = sorted(T.opens, key=lambda U: (len(U), names(U)))
            out.append("opens: " + ", ".join(label(U) for U in opens))
            data["opens"] = [names(U) for U in opens]
        else:
            basis = sorted(set(T.basis), key=lambda U: (len(U), names(U)))
            out.append("basis: " + ", ".join(label(U) for U in basis))
            data["basis"] = [names(U) for U in basis]
        rep = spectral_space_check(T)
        flags = {"t0": rep.t0, "compact": rep.compact, "sober": rep.sober,
                 "basis-intersection-closed": rep.basis_intersection_closed, "spectral": rep.spectral}
        out.append("spectral space: " + ", ".join(f"{k}={str(v).lower()}" for k, v in flags.items()))
        out += [f"note: {n}" for n in (*rep.notes, *T.notes)]
        data["spectral"] = flags
    print("\n".join(out))
    if args.dot:
        _write_text(args.dot, export_dot(T, f"Spec {S.name}", lambda p: nm[p]))
    _write_json(args.json, data)
    return EXIT_OK


def cmd_retic(args) -> int:
    obj = _one(args.file)
    R = reticulate(obj)
    S, L = R.structure, R.lattice
    nm = S.names
    out = [_header(obj), f"L has {L.size} elements: {_listing(L.names)}"]
    out.append("covers: " + ", ".join(f"{L.names[a]}<{L.names[b]}" for a, b in L.covers))
    out.append("lambda: " + ", ".join(f"{nm[a]}->{L.names[R.lam[a]]}" for a in R.cset.members))
    out.append(f"star ({args.variant}):")
    stars = {}
    for t in range(S.size):
        members = R.ideal_names(R.star_set(t, args.variant))
        note = " (completed downward)" if R.star_completed(t, args.variant) else ""
        out.append(f"  {nm[t]} -> {_listing(members)}{note}")
        stars[nm[t]] = members
    data = {"name": S.name, "mode": S.mode, "elements": list(L.names),
            "classes": {L.names[i]: [nm[a] for a in c] for i, c in enumerate(R.classes)},
            "order": [[int(L.le(a, b)) for b in range(L.size)] for a in range(L.size)],
            "lambda": {nm[a]: L.names[R.lam[a]] for a in R.cset.members},
            "star": stars, "variant": args.variant}
    print("\n".join(out))
    if args.dot:
        _write_text(args.dot, export_dot(L, f"L {S.name}"))
    _write_json(args.json, data)
    return EXIT_OK


def cmd_verify(args) -> int:
    corpus = io.load(args.path)
    report = run(corpus, args.suite)
    sys.stdout.write(render(report, args.verbose))
    if args.json:
        Path(args.json).write_text(report.dumps())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_corpus(args) -> int:
    if args.family == "shipped":
        corpus = shipped()
    else:
        corpus = generate_corpus(args.family, up_to=args.up_to, count=args.count,
                                 max_size=args.max_size, seed=args.seed)
    if args.out:
        written = io.write_corpus(corpus, args.out)
        print(f"wrote {len(written)} files to {args.out}")
    for obj in [*corpus.algebras, *corpus.structures, *corpus.morphisms]:
        print(io.file_name(obj))
    return EXIT_OK


def cmd_export(args) -> int:
    obj = _one(args.file)
    S = as_structure(obj)
    if args.object == "con":
        text = export_dot(S.lattice, f"Con {S.name}")
    elif args.object == "retic":
        text = export_dot(reticulate(S).lattice, f"L {S.name}")
    else:
        text = export_dot(zariski(S, check_basis=False), f"Spec {S.name}", lambda p: S.names[p])
    _write_text(args.out, text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input; exit status 2 is reserved for violations
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="retic", description="Commutators, spectra and reticulations of finite algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, file_help="an .alg or .cms file"):
        q = sub.add_parser(name, help=help_text)
        q.set_defaults(fn=fn)
        if file_help:
            q.add_argument("file", help=file_help)
        q.add_argument("--json", metavar="PATH", help="also write machine-readable output here")
        return q

    add("con", cmd_con, "list the congruences (or structure elements)")
    q = add("comm", cmd_comm, "print the commutator table")
    q.add_argument("--check-oracles", action="store_true", help="compare with the ring and lattice oracles")
    q = add("spec", cmd_spec, "prime spectrum and radicals")
    q.add_argument("--topology", action="store_true", help="print the Zariski opens and the spectral-space report")
    q.add_argument("--dot", metavar="PATH", help="write the specialization order as graph text ('-' for stdout)")
    q = add("retic", cmd_retic, "the reticulation lattice")
    q.add_argument("--variant", choices=("K", "C"), default="C", help="which star map to tabulate")
    q.add_argument("--dot", metavar="PATH", help="write the Hasse diagram as graph text ('-' for stdout)")

    q = sub.add_parser("verify", help="run assertion suites over a file or directory")
    q.set_defaults(fn=cmd_verify)
    q.add_argument("path")
    q.add_argument("--suite", choices=SUITES + ("all",), default="all")
    q.add_argument("--json", metavar="PATH")
    q.add_argument("--verbose", "-v", action="store_true", help="list observed and skipped entries too")

    q = sub.add_parser("corpus", help="generate a corpus")
    q.set_defaults(fn=cmd_corpus)
    q.add_argument("--family", choices=FAMILIES + ("shipped",), default="shipped")
    q.add_argument("--up-to", type=int, default=None)
    q.add_argument("--count", type=int, default=100)
    q.add_argument("--max-size", type=int, default=6)
    q.add_argument("--seed", type=int, default=1)
    q.add_argument("--out", metavar="DIR")

    q = sub.add_parser("export", help="graph text for a lattice or a spectrum")
    q.set_defaults(fn=cmd_export)
    q.add_argument("file")
    q.add_argument("--object", choices=("con", "retic", "spec"), default="retic")
    q.add_argument("--out", default="-", help="output path ('-' for stdout)")
    return p


def run_command(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ReticError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {exc.witness}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None) -> None:
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
