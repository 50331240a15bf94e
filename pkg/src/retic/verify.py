"""Assertion suites over a corpus, and the report they produce.

Each suite maps one corpus member to a list of findings. A finding becomes a
verdict: ``pass``, ``fail`` (with a witness), ``observed`` (computed, but a
hypothesis fails or the input is a lax formal model, so nothing is asserted)
or ``skipped`` (not computed, with the reason).
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .algebra import FiniteAlgebra, Morphism, identity_morphism, quotient
from .commutator import (
    LATTICE_OPS,
    RING_OPS,
    annihilator_index,
    commutator_table,
    hyperarchimedean_index,
    iterate_index,
    lattice_axiom_witness,
    residuum_index,
    ring_axiom_witness,
    ring_ideal_oracle,
)
from .congruence import brute_force_congruences, cg, con_lattice, is_congruence, is_modular
from .corpus import Corpus
from .errors import ReticError
from .lattice import brute_force_ideals
from .report import Finding, first_failure, not_applicable
from .reticulation import (
    BRUTE_FORCE_IDEALS_LIMIT,
    boolean_center_iso,
    annihilator_transfer,
    c_closure,
    check_fixedpoint,
    homeomorphism,
    is_quasi_commutative,
    is_spectral_algebra,
    lambda_findings,
    lattice_minimal_prime_findings,
    min_prime_check,
    reticulate,
    retic_functor,
)
from .spectrum import is_admissible, is_prime, morphism_adjoints, spectrum, zariski
from .structure import CommutatorStructure, from_finite_algebra, structure_to_dict, validate_structure

SUITES = ("core", "reticulation", "boolean", "annihilator", "minprime", "functor")
PARTITION_ORACLE_LIMIT = 8
RESIDUUM_LIMIT = 8
PRIME_QUANTIFIER_LIMIT = 6
ITERATION_DEPTH = 3
STATUSES = ("pass", "fail", "observed", "skipped")


@dataclass(frozen=True)
class Verdict:
    instance: str
    check: str
    status: str
    witness: object = None
    note: str = ""
    value: bool | None = None

    def to_json(self) -> dict:
        out = {"check": self.check, "status": self.status}
        if self.value is not None:
            out["holds"] = self.value
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        if self.note:
            out["note"] = self.note
        return out


def _plain(x):
    """JSON-ready copy with sets sorted and tuples as lists."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted((_plain(v) for v in x), key=repr)
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


@dataclass
class InstanceReport:
    name: str
    kind: str
    mode: str
    verdicts: list[Verdict] = field(default_factory=list)


@dataclass
class VerifyReport:
    suite: str
    instances: list[InstanceReport] = field(default_factory=list)

    @property
    def verdicts(self) -> list[Verdict]:
        return [v for inst in self.instances for v in inst.verdicts]

    @property
    def summary(self) -> dict[str, int]:
        counts = dict.fromkeys(STATUSES, 0)
        for v in self.verdicts:
            counts[v.status] += 1
        return counts

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "summary": self.summary,
            "instances": [
                {"name": i.name, "kind": i.kind, "mode": i.mode,
                 "verdicts": [v.to_json() for v in i.verdicts]}
                for i in self.instances
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n"

    def lookup(self, instance: str, check: str) -> Verdict | None:
        return next((v for v in self.verdicts if v.instance == instance and v.check == check), None)


def verdict(instance: str, f: Finding, lax: bool) -> Verdict:
    if not f.evaluated:
        return Verdict(instance, f.check, "skipped", None, f.note)
    if lax or not f.applicable:
        note = f.note or ("lax formal model" if lax else "")
        return Verdict(instance, f.check, "observed", f.witness, note, f.holds)
    return Verdict(instance, f.check, "pass" if f.holds else "fail", f.witness, f.note)


def _guard(check: str, fn):
    """Run ``fn``; a library error becomes a failed finding carrying its witness."""
    try:
        return list(fn())
    except ReticError as exc:
        return [Finding(check, False, exc.witness, f"{type(exc).__name__}: {exc}")]


# -- core: commutator, radical and topology properties ------------------------------

def _n(S, *xs):
    return tuple(S.names[x] for x in xs)


def commutator_law_findings(S) -> list[Finding]:
    """Symmetry, the meet bound, monotonicity and join-distributivity, over all pairs/triples."""
    lat = S.lattice
    E = range(lat.size)
    pairs = list(itertools.product(E, E))
    triples = list(itertools.product(E, E, E))
    return [
        first_failure("commutator.symmetric", (
            (S.comm[a][b] == S.comm[b][a], _n(S, a, b)) for a, b in pairs)),
        first_failure("commutator.below-meet", (
            (lat.le(S.comm[a][b], lat.meet[a][b]), _n(S, a, b)) for a, b in pairs)),
        first_failure("commutator.monotone", (
            (not lat.le(a, a2) or lat.le(S.comm[a][b], S.comm[a2][b]), _n(S, a, a2, b))
            for a, a2, b in triples)),
        first_failure("commutator.join-distributive", (
            (S.comm[a][lat.join[b][c]] == lat.join[S.comm[a][b]][S.comm[a][c]], _n(S, a, b, c))
            for a, b, c in triples)),
        first_failure("commutator.empty-join", (
            (S.comm[a][lat.bottom] == lat.bottom, _n(S, a)) for a in E)),
    ]


def comaximal_findings(S) -> list[Finding]:
    lat = S.lattice
    E = range(lat.size)
    top = lat.top
    co = [(a, b) for a in E for b in E if lat.join[a][b] == top]
    return [
        first_failure("comaximal.commutator-is-meet", (
            (S.comm[a][b] == lat.meet[a][b], _n(S, a, b)) for a, b in co)),
        first_failure("comaximal.closed-under-commutator", (
            (lat.join[a][S.comm[b][c]] == lat.join[a][lat.meet[b][c]] == top, _n(S, a, b, c))
            for a, b in co for c in E if lat.join[a][c] == top)),
        first_failure("comaximal.iterated-commutators", (
            (lat.join[iterate_index(S, a, k)][iterate_index(S, b, k)] == top, _n(S, a, b) + (k,))
            for a, b in co for k in range(1, ITERATION_DEPTH + 1))),
    ]


def residuum_findings(S) -> list[Finding]:
    lat = S.lattice
    if lat.size > RESIDUUM_LIMIT:
        return [not_applicable("residuum.adjunction", f"{lat.size} elements exceeds {RESIDUUM_LIMIT}")]
    E = range(lat.size)
    res = [[residuum_index(S, b, c) for c in E] for b in E]
    return [
        first_failure("residuum.adjunction", (
            (lat.le(a, res[b][c]) == lat.le(S.comm[a][b], c), _n(S, a, b, c))
            for a, b, c in itertools.product(E, E, E))),
        first_failure("annihilator.largest-killer", (
            (S.comm[a][annihilator_index(S, a)] == lat.bottom, _n(S, a)) for a in E)),
    ]


def radical_findings(S) -> list[Finding]:
    sp = spectrum(S)
    lat = S.lattice
    rho = sp.radical
    E = range(lat.size)
    pairs = list(itertools.product(E, E))
    top = lat.top
    out = [
        first_failure("radical.extensive", ((lat.le(a, rho[a]), _n(S, a)) for a in E)),
        first_failure("radical.meet-and-commutator", (
            (rho[lat.meet[a][b]] == rho[S.comm[a][b]] == lat.meet[rho[a]][rho[b]], _n(S, a, b))
            for a, b in pairs)),
        first_failure("radical.top-only", (((rho[a] == top) == (a == top), _n(S, a)) for a in E)),
        first_failure("radical.join", (
            (rho[lat.join[a][b]] == rho[lat.join[rho[a]][rho[b]]], _n(S, a, b)) for a, b in pairs)),
        first_failure("radical.idempotent", ((rho[rho[a]] == rho[a], _n(S, a)) for a in E)),
        first_failure("radical.comaximal", (
            ((lat.join[rho[a]][rho[b]] == top) == (lat.join[a][b] == top), _n(S, a, b))
            for a, b in pairs)),
        first_failure("radical.iterated-commutator", (
            (rho[iterate_index(S, a, k)] == rho[a], _n(S, a) + (k,))
            for a in E for k in range(0, ITERATION_DEPTH + 1))),
    ]
    R = sp.radicals
    fj = sp.frame_join

    def frame_cases():
        yield rho[lat.bottom] in R and top in R, "bounds"
        for a, b in itertools.product(R, R):
            j = fj([a, b])
            m = lat.meet[a][b]
            yield j in R and m in R, _n(S, a, b)
            ups = [c for c in R if lat.le(a, c) and lat.le(b, c)]
            yield j in ups and all(lat.le(j, c) for c in ups), _n(S, a, b)
            for c in R:
                yield lat.meet[a][fj([b, c])] == fj([lat.meet[a][b], lat.meet[a][c]]), _n(S, a, b, c)
        yield all(fj([rho[lat.bottom], a]) == a and lat.meet[top][a] == a for a in R), "units"

    out.append(first_failure("radical-frame.distributive-lattice", frame_cases()))
    return out


def zariski_findings(S) -> list[Finding]:
    sp = spectrum(S)
    E = range(S.size)
    pairs = list(itertools.product(E, E))
    T = zariski(S, check_basis=False)
    Tmax = T.subspace(p for p in sp.maximals if p in set(sp.primes))
    out = [
        first_failure("zariski.open-intersection", (
            (sp.basic_open(a) & sp.basic_open(b) == sp.basic_open(S.comm[a][b]), _n(S, a, b))
            for a, b in pairs)),
        first_failure("zariski.closed-union", (
            (sp.zero_set(a) | sp.zero_set(b) == sp.zero_set(S.comm[a][b]), _n(S, a, b))
            for a, b in pairs)),
        Finding("zariski.compact-basis", not T.notes, T.notes[0] if T.notes else None),
        first_failure("spectrum.maximals-are-prime", (
            (m in set(sp.primes), _n(S, m)) for m in sp.maximals)),
        Finding("spectrum.maximal-t1", Tmax.is_t1(), None, "compactness is automatic for finite spaces"),
        first_failure("spectrum.minimals-below-all", (
            (any(S.le(m, p) for m in sp.minimals), _n(S, p)) for p in sp.primes)),
    ]
    if S.size <= PRIME_QUANTIFIER_LIMIT:
        out.append(first_failure("prime.compact-quantifier", (
            (is_prime(S, p, "compact") == is_prime(S, p, "all"), _n(S, p)) for p in range(S.size))))
    else:
        out.append(not_applicable("prime.compact-quantifier", f"more than {PRIME_QUANTIFIER_LIMIT} elements"))
    return out


def structure_core(S: CommutatorStructure) -> list[Finding]:
    out = commutator_law_findings(S)
    out.append(Finding("commutator.top-idempotent", S.comm[S.top][S.top] == S.top, _n(S, S.top)
                       if S.comm[S.top][S.top] != S.top else None))
    out += comaximal_findings(S) + residuum_findings(S) + radical_findings(S) + zariski_findings(S)
    if S.strict:
        out.append(Finding("structure.strict-compact-is-everything", len(S.compact) == S.size))
    again = validate_structure(structure_to_dict(S))
    out.append(Finding("structure.round-trip", again.key() == S.key()))
    return out


def oracle_findings(A: FiniteAlgebra) -> list[Finding]:
    T = commutator_table(A)
    L = T.congruences
    out = []
    if "ring" in A.tags and A.has_ops(RING_OPS):
        bad = ring_axiom_witness(A)
        if bad:
            out.append(Finding("oracle.ring-ideal-product", False, bad, "ring tag but ring laws fail"))
        else:
            out.append(first_failure("oracle.ring-ideal-product", (
                (L.index(ring_ideal_oracle(A, L.congruences[i], L.congruences[j])) == T.comm[i][j],
                 (L.name(i), L.name(j)))
                for i in range(L.size) for j in range(L.size))))
    else:
        out.append(not_applicable("oracle.ring-ideal-product", "not tagged as a unital ring"))
    if "lattice" in A.tags and A.has_ops(LATTICE_OPS):
        bad = lattice_axiom_witness(A)
        if bad:
            out.append(Finding("oracle.lattice-meet", False, bad, "lattice tag but lattice laws fail"))
        else:
            out.append(first_failure("oracle.lattice-meet", (
                (T.comm[i][j] == L.lattice.meet[i][j], (L.name(i), L.name(j)))
                for i in range(L.size) for j in range(L.size))))
    else:
        out.append(not_applicable("oracle.lattice-meet", "not tagged as a bounded lattice"))
    return out


def _projection_findings(A: FiniteAlgebra) -> list[Finding]:
    """The image law for every canonical projection p_theta."""
    T = commutator_table(A)
    L = T.congruences
    lat = L.lattice

    def cases():
        for t in range(L.size):
            Q, p = quotient(A, L.congruences[t])
            TB = commutator_table(Q)
            adj = morphism_adjoints(p)
            for a, b in itertools.product(range(L.size), repeat=2):
                lhs = lat.join[T.comm[a][b]][t]
                up_a, up_b = adj.bullet[lat.join[a][t]], adj.bullet[lat.join[b][t]]
                rhs = adj.star[TB.comm[up_a][up_b]]
                yield lhs == rhs, (L.name(t), L.name(a), L.name(b))

    return [first_failure("commutator.projection-image-law", cases(),
                          "checked on canonical projections only")]


def algebra_core(A: FiniteAlgebra) -> list[Finding]:
    L = con_lattice(A)
    out = []
    if A.size <= PARTITION_ORACLE_LIMIT:
        oracle = brute_force_congruences(A)
        found = set(L.congruences)
        missing = sorted(map(str, oracle ^ found))
        out.append(Finding("congruence.partition-oracle", not missing, missing or None))
    else:
        out.append(not_applicable("congruence.partition-oracle", f"{A.size} elements exceeds {PARTITION_ORACLE_LIMIT}"))
    thetas = L.congruences
    out.append(first_failure("congruence.compatible", ((is_congruence(A, t), str(t)) for t in thetas)))
    out.append(first_failure("congruence.generation-idempotent", (
        (cg(A, t.generators()) == t, str(t)) for t in thetas)))
    out.append(first_failure("congruence.join-and-meet", (
        (thetas[L.lattice.join[i][j]] == cg(A, itertools.chain(thetas[i].generators(), thetas[j].generators()))
         and thetas[L.lattice.meet[i][j]] == thetas[i].meet(thetas[j]), (L.name(i), L.name(j)))
        for i in range(L.size) for j in range(L.size))))
    modular, pentagon = is_modular(L)
    out.append(Finding("congruence.modular", modular, [str(p) for p in pentagon] if pentagon else None,
                       "" if modular else "the commutator theory assumes modularity",
                       applicable=modular))
    out += oracle_findings(A) + _projection_findings(A)
    return out


def core_suite(obj) -> list[Finding]:
    if isinstance(obj, FiniteAlgebra):
        out = _guard("commutator.orientations-agree", lambda: [
            Finding("commutator.orientations-agree", commutator_table(obj) is not None)])
        if not out[0].holds:
            return out
        S = from_finite_algebra(obj)
        nabla = S.comm[S.top][S.top] == S.top
        out += algebra_core(obj)
        found = structure_core(S)
        # [nabla, nabla] = nabla is the per-algebra shadow of semidegeneracy: a warning, not a law
        return out + [Finding(f.check, f.holds, f.witness, "semidegeneracy consequence", applicable=nabla)
                      if f.check == "commutator.top-idempotent" else f for f in found]
    return structure_core(obj)


# -- reticulation --------------------------------------------------------------------

def reticulation_suite(S: CommutatorStructure) -> list[Finding]:
    C = c_closure(S)
    members = set(C.members)
    R = reticulate(S)
    L = R.lattice
    out = [
        first_failure("c-closure.contains-compact", ((k in members, _n(S, k)) for k in S.compact)),
        first_failure("c-closure.closed", (
            (S.join(a, b) in members and S.comm[a][b] in members, _n(S, a, b))
            for a in C.members for b in C.members)),
        Finding("reticulation.distributive", L.distributivity_witness() is None),
        Finding("reticulation.bounds", R.lam[S.bottom] == R.zero and R.lam[S.top] == R.one),
    ]
    if L.size <= BRUTE_FORCE_IDEALS_LIMIT:
        out.append(Finding("ideal-spectrum.brute-force", set(R.ideals.ideals) == brute_force_ideals(L)))
    else:
        out.append(not_applicable("ideal-spectrum.brute-force", f"more than {BRUTE_FORCE_IDEALS_LIMIT} classes"))
    out.append(first_failure("ideal-spectrum.primes-proper", (
        (R.one not in P, R.ideal_names(P)) for P in R.ideals.primes)))
    out += lambda_findings(R)
    out += check_fixedpoint(S).findings
    hm = homeomorphism(S)
    if hm.applicable:
        out += hm.findings
    else:
        out.append(not_applicable("homeomorphism.spec", hm.reason))
    qc = is_quasi_commutative(S)
    out.append(Finding("quasi-commutative", qc.holds, qc.witness,
                       "finite spectrum" if qc.holds else "no compact element below the commutator has its radical"))
    out += qc.findings
    sa = is_spectral_algebra(S)
    out.append(Finding("spectral.three-way", sa.agree,
                       None if sa.agree else {"spectral": sa.spectral, "quasi-commutative": sa.quasi_commutative,
                                              "fixedpoint": sa.fixedpoint},
                       "; ".join(sa.notes)))
    return out


def boolean_suite(S: CommutatorStructure) -> list[Finding]:
    out = list(boolean_center_iso(S).findings)
    hyper, steps = hyperarchimedean_index(S, S.compact)
    # a property of the input, not a law: recorded as observed
    out.append(Finding("hyperarchimedean", hyper, {S.names[a]: n for a, n in steps.items()},
                       applicable=False))
    return out


def annihilator_suite(S: CommutatorStructure) -> list[Finding]:
    return annihilator_transfer(S)


def minprime_suite(S: CommutatorStructure) -> list[Finding]:
    R = reticulate(S)
    out = []
    for p in R.spectrum.primes:
        r = min_prime_check(S, p)
        out.append(Finding(
            "minprime.five-way", r.agree,
            None if r.agree else {"prime": r.prime, "minimal": r.minimal, "conditions": list(r.conditions)},
            f"prime {r.prime}" + (f"; {r.note}" if r.note else ""), applicable=r.applicable,
        ))
    out += lattice_minimal_prime_findings(R)
    return out


def functor_findings(u: Morphism) -> list[Finding]:
    if not is_admissible(u):
        return [not_applicable("functor.well-defined", f"{u.name} is not admissible")]
    return _guard("functor.well-defined", lambda: retic_functor(u).findings)


def shipped_morphisms(corpus: Corpus) -> list[Morphism]:
    """Identities, every canonical projection, then the corpus morphisms."""
    out = []
    for A in corpus.algebras:
        out.append(identity_morphism(A))
        L = con_lattice(A)
        for i, theta in enumerate(L.congruences):
            Q, p = quotient(A, theta)
            out.append(p.__class__(p.source, p.target, p.map, f"p_{L.name(i)}:{A.name}"))
    return out + list(corpus.morphisms)


# -- orchestration -----------------------------------------------------------------------

STRUCTURE_SUITES = {
    "reticulation": reticulation_suite,
    "boolean": boolean_suite,
    "annihilator": annihilator_suite,
    "minprime": minprime_suite,
}


def _suites(suite: str) -> tuple[str, ...]:
    if suite == "all":
        return SUITES
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return (suite,)


def run_instance(obj, suite: str = "all") -> InstanceReport:
    if isinstance(obj, FiniteAlgebra):
        name, kind = obj.name, "algebra"
    else:
        name, kind = obj.name, "structure"
    findings: list[Finding] = []
    S = None
    for s in _suites(suite):
        if s == "functor":
            continue
        if s == "core":
            findings += _guard("core", lambda: core_suite(obj))
            continue
        if S is None:
            try:
                S = from_finite_algebra(obj) if kind == "algebra" else obj
            except ReticError as exc:
                findings.append(Finding("structure.build", False, exc.witness, str(exc)))
                break
        findings += _guard(s, lambda: STRUCTURE_SUITES[s](S))
    lax = kind == "structure" and not obj.strict
    mode = "algebra" if kind == "algebra" else obj.label
    return InstanceReport(name, kind, mode, [verdict(name, f, lax) for f in findings])


def run(corpus: Corpus, suite: str = "all") -> VerifyReport:
    suites = _suites(suite)
    report = VerifyReport(suite)
    if suites != ("functor",):
        for obj in [*corpus.algebras, *corpus.structures]:
            report.instances.append(run_instance(obj, suite))
    if "functor" in suites:
        for u in shipped_morphisms(corpus):
            inst = InstanceReport(u.name, "morphism", "morphism")
            inst.verdicts = [verdict(u.name, f, False) for f in functor_findings(u)]
            report.instances.append(inst)
    return report


def render(report: VerifyReport, verbose: bool = False) -> str:
    lines = []
    for inst in report.instances:
        counts = dict.fromkeys(STATUSES, 0)
        for v in inst.verdicts:
            counts[v.status] += 1
        tally = " ".join(f"{k}={counts[k]}" for k in STATUSES if counts[k])
        lines.append(f"{inst.name} [{inst.mode}] {tally}")
        for v in inst.verdicts:
            if v.status == "fail" or (verbose and v.status != "pass"):
                extra = f" witness={json.dumps(_plain(v.witness))}" if v.witness is not None else ""
                value = "" if v.value is None else f" holds={str(v.value).lower()}"
                note = f" ({v.note})" if v.note else ""
                lines.append(f"  {v.status.upper()} {v.check}{value}{extra}{note}")
    s = report.summary
    lines.append("summary: " + " ".join(f"{k}={s[k]}" for k in STATUSES))
    return "\n".join(lines) + "\n"
