"""The eleven acceptance criteria, each checked exactly.

Every test prints one ``criterion N: PASS|FAIL`` line; the lines are also
repeated in the terminal summary.
"""
import itertools
import time

from conftest import ACCEPTANCE_LINES

from retic import corpus, verify
from retic.algebra import identity_morphism, quotient
from retic.commutator import commutator_table, ring_ideal_oracle
from retic.congruence import brute_force_congruences, con_lattice
from retic.corpus import Corpus, generate_corpus
from retic.reticulation import (
    annihilator_transfer,
    boolean_center_iso,
    homeomorphism,
    is_quasi_commutative,
    is_spectral_algebra,
    min_prime_check,
    reticulate,
    retic_functor,
)
from retic.spectrum import spectrum, zariski
from retic.structure import from_finite_algebra, structure_to_dict, validate_structure

SHIPPED = corpus.shipped()


def record(n: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {title}" + (f" ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def strict_structures():
    return [from_finite_algebra(A) for A in SHIPPED.algebras] + [S for S in SHIPPED.structures if S.strict]


def verdict_failures(report, checks):
    return [v for v in report.verdicts if v.check in checks and v.status == "fail"]


def test_criterion_01_commutator_axioms():
    start = time.perf_counter()
    bad = []
    for A in SHIPPED.algebras:
        T = commutator_table(A)
        L = T.congruences.lattice
        c, idx = T.comm, range(L.size)
        for a, b in itertools.product(idx, idx):
            if c[a][b] != c[b][a] or not L.le(c[a][b], L.meet[a][b]):
                bad.append((A.name, a, b))
        for a, b, d in itertools.product(idx, idx, idx):
            if L.le(a, b) and not L.le(c[a][d], c[b][d]):
                bad.append((A.name, "monotone", a, b, d))
            if c[L.join[a][b]][d] != L.join[c[a][d]][c[b][d]]:
                bad.append((A.name, "join", a, b, d))
    elapsed = time.perf_counter() - start
    record(1, "commutator axioms on every corpus algebra", not bad and elapsed < 60,
           f"{len(SHIPPED.algebras)} algebras, {elapsed:.2f}s, first failure {bad[:1]}")


def test_criterion_02_oracle_equivalence():
    rings = [A for A in SHIPPED.algebras if "ring" in A.tags]
    lattices = [A for A in SHIPPED.algebras if "lattice" in A.tags]
    bad = []
    for A in rings:
        T = commutator_table(A)
        L = T.congruences
        for i, j in itertools.product(range(L.size), repeat=2):
            if L.index(ring_ideal_oracle(A, L.congruences[i], L.congruences[j])) != T.comm[i][j]:
                bad.append((A.name, i, j))
    for A in lattices:
        T = commutator_table(A)
        L = T.congruences
        for i, j in itertools.product(range(L.size), repeat=2):
            if T.comm[i][j] != L.lattice.meet[i][j]:
                bad.append((A.name, i, j))
    ok = not bad and len(rings) == 13 and len(lattices) == 6
    record(2, "commutator equals IJ+JI on rings and the meet on lattices", ok,
           f"{len(rings)} rings, {len(lattices)} lattices")


def _prime_ideal_count(A):
    """Prime congruences found with the ideal-product oracle alone."""
    L = con_lattice(A)
    cs = L.congruences
    top = cs[L.top]
    return sum(
        all(not ring_ideal_oracle(A, a, b) <= p or a <= p or b <= p for a in cs for b in cs)
        for p in cs if p != top
    )


def _ideal_count(n):
    """Ideals of Z_n among all subsets: contain 0, closed under + and under multiplication by Z_n."""
    count = 0
    for mask in range(1 << n):
        I = {x for x in range(n) if mask >> x & 1}
        if 0 in I and all((x + y) % n in I for x in I for y in I) and all(r * x % n in I for x in I for r in range(n)):
            count += 1
    return count


def test_criterion_03_desk_counts():
    z4, z6, z12 = corpus.zn(4), corpus.zn(6), corpus.zn(12)
    got = {
        "Con(Z4)": (len(con_lattice(z4).congruences), len(brute_force_congruences(z4))),
        "Con(Z12)": (len(con_lattice(z12).congruences), _ideal_count(12)),
        "Spec(Z12)": (len(spectrum(z12).primes), _prime_ideal_count(z12)),
        "L(Z4)": (reticulate(z4).size,),
        "L(Z12)": (reticulate(z12).size,),
        "B(Con(Z6))": (len(boolean_center_iso(z6).center),),
        "B(L(Z6))": (len(boolean_center_iso(z6).lattice_center),),
    }
    want = {"Con(Z4)": 3, "Con(Z12)": 6, "Spec(Z12)": 2, "L(Z4)": 2, "L(Z12)": 4, "B(Con(Z6))": 4, "B(L(Z6))": 4}
    ok = all(set(got[k]) == {want[k]} for k in want)
    record(3, "desk-scale counts", ok, ", ".join(f"|{k}|={got[k][0]}" for k in want))


LEMMA_CHECKS = {
    "comaximal.commutator-is-meet", "comaximal.closed-under-commutator", "comaximal.iterated-commutators",
    "radical.extensive", "radical.meet-and-commutator", "radical.top-only", "radical.join",
    "radical.idempotent", "radical.comaximal", "radical.iterated-commutator",
    "lambda.preserves-join", "lambda.commutator-to-meet", "lambda.top-only", "lambda.monotone",
    "lambda.zero-only-semiprime", "lambda.order-criteria", "lambda.preserves-family-joins",
    "star.principal", "lower-star.compact-membership", "star.round-trip-element", "star.round-trip-ideal",
    "star.fixes-primes", "lower-star.proper", "star.proper", "star.prime-to-prime-ideal",
    "u.injective-continuous", "u.preimage-of-basic-open", "star.preserves-family-joins",
    "v.preimage-of-basic-open", "star.prime-membership", "star.order-reflecting",
}


def test_criterion_04_lemma_suites():
    report = verify.run(SHIPPED, "all")
    strict_names = {S.name for S in strict_structures()}
    passed = {(v.instance, v.check) for v in report.verdicts if v.status == "pass"}
    missing = [(n, c) for n in strict_names for c in LEMMA_CHECKS
               if (n, c) not in passed and not (c == "lambda.zero-only-semiprime")]
    ok = not report.failures and not missing
    record(4, "lemma suites on the full corpus", ok,
           f"{report.summary['pass']} pass, {len(report.failures)} fail, missing {missing[:1]}")


def test_criterion_05_homeomorphisms():
    bad = []
    for S in strict_structures():
        rep = homeomorphism(S)
        if not rep.applicable or not all(f.holds for f in rep.findings):
            bad.append(S.name)
            continue
        T = zariski(S)
        Tmin = T.subspace(spectrum(S).minimals)
        if not Tmin.is_discrete():
            bad.append(S.name)
    record(5, "u and v are inverse homeomorphisms with Max and Min restrictions", not bad,
           f"{len(strict_structures())} strict structures, failures {bad}")


def test_criterion_06_three_way():
    bad = [S.name for S in strict_structures()
           if not (lambda r: r.agree and r.spectral)(is_spectral_algebra(S))]
    lax = corpus.lax_chain()
    qc = is_quasi_commutative(lax)
    triple = is_spectral_algebra(lax)
    ok = not bad and not qc.holds and qc.witness == ("b", "b") and not triple.quasi_commutative
    record(6, "three-way agreement on strict structures; lax chain witness (b,b)", ok,
           f"lax triple spectral={triple.spectral} qc={triple.quasi_commutative} fixedpoint={triple.fixedpoint}")


def test_criterion_07_boolean_isomorphism():
    bad, semiprime = [], 0
    for S in strict_structures():
        rep = boolean_center_iso(S)
        if not (rep.injective and rep.morphism):
            bad.append(S.name)
        if rep.semiprime:
            semiprime += 1
            if not rep.surjective:
                bad.append(S.name)
    record(7, "Boolean centers isomorphic on semiprime members, injective everywhere", not bad,
           f"{semiprime} semiprime members")


def test_criterion_08_annihilator_transfer():
    bad, count = [], 0
    for S in strict_structures():
        if not spectrum(S).semiprime:
            continue
        count += 1
        bad += [(S.name, f.check, f.witness) for f in annihilator_transfer(S) if not f.holds]
    record(8, "annihilator transfer on semiprime members", not bad and count > 0,
           f"{count} semiprime members")


def test_criterion_09_minimal_primes():
    bad, checked = [], 0
    for S in strict_structures():
        if not (spectrum(S).semiprime and is_quasi_commutative(S).holds):
            continue
        for p in spectrum(S).primes:
            checked += 1
            if not min_prime_check(S, p).agree:
                bad.append((S.name, S.names[p]))
    chain = corpus.strict_chain()
    nested = min_prime_check(chain, chain.index("a"))
    ok = not bad and not nested.minimal and not any(nested.conditions[1:])
    record(9, "five-way minimal-prime equivalence", ok, f"{checked} primes, strict-chain a fails (2)-(5)")


def test_criterion_10_functor():
    morphisms = []
    for A in SHIPPED.algebras:
        morphisms.append(identity_morphism(A))
        morphisms += [quotient(A, t)[1] for t in con_lattice(A).congruences]
    morphisms += SHIPPED.morphisms
    bad = []
    for u in morphisms:
        rep = retic_functor(u)
        if not (rep.lattice_morphism and rep.square_commutes):
            bad.append(u.name)
    named = {u.name: retic_functor(u).mapping for u in SHIPPED.morphisms}
    ok = not bad and named == {"Z12->Z4": (0, 0, 1, 1), "Z4->Z2": (0, 1)}
    record(10, "reticulation functor well defined with commuting square", ok, f"{len(morphisms)} morphisms")


def test_criterion_11_fuzzer_stability():
    start = time.perf_counter()
    first = generate_corpus("random-lax-structures", count=100, max_size=6, seed=1)
    second = generate_corpus("random-lax-structures", count=100, max_size=6, seed=1)
    valid = all(validate_structure(structure_to_dict(S)).key() == S.key() and S.size <= 6
                for S in first.structures)
    a = verify.run(first, "all").dumps()
    b = verify.run(Corpus(second.name, structures=second.structures), "all").dumps()
    elapsed = time.perf_counter() - start
    ok = len(first.structures) == 100 and valid and a == b and elapsed < 120
    record(11, "100 seed-1 lax structures validate and verdicts repeat bit for bit", ok, f"{elapsed:.2f}s")
