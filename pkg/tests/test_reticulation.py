import pytest
from hypothesis import given, settings, strategies as st

from retic import corpus, verify
from retic.algebra import identity_morphism, quotient
from retic.commutator import annihilator_index
from retic.congruence import Congruence, con_lattice
from retic.errors import InputError
from retic.lattice import FiniteLattice
from retic.reticulation import (
    annihilator_ideal,
    annihilator_transfer,
    boolean_center_iso,
    c_closure,
    check_fixedpoint,
    homeomorphism,
    ideal_spectrum,
    is_quasi_commutative,
    is_spectral_algebra,
    lambda_findings,
    lower_star,
    min_prime_check,
    reticulate,
    retic_functor,
    star,
)
from retic.structure import from_finite_algebra, validate_structure


def ring_ideal(A, d):
    """Index of the congruence of the ideal (d) in Z_n."""
    return con_lattice(A).index(Congruence.from_labels([x % d for x in range(A.size)]))


def is_chain(L):
    return all(L.le(a, b) or L.le(b, a) for a in range(L.size) for b in range(L.size))


def holds(findings):
    bad = [f for f in findings if f.applicable and f.evaluated and not f.holds]
    assert not bad, bad


# -- C and L ----------------------------------------------------------------------

def test_c_closure_strict_is_everything():
    for A in corpus.algebras():
        assert c_closure(A).members == tuple(range(from_finite_algebra(A).size))
    assert len(c_closure(corpus.strict_chain()).members) == 3


def test_c_closure_lax_chain(lax):
    C = c_closure(lax)
    assert sorted(lax.names[x] for x in C.members) == ["0", "1", "a", "b"]
    a = lax.index("a")
    assert C.trace[a][0] == "commutator"


def test_c_closure_is_closed_and_contains_compacts():
    for S in corpus.random_lax_structures(30, 6, 7):
        C = set(c_closure(S).members)
        assert set(S.compact) <= C
        assert all(S.join(a, b) in C and S.comm[a][b] in C for a in C for b in C)


def test_l_z4(z4):
    R = reticulate(z4)
    S = R.structure
    assert R.size == 2 and is_chain(R.lattice)
    assert [sorted(c) for c in R.classes] == [[0, 1], [2]]
    assert R.lam[S.bottom] == R.lam[ring_ideal(z4, 2)] == R.zero


def test_l_z12_is_boolean_square(z12):
    R = reticulate(z12)
    assert R.size == 4 and len(R.lattice.boolean_center) == 4
    classes = {frozenset(c) for c in R.classes}
    assert classes == {
        frozenset({ring_ideal(z12, 12), ring_ideal(z12, 6)}),
        frozenset({ring_ideal(z12, 2), ring_ideal(z12, 4)}),
        frozenset({ring_ideal(z12, 3)}),
        frozenset({ring_ideal(z12, 1)}),
    }


def test_l_lax_chain(lax):
    R = reticulate(lax)
    assert R.size == 3 and is_chain(R.lattice)
    assert R.lam[lax.index("a")] == R.lam[lax.index("b")]
    assert R.lattice.names == ("0", "a", "1")


def test_lambda_suite_everywhere():
    for obj in corpus.algebras() + corpus.structures():
        holds(lambda_findings(reticulate(obj)))


# -- star and lower star --------------------------------------------------------------

def test_star_of_top_is_everything():
    for obj in corpus.algebras() + corpus.structures():
        S = reticulate(obj).structure
        for variant in "KC":
            assert star(obj, S.top, variant).members == frozenset(range(reticulate(obj).size))


def test_star_z4(z4):
    t2 = ring_ideal(z4, 2)
    for variant in "KC":
        I = star(z4, t2, variant)
        assert I.members == {0} and I.prime and I.proper
    assert lower_star(z4, {0}) == t2
    assert lower_star(z4, {0, 1}) == from_finite_algebra(z4).top


def test_star_variants_differ_on_lax_chain(lax):
    R = reticulate(lax)
    a = lax.index("a")
    assert R.ideal_names(star(lax, a, "K").members) == ["0"]
    assert R.ideal_names(star(lax, a, "C").members) == ["0", "a"]


def test_lower_star_z12(z12):
    R = reticulate(z12)
    isp = R.ideals
    assert len(isp.primes) == 2
    t2, t3 = ring_ideal(z12, 2), ring_ideal(z12, 3)
    P = next(P for P in isp.primes if R.lam[t2] not in P)
    assert lower_star(z12, P) == t3


def test_variant_c_star_is_principal():
    for obj in corpus.algebras() + corpus.structures() + corpus.random_lax_structures(20, 6, 2):
        R = reticulate(obj)
        for t in R.cset.members:
            assert R.star_set(t, "C") == R.lattice.downset(R.lam[t])


def test_ideal_spectrum_small_lattices():
    two = ideal_spectrum(FiniteLattice.from_order(["0", "1"], [[True, True], [False, True]]))
    assert two.ideals == (frozenset({0}), frozenset({0, 1}))
    assert two.primes == (frozenset({0}),)
    square = FiniteLattice.from_order(
        ["0", "x", "y", "1"],
        [[True] * 4, [False, True, False, True], [False, False, True, True], [False, False, False, True]],
    )
    sp = ideal_spectrum(square)
    assert len(sp.primes) == 2 and set(sp.primes) == set(sp.maximals) == set(sp.minimal_primes)
    assert all(square.top not in P for P in sp.primes)


def test_annihilator_ideal_of_zero_is_everything():
    L = reticulate(corpus.zn(6)).lattice
    assert annihilator_ideal(L, {L.bottom}) == frozenset(range(L.size))


# -- fixedpoint, homeomorphism, quasi-commutativity ------------------------------------

def test_fixedpoint_on_strict_members():
    for obj in corpus.algebras() + [corpus.strict_chain()]:
        rep = check_fixedpoint(obj)
        assert rep.holds and rep.prime_form
        holds(rep.findings)


def test_fixedpoint_recorded_on_lax_chain(lax):
    rep = check_fixedpoint(lax)
    assert rep.holds == rep.prime_form


def test_homeomorphism_z12(z12):
    rep = homeomorphism(z12)
    assert rep.applicable and len(rep.u) == len(rep.v) == 2
    holds(rep.findings)


def test_homeomorphism_z4(z4):
    rep = homeomorphism(z4)
    t2 = ring_ideal(z4, 2)
    assert rep.u == {t2: frozenset({0})} and rep.v == {frozenset({0}): t2}


def test_homeomorphism_one_prime():
    rep = homeomorphism(corpus.zn(2))
    assert len(rep.u) == 1
    holds(rep.findings)


def test_quasi_commutative(lax):
    for obj in corpus.algebras() + [corpus.strict_chain()]:
        rep = is_quasi_commutative(obj)
        assert rep.holds and rep.witness is None
        holds(rep.findings)
    rep = is_quasi_commutative(lax)
    assert not rep.holds and rep.witness == ("b", "b")


def test_three_way_verdicts(lax):
    for obj in corpus.algebras() + [corpus.strict_chain()]:
        rep = is_spectral_algebra(obj)
        assert rep.spectral and rep.quasi_commutative and rep.fixedpoint
    rep = is_spectral_algebra(lax)
    assert (rep.spectral, rep.quasi_commutative, rep.fixedpoint) == (True, False, True)
    assert any("diverge" in n for n in rep.notes)


# -- Boolean center, annihilators, minimal primes ---------------------------------------

def test_boolean_z6():
    rep = boolean_center_iso(corpus.zn(6))
    assert len(rep.center) == len(rep.lattice_center) == 4
    assert rep.injective and rep.morphism and rep.surjective and rep.semiprime
    holds(rep.findings)


def test_boolean_simple_and_z4(z4):
    rep = boolean_center_iso(corpus.m2z2())
    assert len(rep.center) == len(rep.lattice_center) == 2 and rep.surjective
    rep = boolean_center_iso(z4)
    assert not rep.semiprime and rep.injective and rep.surjective
    assert len(rep.center) == len(rep.lattice_center) == 2


def test_annihilator_transfer_z6():
    z6 = corpus.zn(6)
    S = from_finite_algebra(z6)
    R = reticulate(z6)
    t2, t3 = ring_ideal(z6, 2), ring_ideal(z6, 3)
    assert annihilator_index(S, t2) == t3
    assert annihilator_ideal(R.lattice, R.star_set(t2)) == R.star_set(t3)
    assert annihilator_index(S, S.bottom) == S.top
    assert lower_star(z6, annihilator_ideal(R.lattice, {R.zero})) == S.top
    holds(annihilator_transfer(z6))


def test_annihilator_transfer_not_asserted_without_semiprime(z4):
    assert all(not f.applicable for f in annihilator_transfer(z4))


def test_min_prime_z6_and_strict_chain():
    z6 = corpus.zn(6)
    rep = min_prime_check(z6, ring_ideal(z6, 2))
    assert rep.minimal and all(rep.conditions) and rep.applicable
    S = corpus.strict_chain()
    a = S.index("a")
    rep = min_prime_check(S, a)
    assert not rep.minimal and rep.agree and not any(rep.conditions)
    assert S.le(annihilator_index(S, a), a)
    rep = min_prime_check(S, S.bottom)
    assert rep.minimal and all(rep.conditions)


def test_min_prime_rejects_non_prime(z4):
    with pytest.raises(ValueError):
        min_prime_check(z4, 0)


# -- functor ----------------------------------------------------------------------

def test_functor_identity(z12):
    rep = retic_functor(identity_morphism(z12))
    assert rep.mapping == tuple(range(4)) and rep.square_commutes


def test_functor_named_morphisms():
    by_name = {u.name: u for u in corpus.named_morphisms()}
    z12_z4 = retic_functor(by_name["Z12->Z4"])
    assert z12_z4.mapping == (0, 0, 1, 1) and z12_z4.lattice_morphism and z12_z4.square_commutes
    z4_z2 = retic_functor(by_name["Z4->Z2"])
    assert z4_z2.mapping == (0, 1) and z4_z2.square_commutes


def test_functor_on_projections():
    for A in corpus.algebras():
        for t in con_lattice(A).congruences:
            rep = retic_functor(quotient(A, t)[1])
            assert rep.lattice_morphism and rep.square_commutes


# -- random lax structures ----------------------------------------------------------

@settings(max_examples=40)
@given(st.integers(0, 2**31))
def test_random_lax_reticulation(seed):
    for S in corpus.random_lax_structures(3, 6, seed):
        R = reticulate(S)
        assert R.lattice.distributivity_witness() is None
        assert R.lam[S.top] == R.one and R.lam[S.bottom] == R.zero
        assert sorted(set(R.lam.values())) == list(range(R.size))
        # primes only see compact pairs, so lambda([x,x]) = lambda(x) can fail for x outside K
        holds(f for f in lambda_findings(R) if f.check != "lambda.commutator-to-meet")
        spectral = is_spectral_algebra(S)
        assert isinstance(spectral.agree, bool)


def test_lax_commutator_to_meet_counterexample_is_observed():
    S = corpus.random_lax_structures(3, 6, 19780201)[0]
    e1 = S.index("e1")
    R = reticulate(S)
    assert e1 not in S.compact
    assert R.lam[S.comm[e1][e1]] != R.lam[e1]
    report = verify.run(corpus.Corpus("one", structures=[S]), "reticulation")
    v = report.lookup(S.name, "lambda.commutator-to-meet")
    assert v.status == "observed" and v.value is False and v.witness == ("e1", "e1")


def test_lax_structure_rejected_in_strict_mode():
    from retic.structure import structure_to_dict
    with pytest.raises(InputError):
        validate_structure(structure_to_dict(corpus.lax_chain()), mode="strict")


def test_boolean_center_not_onto_for_t2z2():
    rep = boolean_center_iso(corpus.t2z2())
    assert not rep.semiprime and rep.injective and not rep.surjective
    assert (len(rep.center), len(rep.lattice_center)) == (2, 4)
