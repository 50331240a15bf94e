import itertools

import pytest
from hypothesis import given, strategies as st

from retic import corpus
from retic.algebra import product
from retic.commutator import (
    annihilator,
    boolean_center,
    commutator,
    commutator_table,
    is_hyperarchimedean,
    iterated_commutator,
    residuum,
    ring_ideal_oracle,
)
from retic.congruence import Congruence, con_lattice
from retic.errors import NotARing


def ideal(A, d):
    """The congruence of the ideal dZn."""
    return Congruence.from_labels([x % d for x in range(A.size)])


def test_z4_examples(z4):
    t2, delta, nabla = ideal(z4, 2), Congruence.delta(4), Congruence.nabla(4)
    assert commutator(z4, t2, t2) == delta
    assert ring_ideal_oracle(z4, t2, t2) == delta
    assert iterated_commutator(z4, t2, 2) == delta
    assert iterated_commutator(z4, t2, 1) == commutator(z4, t2, t2)
    assert residuum(z4, t2, delta) == t2
    assert annihilator(z4, t2) == t2
    assert residuum(z4, t2, nabla) == nabla
    assert annihilator(z4, delta) == nabla
    assert boolean_center(con_lattice(z4), commutator_table(z4)) == [delta, nabla]


def test_z4_table_frozen(z4):
    assert commutator_table(z4).comm == ((0, 0, 0), (0, 0, 1), (0, 1, 2))


def test_z6_examples(z6):
    t2, t3 = ideal(z6, 2), ideal(z6, 3)
    assert commutator(z6, t2, t3) == Congruence.delta(6)
    assert ring_ideal_oracle(z6, t2, t3) == Congruence.delta(6)
    assert annihilator(z6, t2) == t3
    assert len(boolean_center(con_lattice(z6), commutator_table(z6))) == 4
    nabla = Congruence.nabla(6)
    assert all(iterated_commutator(z6, nabla, n) == nabla for n in range(1, 5))
    ok, steps = is_hyperarchimedean(z6)
    assert ok and set(steps.values()) == {1}


def test_delta_absorbs():
    for A in corpus.algebras():
        L = con_lattice(A)
        d = L.congruences[0]
        assert all(commutator(A, d, t) == d for t in L.congruences)


def test_residuum_with_nabla_on_rings():
    for n in (4, 6, 12):
        A = corpus.zn(n)
        nabla = Congruence.nabla(n)
        for t in con_lattice(A).congruences:
            assert commutator(A, nabla, t) == t
            assert residuum(A, nabla, t) == t


def test_lattices_have_meet_as_commutator():
    for A in (corpus.diamond(), corpus.pentagon(), corpus.chain(4)):
        T = commutator_table(A)
        assert T.comm == T.lattice.meet


def test_ring_oracle_on_every_ring():
    for A in corpus.algebras():
        if "ring" not in A.tags:
            continue
        L = con_lattice(A)
        T = commutator_table(A)
        for i, j in itertools.product(range(L.size), repeat=2):
            assert L.index(ring_ideal_oracle(A, L.congruences[i], L.congruences[j])) == T.comm[i][j]


def test_ring_oracle_refuses_lattices():
    C = corpus.chain(2)
    with pytest.raises(NotARing):
        ring_ideal_oracle(C, Congruence.delta(2), Congruence.nabla(2))


def test_hyperarchimedean_examples():
    assert is_hyperarchimedean(corpus.zn(4))[0]
    assert is_hyperarchimedean(corpus.m2z2())[0]
    assert not is_hyperarchimedean(corpus.t2z2())[0]


def test_simple_ring(z4):
    M = corpus.m2z2()
    assert commutator_table(M).comm == ((0, 0), (0, 1))
    assert ring_ideal_oracle(M, Congruence.nabla(16), Congruence.nabla(16)) == Congruence.nabla(16)


@pytest.mark.parametrize("A", [corpus.zn(6), corpus.zn(8), corpus.t2z2()], ids=lambda a: a.name)
def test_residuation_adjunction(A):
    L = con_lattice(A)
    T = commutator_table(A)
    th = L.congruences
    for a, b, c in itertools.product(range(L.size), repeat=3):
        assert (th[a] <= residuum(A, th[b], th[c])) == L.lattice.le(T.comm[a][b], c)


@given(st.sampled_from([(2, 2), (2, 3), (2, 4), (3, 3)]), st.data())
def test_products_of_rings_match_ideal_oracle(sizes, data):
    P = product(corpus.zn(sizes[0]), corpus.zn(sizes[1]))
    L = con_lattice(P)
    i = data.draw(st.integers(0, L.size - 1))
    j = data.draw(st.integers(0, L.size - 1))
    a, b = L.congruences[i], L.congruences[j]
    c = commutator(P, a, b)
    assert c == commutator(P, b, a) == ring_ideal_oracle(P, a, b)
    assert c <= a.meet(b)
