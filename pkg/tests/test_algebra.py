import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from retic import corpus
from retic.algebra import (
    check_morphism,
    identity_morphism,
    make_algebra,
    pair_subalgebra,
    product,
    quotient,
    validate_algebra,
    algebra_to_dict,
)
from retic.congruence import Congruence, brute_force_congruences, con_lattice, kernel
from retic.errors import ArityMismatch, NotACongruence, NotAMorphism, ParseError, RangeViolation, SignatureMismatch
from retic.lattice import order_isomorphism, product_order


def z4_raw():
    n = 4
    return {
        "kind": "algebra", "name": "Z4", "size": n,
        "ops": [
            {"name": "+", "arity": 2, "table": [[(x + y) % n for y in range(n)] for x in range(n)]},
            {"name": "-", "arity": 1, "table": [(-x) % n for x in range(n)]},
            {"name": "*", "arity": 2, "table": [[(x * y) % n for y in range(n)] for x in range(n)]},
            {"name": "0", "arity": 0, "table": 0},
            {"name": "1", "arity": 0, "table": 1},
        ],
    }


def test_validate_z4_entry_by_entry():
    A = validate_algebra(z4_raw())
    assert A.size == 4
    for x, y in itertools.product(range(4), repeat=2):
        assert A.op("+")[x, y] == (x + y) % 4
        assert A.op("*")[x, y] == (x * y) % 4
    assert int(A.op("1")) == 1


def test_out_of_range_entry():
    raw = z4_raw()
    raw["ops"][1]["table"] = [0, 3, 2, 4]
    with pytest.raises(RangeViolation):
        validate_algebra(raw)


def test_binary_symbol_with_flat_table():
    raw = z4_raw()
    raw["ops"][0]["table"] = [0, 1, 2, 3]
    with pytest.raises(ArityMismatch):
        validate_algebra(raw)


@pytest.mark.parametrize("text", ["{", "[]", '{"kind": "algebra", "size": "4", "ops": []}',
                                  '{"kind": "algebra", "size": 2}'])
def test_structural_garbage(text):
    with pytest.raises(ParseError):
        validate_algebra(text)


def test_round_trip_every_corpus_algebra():
    for A in corpus.algebras():
        again = validate_algebra(algebra_to_dict(A))
        assert again == A and again.name == A.name and again.tags == A.tags


def test_product_size_and_encoding():
    P = product(corpus.zn(2), corpus.zn(3))
    assert P.size == 6
    plus = P.op("+")
    for a, b, c, d in itertools.product(range(2), range(3), range(2), range(3)):
        assert plus[a * 3 + b, c * 3 + d] == ((a + c) % 2) * 3 + (b + d) % 3


def test_product_con_count_matches_factors():
    P = product(corpus.zn(2), corpus.zn(3))
    assert len(brute_force_congruences(P)) == 4
    assert con_lattice(P).size == con_lattice(corpus.zn(2)).size * con_lattice(corpus.zn(3)).size


def test_product_with_trivial_factor():
    A = corpus.zn(4)
    one = make_algebra("one", 1, [(o.name, o.arity, lambda *xs: 0) if o.arity else (o.name, 0, 0) for o in A.ops])
    assert product(A, one) == A


def test_product_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        product(corpus.zn(2), corpus.chain(2))


def test_product_associative_up_to_encoding():
    A, B, C = corpus.zn(2), corpus.zn(3), corpus.zn(2)
    left, right = product(product(A, B), C), product(A, product(B, C))
    # (a*|B| + b)*|C| + c == a*|B||C| + (b*|C| + c): both encodings agree
    assert left == right


@pytest.mark.parametrize("A,B", [(corpus.zn(2), corpus.zn(3)), (corpus.zn(2), corpus.zn(2)),
                                 (corpus.zn(4), corpus.zn(2)), (corpus.chain(2), corpus.chain(3))])
def test_horn_fraser_con_of_product(A, B):
    # both factors satisfy [nabla, nabla] = nabla
    LP = con_lattice(product(A, B)).lattice
    LA, LB = con_lattice(A).lattice, con_lattice(B).lattice
    assert order_isomorphism(LP.leq, product_order(LA.leq, LB.leq)) is not None


def test_quotient_z4_by_theta2_is_z2(z4):
    theta = Congruence.from_classes([[0, 2], [1, 3]], 4)
    Q, p = quotient(z4, theta)
    assert Q == corpus.zn(2)
    assert p.surjective and kernel(p) == theta


def test_quotient_extremes(z4):
    Q, _ = quotient(z4, Congruence.delta(4))
    assert Q == z4
    Q, _ = quotient(z4, Congruence.nabla(4))
    assert Q.size == 1


def test_quotient_rejects_non_congruence(z4):
    with pytest.raises(NotACongruence):
        quotient(z4, Congruence.from_classes([[0, 1]], 4))


@pytest.mark.parametrize("classes,size", [([], 4), ([[0, 1, 2, 3]], 16), ([[0, 2], [1, 3]], 8)])
def test_pair_subalgebra_sizes(z4, classes, size):
    P, idx = pair_subalgebra(z4, Congruence.from_classes(classes, 4))
    assert P.size == size
    for k, (x, y) in enumerate(idx.pairs):
        assert idx.index(x, y) == k


def test_diagonal_pair_algebra_is_a_copy(z4):
    P, idx = pair_subalgebra(z4, Congruence.delta(4))
    assert [idx.index(x, x) for x in range(4)] == [0, 1, 2, 3]
    assert P == z4


def test_morphisms(z4):
    u = check_morphism([x % 2 for x in range(4)], z4, corpus.zn(2))
    assert u.surjective
    assert identity_morphism(z4).surjective
    check_morphism(list(range(4)), z4, z4)
    with pytest.raises(NotAMorphism) as err:
        check_morphism([0, 0, 0, 0], z4, corpus.zn(2))
    assert err.value.witness[0] == "1"


def test_kernel_of_every_projection_is_its_congruence():
    for A in corpus.algebras():
        for theta in con_lattice(A).congruences:
            assert kernel(quotient(A, theta)[1]) == theta


@given(st.integers(2, 5), st.data())
def test_random_unary_algebras_close_in_universe(n, data):
    table = data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    A = make_algebra("f", n, [("f", 1, lambda x: table[x])])
    assert np.all((A.op("f") >= 0) & (A.op("f") < n))
    assert set(con_lattice(A).congruences) == brute_force_congruences(A)
