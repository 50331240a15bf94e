import copy

import pytest
from hypothesis import given, strategies as st
import random

from retic import corpus
from retic.corpus import LAX_CHAIN, _random_candidate
from retic.errors import CommutatorAxiomViolation, CompactSetViolation, InputError, JoinDensityViolation, ParseError
from retic.structure import from_finite_algebra, structure_to_dict, validate_structure
from retic.spectrum import spectrum
from retic.reticulation import reticulate


def test_lax_chain_accepted(lax):
    assert lax.mode == "lax" and lax.label == "lax (formal model)"
    assert [lax.names[k] for k in lax.compact] == ["0", "b", "1"]
    assert lax.names[lax.bracket(lax.index("b"), lax.index("b"))] == "a"


def test_lax_chain_in_strict_mode_fails_density():
    with pytest.raises(JoinDensityViolation) as err:
        validate_structure(LAX_CHAIN, mode="strict")
    assert err.value.witness == ("a",)


def test_top_must_be_idempotent():
    raw = {"kind": "commutator-structure", "name": "bad", "elements": ["0", "1"], "leq": [["0", "1"]],
           "commutator": {"1,1": "0"}, "compact": ["0", "1"], "mode": "strict"}
    with pytest.raises(CommutatorAxiomViolation):
        validate_structure(raw)


def test_compact_set_must_be_join_closed():
    raw = {"kind": "commutator-structure", "name": "v", "elements": ["0", "x", "y", "1"],
           "leq": [["0", "x"], ["0", "y"], ["x", "1"], ["y", "1"]], "compact": ["0", "1"], "mode": "lax"}
    validate_structure(raw)
    raw["compact"] = ["0", "x", "y"]
    with pytest.raises(CompactSetViolation):
        validate_structure(raw)


def test_conflicting_overrides():
    raw = copy.deepcopy(LAX_CHAIN)
    raw["commutator"] = {"a,b": "0", "b,a": "a"}
    with pytest.raises(CommutatorAxiomViolation):
        validate_structure(raw)


@pytest.mark.parametrize("mutate", [
    lambda r: r.update(kind="algebra"),
    lambda r: r.update(compact=["0", "zz"]),
    lambda r: r.update(leq=[["0"]]),
    lambda r: r.update(mode="loose"),
])
def test_parse_errors(mutate):
    raw = copy.deepcopy(LAX_CHAIN)
    mutate(raw)
    with pytest.raises(ParseError):
        validate_structure(raw)


def test_from_finite_algebra_examples(z4):
    S = from_finite_algebra(z4)
    assert S.size == 3 and len(S.compact) == 3 and S.strict
    one = from_finite_algebra(corpus.trivial())
    assert one.size == 1 and one.bottom == one.top


def test_strict_backend_round_trip_for_every_algebra():
    for A in corpus.algebras():
        S = from_finite_algebra(A)
        again = validate_structure(structure_to_dict(S))
        assert again.key() == S.key()
        assert len(again.compact) == again.size
        by_name = lambda T, xs: sorted(T.names[x] for x in xs)
        assert by_name(again, spectrum(again).primes) == by_name(S, spectrum(S).primes)
        rad = lambda T: {T.names[x]: T.names[r] for x, r in enumerate(spectrum(T).radical)}
        assert rad(again) == rad(S)
        assert reticulate(again).size == reticulate(S).size


def test_canonical_order_ignores_listing_order(lax):
    raw = copy.deepcopy(LAX_CHAIN)
    raw["elements"] = list(reversed(raw["elements"]))
    assert validate_structure(raw).key() == lax.key()
    assert validate_structure(raw).names == lax.names


@given(st.integers(0, 10_000))
def test_random_candidates_validate_or_fail_cleanly(seed):
    raw = _random_candidate(random.Random(seed), 6, 0)
    try:
        S = validate_structure(raw)
    except InputError:
        return
    assert validate_structure(structure_to_dict(S)).key() == S.key()
    assert S.comm[S.top][S.top] == S.top
