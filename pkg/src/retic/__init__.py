"""Commutators, prime spectra and reticulations of finite algebras."""
from .algebra import (
    FiniteAlgebra,
    Morphism,
    Operation,
    Signature,
    check_morphism,
    identity_morphism,
    make_algebra,
    pair_subalgebra,
    product,
    quotient,
    validate_algebra,
)
from .commutator import (
    annihilator,
    boolean_center,
    commutator,
    commutator_table,
    is_hyperarchimedean,
    iterated_commutator,
    residuum,
    ring_ideal_oracle,
)
from .congruence import Congruence, CongruenceLattice, cg, con_lattice, is_modular
from .corpus import Corpus, generate_corpus
from .dot import export_dot
from .errors import InputError, ReticError
from .lattice import FiniteLattice
from .reticulation import (
    CSet,
    LatticeIdeal,
    ReticulationLattice,
    annihilator_transfer,
    boolean_center_iso,
    c_closure,
    check_fixedpoint,
    homeomorphism,
    ideal_spectrum,
    is_quasi_commutative,
    is_spectral_algebra,
    lower_star,
    min_prime_check,
    reticulate,
    retic_functor,
    star,
)
from .spectrum import (
    FiniteTopology,
    SpectrumReport,
    is_admissible,
    is_prime,
    morphism_adjoints,
    spectral_space_check,
    spectrum,
    zariski,
)
from .structure import CommutatorStructure, from_finite_algebra, validate_structure
from .verify import VerifyReport, run as verify_corpus

__all__ = [name for name in dir() if not name.startswith("_")]
