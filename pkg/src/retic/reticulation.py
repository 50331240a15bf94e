"""The reticulation lattice of a commutator structure and its transfer maps.

C is the closure of the compact set under join and commutator. Two members
of C are identified when they have the same radical, and the classes form the
bounded distributive lattice L. ``star`` sends an element to an ideal of L and
``lower_star`` sends an ideal back; the spectra of the structure and of L are
compared through these two maps.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable

from .algebra import Morphism
from .commutator import annihilator_index, boolean_center_index, hyperarchimedean_index
from .errors import DistributivityViolation, LatticeLawViolation, NotWellDefined
from .lattice import FiniteLattice, brute_force_ideals, topological_order
from .report import Finding, families, family_note, first_failure, not_applicable
from .spectrum import FiniteTopology, SpectrumReport, is_admissible, morphism_adjoints, spectrum, zariski
from .structure import CommutatorStructure, as_structure

BRUTE_FORCE_IDEALS_LIMIT = 10


# -- C ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CSet:
    members: tuple[int, ...]
    trace: dict = field(repr=False)

    def __contains__(self, x: int) -> bool:
        return x in self.trace


@lru_cache(maxsize=None)
def _c_closure(S: CommutatorStructure) -> CSet:
    trace: dict[int, tuple] = {k: ("compact",) for k in S.compact}
    frontier = list(trace)
    while frontier:
        new = []
        for a in frontier:
            for b in list(trace):
                for kind, c in (("join", S.join(a, b)), ("commutator", S.comm[a][b])):
                    if c not in trace:
                        trace[c] = (kind, a, b)
                        new.append(c)
        frontier = new
    return CSet(tuple(sorted(trace)), trace)


def c_closure(obj) -> CSet:
    return _c_closure(as_structure(obj))


# -- ideals of a finite distributive lattice ----------------------------------------

@dataclass(frozen=True, eq=False)
class IdealSpectrum:
    lattice: FiniteLattice = field(repr=False)
    ideals: tuple[frozenset[int], ...]
    primes: tuple[frozenset[int], ...]
    maximals: tuple[frozenset[int], ...]
    minimal_primes: tuple[frozenset[int], ...]
    topology: FiniteTopology = field(repr=False)

    def basic_open(self, ideal: Iterable[int]) -> frozenset[frozenset[int]]:
        """D_Id(I): the prime ideals not containing I."""
        ideal = frozenset(ideal)
        return frozenset(P for P in self.primes if not ideal <= P)


def _ideal_key(I: frozenset[int]):
    return (len(I), sorted(I))


def is_prime_ideal(lat: FiniteLattice, I: frozenset[int]) -> bool:
    if lat.top in I:
        return False
    return all(
        a in I or b in I
        for a in range(lat.size) for b in range(a, lat.size)
        if lat.meet[a][b] in I
    )


@lru_cache(maxsize=None)
def ideal_spectrum(lat: FiniteLattice) -> IdealSpectrum:
    ideals = tuple(sorted(set(lat.ideals()), key=_ideal_key))
    if lat.size <= BRUTE_FORCE_IDEALS_LIMIT:
        assert set(ideals) == brute_force_ideals(lat), "principal ideals miss an ideal"
    proper = [I for I in ideals if lat.top not in I]
    primes = tuple(I for I in proper if is_prime_ideal(lat, I))
    maximals = tuple(I for I in proper if not any(I < J for J in proper))
    minimal = tuple(P for P in primes if not any(Q < P for Q in primes))
    prime_set = frozenset(primes)
    generators = tuple(
        frozenset(P for P in prime_set if x not in P) for x in range(lat.size)
    )
    topology = FiniteTopology(primes, generators, generators)
    return IdealSpectrum(lat, ideals, primes, maximals, minimal, topology)


def annihilator_ideal(lat: FiniteLattice, I: Iterable[int]) -> frozenset[int]:
    I = list(I)
    return frozenset(x for x in range(lat.size) if all(lat.meet[x][y] == lat.bottom for y in I))


def ideal_join(lat: FiniteLattice, ideals: Iterable[frozenset[int]]) -> frozenset[int]:
    return lat.downset(lat.join_all(itertools.chain.from_iterable(ideals)))


# -- the reticulation ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LatticeIdeal:
    members: frozenset[int]
    proper: bool
    prime: bool
    maximal: bool
    minimal_prime: bool
    completed: bool = False

    def __contains__(self, x: int) -> bool:
        return x in self.members


@dataclass(frozen=True, eq=False)
class ReticulationLattice:
    structure: CommutatorStructure = field(repr=False)
    spectrum: SpectrumReport = field(repr=False)
    cset: CSet = field(repr=False)
    classes: tuple[tuple[int, ...], ...]
    lattice: FiniteLattice = field(repr=False)
    lam: dict = field(repr=False)

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def zero(self) -> int:
        return self.lattice.bottom

    @property
    def one(self) -> int:
        return self.lattice.top

    @cached_property
    def ideals(self) -> IdealSpectrum:
        return ideal_spectrum(self.lattice)

    def star_set(self, theta: int, variant: str = "C") -> frozenset[int]:
        return self._stars[variant][theta][0]

    def star_completed(self, theta: int, variant: str = "C") -> bool:
        return self._stars[variant][theta][1]

    @cached_property
    def _stars(self) -> dict[str, tuple[tuple[frozenset[int], bool], ...]]:
        S, lat = self.structure, self.lattice
        out = {}
        for variant, pool in (("C", self.cset.members), ("K", S.compact)):
            rows = []
            for theta in range(S.size):
                raw = {self.lam[a] for a in pool if S.le(a, theta)}
                ideal = lat.downset(lat.join_all(raw))
                rows.append((ideal, ideal != raw))
            out[variant] = tuple(rows)
        return out

    def lower_star(self, ideal: Iterable[int]) -> int:
        ideal = frozenset(ideal)
        S = self.structure
        return S.lattice.join_all(a for a in S.compact if self.lam[a] in ideal)

    def class_name(self, x: int) -> str:
        return self.lattice.names[x]

    def ideal_names(self, ideal: Iterable[int]) -> list[str]:
        return [self.class_name(x) for x in sorted(ideal)]


def _reticulate(S: CommutatorStructure) -> ReticulationLattice:
    sp = spectrum(S)
    C = _c_closure(S)
    by_radical: dict[int, list[int]] = {}
    for a in C.members:
        by_radical.setdefault(sp.radical[a], []).append(a)
    groups = list(by_radical.items())
    rads = [r for r, _ in groups]
    leq0 = [[S.le(r1, r2) for r2 in rads] for r1 in rads]
    order = topological_order([min(m) for _, m in groups], leq0)
    classes = tuple(tuple(groups[i][1]) for i in order)
    names = [S.names[c[0]] for c in classes]
    leq = [[leq0[i][j] for j in order] for i in order]
    try:
        lat = FiniteLattice.from_order(names, leq)
    except LatticeLawViolation as exc:
        raise LatticeLawViolation(f"{S.name}: radical classes do not form a lattice: {exc}", exc.witness) from None
    w = lat.distributivity_witness()
    if w is not None:
        raise DistributivityViolation(
            f"{S.name}: reticulation is not distributive at {[names[i] for i in w]}", w
        )
    lam = {a: i for i, members in enumerate(classes) for a in members}
    return ReticulationLattice(S, sp, C, classes, lat, lam)


@lru_cache(maxsize=None)
def _reticulate_cached(S: CommutatorStructure) -> ReticulationLattice:
    return _reticulate(S)


def reticulate(obj) -> ReticulationLattice:
    return _reticulate_cached(as_structure(obj))


def make_ideal(R: ReticulationLattice, members: Iterable[int], completed: bool = False) -> LatticeIdeal:
    members = frozenset(members)
    sp = R.ideals
    return LatticeIdeal(
        members,
        proper=R.one not in members,
        prime=members in sp.primes,
        maximal=members in sp.maximals,
        minimal_prime=members in sp.minimal_primes,
        completed=completed,
    )


def star(obj, theta: int, variant: str = "C") -> LatticeIdeal:
    """The ideal generated by the classes of C (or K) members below ``theta``.

    Variant C never needs the downward completion; variant K may, in lax
    structures, and records it.
    """
    if variant not in ("C", "K"):
        raise ValueError(f"variant must be 'K' or 'C', got {variant!r}")
    R = reticulate(obj)
    completed = R.star_completed(theta, variant)
    if variant == "C":
        assert not completed, f"{R.structure.name}: C-star of {R.structure.names[theta]} needed completion"
    return make_ideal(R, R.star_set(theta, variant), completed)


def lower_star(obj, ideal: LatticeIdeal | Iterable[int]) -> int:
    R = reticulate(obj)
    members = ideal.members if isinstance(ideal, LatticeIdeal) else frozenset(ideal)
    return R.lower_star(members)


# -- checks ------------------------------------------------------------------------------

def _pair_name(S, *xs):
    return tuple(S.names[x] for x in xs)


def lambda_findings(R: ReticulationLattice) -> list[Finding]:
    S, L, lam, rad = R.structure, R.lattice, R.lam, R.spectrum.radical
    C = R.cset.members
    primes = R.spectrum.primes
    pairs = list(itertools.product(C, C))
    out = [
        first_failure("lambda.preserves-join", (
            (lam[S.join(a, b)] == L.join[lam[a]][lam[b]], _pair_name(S, a, b)) for a, b in pairs)),
        first_failure("lambda.commutator-to-meet", (
            (lam[S.comm[a][b]] == L.meet[lam[a]][lam[b]], _pair_name(S, a, b)) for a, b in pairs)),
        first_failure("lambda.top-only", (
            ((lam[a] == R.one) == (a == S.top), _pair_name(S, a)) for a in C)),
        first_failure("lambda.monotone", (
            (not S.le(a, b) or L.le(lam[a], lam[b]), _pair_name(S, a, b)) for a, b in pairs)),
    ]
    if R.spectrum.semiprime:
        out.append(first_failure("lambda.zero-only-semiprime", (
            ((lam[a] == R.zero) == (a == S.bottom), _pair_name(S, a)) for a in C)))
    else:
        out.append(not_applicable("lambda.zero-only-semiprime", "not semiprime"))
    out.append(first_failure("lambda.order-criteria", (
        (L.le(lam[a], lam[b]) == S.le(rad[a], rad[b])
         == all(S.le(a, p) for p in primes if S.le(b, p)), _pair_name(S, a, b))
        for a, b in pairs)))
    out.append(Finding("lambda.surjective", all(R.classes), None))
    fams = (
        (lam[j] == L.join_all(lam[a] for a in fam), _pair_name(S, *fam))
        for fam in families(C)
        for j in [S.lattice.join_all(fam)] if j in R.cset
    )
    out.append(first_failure("lambda.preserves-family-joins", fams, family_note(C)))
    return out


def _ideals(R: ReticulationLattice) -> tuple[frozenset[int], ...]:
    return R.ideals.ideals


def star_findings(R: ReticulationLattice) -> list[Finding]:
    """Properties of the star maps that need no extra hypothesis (C-variant stars)."""
    S, L = R.structure, R.lattice
    lam, sp = R.lam, R.spectrum
    st, low = R.star_set, R.lower_star
    ideals = _ideals(R)
    primes = sp.primes
    prime_ideals = set(R.ideals.primes)
    iname = R.ideal_names

    def u_preimage(I):
        return frozenset(p for p in primes if not I <= st(p))

    out = [
        first_failure("star.C-variant-is-ideal", (
            (not R.star_completed(t, "C"), _pair_name(S, t)) for t in range(S.size))),
        first_failure("star.principal", (
            (st(t) == L.downset(lam[t]), _pair_name(S, t)) for t in R.cset.members)),
        first_failure("lower-star.compact-membership", (
            (S.le(a, low(I)) == (lam[a] in I), (S.names[a], iname(I)))
            for a in S.compact for I in ideals)),
        first_failure("star.round-trip-element", (
            (S.le(t, low(st(t))), _pair_name(S, t)) for t in range(S.size))),
        first_failure("star.round-trip-ideal", (
            (I <= st(low(I)), iname(I)) for I in ideals)),
        first_failure("star.fixes-primes", (
            (low(st(p)) == p, _pair_name(S, p)) for p in primes)),
        first_failure("lower-star.proper", (
            ((R.one not in I) == (low(I) != S.top), iname(I)) for I in ideals)),
        first_failure("star.proper", (
            ((t != S.top) == (R.one not in st(t)), _pair_name(S, t)) for t in range(S.size))),
        first_failure("star.prime-to-prime-ideal", (
            (st(p) in prime_ideals, _pair_name(S, p)) for p in primes)),
        first_failure("u.preimage-of-basic-open", (
            (u_preimage(I) == sp.basic_open(low(I)), iname(I)) for I in ideals)),
    ]
    images = [st(p) for p in primes]
    T = zariski(S, check_basis=False)
    injective = len(set(images)) == len(images)
    continuous = all(T.is_open(u_preimage(L.downset(x))) for x in range(L.size))
    out.append(Finding(
        "u.injective-continuous", injective and continuous,
        None if injective and continuous else {"injective": injective, "continuous": continuous},
    ))
    out.append(first_failure("star.prime-membership", (
        ((lam[a] in st(p)) == S.le(a, p), _pair_name(S, a, p))
        for a in R.cset.members for p in primes)))
    out.append(first_failure("star.order-reflecting", (
        (S.le(t, p) == (st(t) <= st(p)), _pair_name(S, t, p))
        for t in range(S.size) for p in primes)))
    return out


@dataclass(frozen=True)
class FixedpointReport:
    holds: bool
    witness: object
    prime_form: bool
    prime_witness: object
    findings: tuple[Finding, ...]


def _fixedpoint(R: ReticulationLattice) -> tuple[bool, object, bool, object]:
    st, low = R.star_set, R.lower_star
    bad = next((I for I in _ideals(R) if st(low(I)) != I), None)
    primes = set(R.spectrum.primes)
    bad_p = next((P for P in R.ideals.primes if low(P) not in primes), None)
    return (
        bad is None, None if bad is None else R.ideal_names(bad),
        bad_p is None, None if bad_p is None else R.ideal_names(bad_p),
    )


def fixedpoint_findings(R: ReticulationLattice) -> list[Finding]:
    """Properties that assume every ideal is fixed by ``lower_star`` then ``star``."""
    S, L = R.structure, R.lattice
    holds, witness, prime_form, _ = _fixedpoint(R)
    names = [
        "star.adjunction", "star.commutator-and-meet", "star.preserves-family-joins",
        "lower-star.preserves-family-meets", "v.preimage-of-basic-open",
        "lower-star.principal-zero-set", "spectral.basis-from-C",
    ]
    if not holds:
        return [not_applicable(n, f"ideal fixedpoint fails at {witness}") for n in names]
    st, low = R.star_set, R.lower_star
    sp = R.spectrum
    ideals = _ideals(R)
    elems = list(range(S.size))
    iname = R.ideal_names
    out = [
        first_failure("star.adjunction", (
            ((st(t) <= I) == S.le(t, low(I)), (S.names[t], iname(I))) for t in elems for I in ideals)),
        first_failure("star.commutator-and-meet", (
            (st(S.comm[a][b]) == st(S.meet(a, b)) == (st(a) & st(b)), _pair_name(S, a, b))
            for a, b in itertools.product(elems, elems))),
        first_failure("star.preserves-family-joins", (
            (st(S.lattice.join_all(fam)) == ideal_join(L, [st(t) for t in fam]), _pair_name(S, *fam))
            for fam in families(elems)), family_note(elems)),
        first_failure("lower-star.preserves-family-meets", (
            (low(frozenset(range(L.size)).intersection(*fam)) == S.lattice.meet_all(low(I) for I in fam),
             [iname(I) for I in fam])
            for fam in families(ideals)), family_note(ideals)),
        first_failure("v.preimage-of-basic-open", (
            (frozenset(P for P in R.ideals.primes if low(P) in sp.basic_open(t))
             == R.ideals.basic_open(st(t)), _pair_name(S, t))
            for t in elems)),
        first_failure("lower-star.principal-zero-set", (
            (sp.zero_set(t) == sp.zero_set(low(L.downset(R.lam[t]))), _pair_name(S, t))
            for t in R.cset.members)),
    ]
    T = zariski(S, check_basis=False)
    c_basis = {sp.basic_open(a) for a in R.cset.members}
    closed = all(a & b in c_basis for a in c_basis for b in c_basis)
    out.append(Finding(
        "spectral.basis-from-C", T.generates(c_basis) and closed,
        None if closed else "basis not closed under intersection",
    ))
    return out


def check_fixedpoint(obj) -> FixedpointReport:
    R = reticulate(obj)
    holds, witness, prime_form, prime_witness = _fixedpoint(R)
    findings = [
        Finding("fixedpoint.ideals", holds, witness),
        Finding("fixedpoint.prime-ideals", prime_form, prime_witness),
        Finding("fixedpoint.forms-agree", holds == prime_form, None if holds == prime_form else
                {"ideals": holds, "prime-ideals": prime_form}),
    ]
    findings += star_findings(R) + fixedpoint_findings(R)
    return FixedpointReport(holds, witness, prime_form, prime_witness, tuple(findings))


# -- homeomorphism --------------------------------------------------------------------

def _homeomorphic(u: dict, A: FiniteTopology, B: FiniteTopology) -> bool:
    """Is the bijection ``u`` (points of A -> points of B) a homeomorphism?"""
    if sorted(map(repr, u.values())) != sorted(map(repr, B.points)) or len(set(u.values())) != len(u):
        return False
    return all(
        frozenset(u[y] for y in A.neighbourhood[x]) == B.neighbourhood[u[x]]
        for x in A.points
    )


@dataclass(frozen=True)
class HomeomorphismReport:
    applicable: bool
    reason: str
    u: dict = field(default_factory=dict, repr=False)
    v: dict = field(default_factory=dict, repr=False)
    findings: tuple[Finding, ...] = ()


def homeomorphism(obj) -> HomeomorphismReport:
    R = reticulate(obj)
    S = R.structure
    holds, witness, _, _ = _fixedpoint(R)
    if not holds:
        return HomeomorphismReport(False, f"ideal fixedpoint fails at {witness}")
    sp, isp = R.spectrum, R.ideals
    st, low = R.star_set, R.lower_star
    u = {p: st(p) for p in sp.primes}
    v = {P: low(P) for P in isp.primes}
    T = zariski(S, check_basis=False)
    Tid = isp.topology
    out = [
        first_failure("homeomorphism.inverse", itertools.chain(
            ((v.get(u[p]) == p, _pair_name(S, p)) for p in sp.primes),
            ((u.get(v[P]) == P, R.ideal_names(P)) for P in isp.primes),
        )),
        Finding("homeomorphism.spec", _homeomorphic(u, T, Tid)),
    ]
    if T.materialized and Tid.materialized and out[0].holds:
        mapped = {frozenset(u[p] for p in U) for U in T.opens}
        out.append(Finding("homeomorphism.open-families", mapped == set(Tid.opens)))
    maxes = [p for p in sp.maximals if p in u]
    out.append(first_failure("max.star-maximal", (
        (u[p] in isp.maximals, _pair_name(S, p)) for p in maxes)))
    out.append(first_failure("max.lower-star-maximal", (
        (v[M] in sp.maximals, R.ideal_names(M)) for M in isp.maximals)))
    u_max = {p: u[p] for p in maxes}
    out.append(Finding("max.homeomorphism", _homeomorphic(
        u_max, T.subspace(maxes), Tid.subspace(isp.maximals))))
    Tmax = T.subspace(sp.maximals)
    out.append(Finding("max.compact-t1", Tmax.is_t1(), None, "compactness is automatic for finite spaces"))
    u_min = {p: u[p] for p in sp.minimals}
    out.append(first_failure("min.correspondence", itertools.chain(
        (((p in sp.minimals) == (u[p] in isp.minimal_primes), _pair_name(S, p)) for p in sp.primes),
        (((P in isp.minimal_primes) == (v[P] in sp.minimals), R.ideal_names(P)) for P in isp.primes),
    )))
    out.append(Finding("min.homeomorphism", _homeomorphic(
        u_min, T.subspace(sp.minimals), Tid.subspace(isp.minimal_primes))))
    Tmin = T.subspace(sp.minimals)
    out.append(Finding("min.zero-dimensional-hausdorff", Tmin.is_hausdorff() and Tmin.is_zero_dimensional()))
    return HomeomorphismReport(True, "", u, v, tuple(out))


# -- quasi-commutativity ------------------------------------------------------------------

@dataclass(frozen=True)
class QuasiCommutativeReport:
    holds: bool
    witness: tuple[str, str] | None
    definition_form: bool
    definition_witness: tuple[str, str] | None
    findings: tuple[Finding, ...]


def _qc_witness(S: CommutatorStructure, rad, pool) -> tuple[int, int] | None:
    for a, b in itertools.combinations_with_replacement(pool, 2):
        c = S.comm[a][b]
        if not any(S.le(g, c) and rad[g] == rad[c] for g in S.compact):
            return a, b
    return None


def is_quasi_commutative(obj) -> QuasiCommutativeReport:
    R = reticulate(obj)
    S, sp = R.structure, R.spectrum
    rad = sp.radical
    w = _qc_witness(S, rad, S.compact)
    wp = _qc_witness(S, rad, S.principal)
    holds = w is None
    findings = [Finding(
        "quasi-commutative.compact-vs-principal", holds == (wp is None),
        None if holds == (wp is None) else {"compact": holds, "principal": wp is None},
    )]
    if holds:
        findings.append(first_failure("quasi-commutative.compact-below-C", (
            (any(S.le(g, t) and rad[g] == rad[t] for g in S.compact), _pair_name(S, t))
            for t in R.cset.members)))
        findings.append(first_failure("star.variants-agree", (
            (R.star_set(t, "K") == R.star_set(t, "C"), _pair_name(S, t)) for t in R.cset.members)))
        findings.append(Finding("quasi-commutative.implies-fixedpoint", _fixedpoint(R)[0]))
    else:
        for name in ("quasi-commutative.compact-below-C", "star.variants-agree",
                     "quasi-commutative.implies-fixedpoint"):
            findings.append(not_applicable(name, "not quasi-commutative"))
    return QuasiCommutativeReport(
        holds, None if holds else _pair_name(S, *w),
        wp is None, None if wp is None else _pair_name(S, *wp),
        tuple(findings),
    )


# -- spectral algebras and the three-way verdict -------------------------------------------

@dataclass(frozen=True)
class SpectralAlgebraReport:
    spectral: bool
    quasi_commutative: bool
    fixedpoint: bool
    notes: tuple[str, ...]

    @property
    def agree(self) -> bool:
        return self.spectral == self.quasi_commutative == self.fixedpoint


def is_spectral_algebra(obj) -> SpectralAlgebraReport:
    from .spectrum import spectral_space_check

    S = as_structure(obj)
    T = zariski(S, check_basis=False)
    space = spectral_space_check(T)
    notes = list(space.notes) + list(T.notes)
    notes.append("basic opens of compact elements are compact: automatic for a finite space")
    qc = is_quasi_commutative(S).holds
    fp = _fixedpoint(reticulate(S))[0]
    spectral = space.spectral and not T.notes
    if not (spectral == qc == fp) and not S.strict:
        notes.append("verdicts diverge; lax structures are not join-dense, so no agreement is expected")
    return SpectralAlgebraReport(spectral, qc, fp, tuple(notes))


# -- Boolean center -------------------------------------------------------------------------

@dataclass(frozen=True)
class BooleanReport:
    center: tuple[int, ...]
    lattice_center: tuple[int, ...]
    image: tuple[int, ...]
    injective: bool
    morphism: bool
    surjective: bool
    semiprime: bool
    findings: tuple[Finding, ...]


def boolean_center_iso(obj) -> BooleanReport:
    R = reticulate(obj)
    S, L, lam = R.structure, R.lattice, R.lam
    center = boolean_center_index(S)
    lcenter = L.boolean_center
    findings = [
        first_failure("boolean.center-compact", ((c in S.compact_set, _pair_name(S, c)) for c in center)),
        first_failure("boolean.complemented-pairs", (
            (a in center and b in center, _pair_name(S, a, b))
            for a in range(S.size) for b in range(S.size)
            if S.join(a, b) == S.top and S.comm[a][b] == S.bottom)),
        first_failure("boolean.perp-complements", (
            (S.comm[c][annihilator_index(S, c)] == S.bottom, _pair_name(S, c)) for c in center)),
    ]
    in_c = all(c in R.cset for c in center)
    if not in_c:
        findings.append(Finding("boolean.lambda-into-center", False, "center not inside C"))
        return BooleanReport(center, lcenter, (), False, False, False, R.spectrum.semiprime, tuple(findings))
    image = tuple(sorted({lam[c] for c in center}))
    findings.append(first_failure("boolean.lambda-into-center", (
        (lam[c] in lcenter, _pair_name(S, c)) for c in center)))
    injective = len(image) == len(center)

    def preserved():
        for a, b in itertools.product(center, center):
            m = S.meet(a, b)
            ok = lam[S.join(a, b)] == L.join[lam[a]][lam[b]] and (
                m in R.cset and lam[m] == L.meet[lam[a]][lam[b]])
            yield ok, _pair_name(S, a, b)
        for c in center:
            yield L.meet[lam[c]][lam[annihilator_index(S, c)]] == R.zero and \
                L.join[lam[c]][lam[annihilator_index(S, c)]] == R.one, _pair_name(S, c)
        yield lam[S.bottom] == R.zero and lam[S.top] == R.one, "bounds"

    morphism = first_failure("boolean.injective-morphism", preserved())
    findings.append(Finding(
        "boolean.injective-morphism", injective and morphism.holds,
        morphism.witness if not morphism.holds else (None if injective else "not injective"),
    ))
    surjective = set(image) == set(lcenter)
    if R.spectrum.semiprime:
        findings.append(Finding(
            "boolean.isomorphism", surjective and injective and morphism.holds,
            None if surjective else {"image": len(image), "lattice-center": len(lcenter)},
        ))
    else:
        findings.append(Finding(
            "boolean.isomorphism", surjective, None,
            f"not semiprime; image {len(image)} of {len(lcenter)} complemented classes",
            applicable=False,
        ))
    hyper, _ = hyperarchimedean_index(S, S.compact)
    if hyper and R.spectrum.semiprime:
        findings.append(Finding("hyperarchimedean.quasi-commutative", is_quasi_commutative(S).holds))
    else:
        findings.append(not_applicable("hyperarchimedean.quasi-commutative", "not hyperarchimedean and semiprime"))
    return BooleanReport(
        center, lcenter, image, injective, morphism.holds, surjective, R.spectrum.semiprime, tuple(findings)
    )


# -- annihilators -----------------------------------------------------------------------

def annihilator_transfer(obj) -> list[Finding]:
    """Both transfer identities; on non-semiprime inputs they are marked not applicable."""
    R = reticulate(obj)
    S, L = R.structure, R.lattice
    st, low = R.star_set, R.lower_star
    note = "" if R.spectrum.semiprime else "not semiprime (observed only)"
    out = [
        first_failure("annihilator.star-transfer", (
            (annihilator_ideal(L, st(t)) == st(annihilator_index(S, t)), _pair_name(S, t))
            for t in range(S.size)), note),
        first_failure("annihilator.lower-star-transfer", (
            (low(annihilator_ideal(L, I)) == annihilator_index(S, low(I)), R.ideal_names(I))
            for I in _ideals(R)), note),
    ]
    if not R.spectrum.semiprime:
        out = [Finding(f.check, f.holds, f.witness, f.note, applicable=False) for f in out]
    return out


# -- minimal primes ---------------------------------------------------------------------

@dataclass(frozen=True)
class MinPrimeReport:
    prime: str
    minimal: bool
    conditions: tuple[bool, ...]
    applicable: bool
    note: str = ""

    @property
    def agree(self) -> bool:
        return len(set(self.conditions)) == 1 and self.conditions[0] == self.minimal


def min_prime_check(obj, phi: int) -> MinPrimeReport:
    R = reticulate(obj)
    S, sp = R.structure, R.spectrum
    if phi not in sp.primes:
        raise ValueError(f"{S.names[phi]} is not prime in {S.name}")
    perp = {t: annihilator_index(S, t) for t in range(S.size)}

    def implies(pool):
        return all(not S.le(a, phi) or not S.le(perp[a], phi) for a in pool)

    def iff(pool):
        return all(S.le(a, phi) == (not S.le(perp[a], phi)) for a in pool)

    C = R.cset.members
    conditions = (phi in sp.minimals, implies(C), iff(C), implies(S.compact), iff(S.compact))
    qc = is_quasi_commutative(S).holds
    applicable = sp.semiprime and qc
    note = "" if applicable else "needs a semiprime quasi-commutative input (observed only)"
    return MinPrimeReport(S.names[phi], phi in sp.minimals, conditions, applicable, note)


def lattice_minimal_prime_findings(R: ReticulationLattice) -> list[Finding]:
    L = R.lattice
    isp = R.ideals
    out = []

    def cases():
        for P in isp.primes:
            ann = {x: annihilator_ideal(L, L.downset(x)) for x in range(L.size)}
            c1 = P in isp.minimal_primes
            c2 = all(not ann[x] <= P for x in P)
            c3 = all((x in P) == (not ann[x] <= P) for x in range(L.size))
            yield c1 == c2 == c3, R.ideal_names(P)

    out.append(first_failure("ideal.minimal-prime-criterion", cases()))
    return out


# -- the functor square ----------------------------------------------------------------------

@dataclass(frozen=True)
class FunctorReport:
    morphism: str
    mapping: tuple[int, ...]
    lattice_morphism: bool
    square_commutes: bool
    findings: tuple[Finding, ...]


def retic_functor(u: Morphism) -> FunctorReport:
    """L(u) on classes, defined through ``lambda_B(u_bullet(alpha))``; raises if ill-defined."""
    if not is_admissible(u):
        raise ValueError(f"{u.name} is not admissible")
    RA, RB = reticulate(u.source), reticulate(u.target)
    adj = morphism_adjoints(u)
    mapping: dict[int, int] = {}
    origin: dict[int, int] = {}
    for a in RA.cset.members:
        x = RA.lam[a]
        b = adj.bullet[a]
        if b not in RB.cset:
            raise NotWellDefined(f"{u.name}: image of {RA.structure.names[a]} is outside C", (a,))
        y = RB.lam[b]
        if mapping.setdefault(x, y) != y:
            raise NotWellDefined(
                f"{u.name}: {RA.structure.names[origin[x]]} and {RA.structure.names[a]} share a class "
                "but their images do not",
                (RA.structure.names[origin[x]], RA.structure.names[a]),
            )
        origin.setdefault(x, a)
    LA, LB = RA.lattice, RB.lattice
    m = tuple(mapping[x] for x in range(LA.size))

    def preserves():
        for x, y in itertools.product(range(LA.size), repeat=2):
            yield m[LA.join[x][y]] == LB.join[m[x]][m[y]] and m[LA.meet[x][y]] == LB.meet[m[x]][m[y]], \
                (LA.names[x], LA.names[y])
        yield m[LA.bottom] == LB.bottom and m[LA.top] == LB.top, "bounds"

    morphism = first_failure("functor.lattice-morphism", preserves())
    square = first_failure("functor.square-commutes", (
        (RB.lam[adj.bullet[a]] == m[RA.lam[a]], RA.structure.names[a]) for a in RA.cset.members))
    findings = (Finding("functor.well-defined", True), morphism, square)
    return FunctorReport(u.name, m, morphism.holds, square.holds, findings)
