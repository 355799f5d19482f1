"""Linear code primitives: encodings, spectra, predicates, file format."""

import itertools

import pytest

from mwscodes import (
    EnumerationTooLargeError,
    LinearCode,
    build_field,
    codeword,
    dumps_code,
    is_mws,
    is_mws_lemma,
    is_qm,
    loads_code,
    mws_criterion_sum,
    projective_representatives,
    qm_sufficient_dD,
    qm_sufficient_dn,
    simplex,
    identity_code,
    spectrum_report,
    support,
    weight_spectrum,
    weighted_weight,
)


def make_code(q, rows, mult=()):
    return LinearCode(
        field=build_field(q),
        generator=tuple(tuple(r) for r in rows),
        multiplicities=tuple(mult),
    )


STAIR_2 = [[1, 0, 0], [0, 1, 1]]  # binary code with weights 1, 2, 3


# -- projective representatives -----------------------------------------------

def scalar_orbit_oracle(q, k):
    """Brute force: group all nonzero vectors by scalar multiples."""
    f = build_field(q)
    orbits = set()
    for v in itertools.product(range(q), repeat=k):
        if not any(v):
            continue
        orbit = frozenset(
            tuple(f.mul(s, x) for x in v) for s in range(1, q)
        )
        orbits.add(orbit)
    return orbits


@pytest.mark.parametrize("q,k", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_projective_representatives_one_per_orbit(q, k):
    reps = list(projective_representatives(build_field(q), k))
    assert len(reps) == (q**k - 1) // (q - 1)
    orbits = scalar_orbit_oracle(q, k)
    assert len(orbits) == len(reps)
    for rep in reps:
        # canonical form: first nonzero coordinate is 1
        assert next(x for x in rep if x) == 1
        assert any(rep in orbit for orbit in orbits)
    assert reps == sorted(reps)  # lexicographic order


def test_projective_representatives_binary():
    reps = list(projective_representatives(build_field(2), 2))
    assert reps == [(0, 1), (1, 0), (1, 1)]


def test_projective_representatives_ternary():
    reps = list(projective_representatives(build_field(3), 2))
    assert set(reps) == {(0, 1), (1, 0), (1, 1), (1, 2)}


# -- codeword / support / weight ----------------------------------------------

def test_codeword_zero_and_unit_messages():
    code = make_code(2, STAIR_2)
    assert codeword(code, (0, 0)) == (0, 0, 0)
    assert codeword(code, (1, 0)) == (1, 0, 0)
    assert codeword(code, (0, 1)) == (0, 1, 1)
    assert codeword(code, (1, 1)) == (1, 1, 1)


def test_support():
    assert support((0, 1, 2, 0)) == {1, 2}
    assert support((0, 0)) == frozenset()
    assert support((1, 1, 1, 1)) == {0, 1, 2, 3}


def test_weighted_weight():
    assert weighted_weight((1, 0, 1), (1, 2, 4)) == 5
    assert weighted_weight((0, 0, 0), (7, 8, 9)) == 0
    assert weighted_weight((1, 1, 1), (1, 1, 1)) == 3


def test_weighted_weight_length_mismatch():
    with pytest.raises(ValueError):
        weighted_weight((1, 0), (1, 2, 3))


# -- construction invariants --------------------------------------------------

def test_rank_deficient_generator_rejected():
    with pytest.raises(ValueError, match="rank"):
        make_code(2, [[1, 0, 1], [1, 0, 1]])


def test_bad_multiplicities_rejected():
    with pytest.raises(ValueError):
        make_code(2, STAIR_2, mult=(1, 0, 1))
    with pytest.raises(ValueError):
        make_code(2, STAIR_2, mult=(1, 1))


# -- weight spectrum ----------------------------------------------------------

def test_spectrum_identity_333():
    spec = weight_spectrum(identity_code(2, 3))
    assert spec.counts == {1: 3, 2: 3, 3: 1}
    assert (spec.d, spec.D, spec.L) == (1, 3, 3)


def test_spectrum_simplex_2_3():
    spec = weight_spectrum(simplex(2, 3))
    assert spec.counts == {4: 7}
    assert (spec.d, spec.D, spec.L) == (4, 4, 1)


def test_spectrum_stair():
    # Oracle: the three nonzero words are 100, 011, 111.
    spec = weight_spectrum(make_code(2, STAIR_2))
    assert spec.counts == {1: 1, 2: 1, 3: 1}
    assert spec.L == 3


def test_spectrum_guard():
    code = identity_code(2, 5)
    with pytest.raises(EnumerationTooLargeError):
        weight_spectrum(code, guard=16)


def test_spectrum_guard_env_override(monkeypatch):
    monkeypatch.setenv("MWSCODES_MAX_ENUM", "16")
    with pytest.raises(EnumerationTooLargeError):
        weight_spectrum(identity_code(2, 5))


# -- predicates ---------------------------------------------------------------

def test_is_mws_examples():
    assert is_mws(make_code(2, STAIR_2)) is True
    assert is_mws(identity_code(2, 3)) is False
    assert is_mws(simplex(2, 3)) is False


def test_mws_criterion_sum_examples():
    assert mws_criterion_sum(make_code(2, STAIR_2)) == 0
    # identity [3,3]_2: spectrum {1:3, 2:3, 3:1} -> 3*2 + 3*2 + 1*0 = 12
    assert mws_criterion_sum(identity_code(2, 3)) == 12
    assert not is_mws_lemma(identity_code(2, 3))
    # simplex q=2,k=3: A_4 = 7 -> 7*6 = 42
    assert mws_criterion_sum(simplex(2, 3)) == 42
    assert not is_mws_lemma(simplex(2, 3))


def test_is_qm_examples():
    assert is_qm(identity_code(2, 4)) is True
    assert is_qm(identity_code(3, 2)) is False  # 11 and 12 share support
    assert is_qm(simplex(3, 2)) is True


def test_qm_sufficient_conditions():
    # q = 2: threshold (q-2)/(q-1) = 0, every code with d >= 1 qualifies
    assert qm_sufficient_dn(identity_code(2, 3)) is True
    # simplex q=3,k=2: d=3, n=4, 3/4 > 1/2
    assert qm_sufficient_dn(simplex(3, 2)) is True
    # q=3 code with d=1, n=4: 1/4 > 1/2 fails (no guarantee)
    code = make_code(3, [[1, 0, 0, 0], [0, 1, 1, 1]])
    spec = weight_spectrum(code)
    assert spec.d == 1
    assert qm_sufficient_dn(code) is False


def test_qm_dn_implies_dD():
    # D <= N, so the d/N condition is the stricter one
    for code in [identity_code(2, 3), simplex(3, 2), make_code(3, [[1, 1, 0], [0, 1, 1]])]:
        if qm_sufficient_dn(code):
            assert qm_sufficient_dD(code)


# -- matrix file format -------------------------------------------------------

def test_matrix_roundtrip_plain():
    code = make_code(3, [[1, 0, 2], [0, 1, 1]])
    text = dumps_code(code)
    assert text.splitlines()[0] == "3 2 3"
    assert len(text.splitlines()) == 3  # multiplicity line omitted when all 1
    back = loads_code(text)
    assert back.generator == code.generator
    assert back.multiplicities == (1, 1, 1)


def test_matrix_roundtrip_with_multiplicities():
    code = make_code(2, STAIR_2, mult=(1, 2, 4))
    back = loads_code(dumps_code(code))
    assert back.multiplicities == (1, 2, 4)
    assert back.effective_length == 7


def test_matrix_parse_errors():
    with pytest.raises(ValueError):
        loads_code("2 2\n1 0\n0 1\n")
    with pytest.raises(ValueError):
        loads_code("2 2 2\n1 0\n")


def test_spectrum_report_shape():
    rep = spectrum_report(make_code(2, STAIR_2))
    assert rep["q"] == 2 and rep["k"] == 2 and rep["n"] == 3 and rep["N"] == 3
    assert rep["counts"] == {"1": 1, "2": 1, "3": 1}
    assert rep["is_mws"] is True and rep["is_qm"] is True
    assert rep["has_zero_column"] is False
    assert rep["field"]["modulus"] == [0, 1]
