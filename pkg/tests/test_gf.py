"""Field arithmetic tests, including exhaustive axiom checks for small q."""

import pytest

from mwscodes import NotPrimePowerError, build_field
from mwscodes.gf import _is_irreducible

SMALL_PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64]


def test_build_field_prime():
    f = build_field(2)
    assert (f.p, f.m, f.q) == (2, 1, 2)


def test_build_field_gf4_modulus():
    # Oracle: scan all 4 monic quadratics over GF(2) for irreducibility.
    irreducible = [
        (c0, c1)
        for c0 in range(2)
        for c1 in range(2)
        if _is_irreducible([c0, c1, 1], 2)
    ]
    assert irreducible == [(1, 1)]  # only x^2 + x + 1
    f = build_field(4)
    assert (f.p, f.m) == (2, 2)
    assert f.modulus == (1, 1, 1)


@pytest.mark.parametrize("q", [6, 10, 12, 15, 100])
def test_build_field_rejects_non_prime_powers(q):
    with pytest.raises(NotPrimePowerError):
        build_field(q)


def test_gf2_add():
    assert build_field(2).add(1, 1) == 0


def test_gf3_inv():
    assert build_field(3).inv(2) == 2


def test_gf4_mul_x_times_x():
    # x * x = x^2 reduces to x + 1 by x^2 + x + 1, i.e. index 3.
    assert build_field(4).mul(2, 2) == 3


def test_inv_zero_raises():
    with pytest.raises(ZeroDivisionError):
        build_field(5).inv(0)


@pytest.mark.parametrize("q,expected", [(2, [0, 1]), (3, [0, 1, 2]), (4, [0, 1, 2, 3])])
def test_elements(q, expected):
    assert build_field(q).elements() == expected


@pytest.mark.parametrize("q", SMALL_PRIME_POWERS)
def test_identities(q):
    f = build_field(q)
    for a in f.elements():
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0
        assert f.add(a, f.neg(a)) == 0


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_field_axioms_exhaustive(q):
    f = build_field(q)
    els = f.elements()
    for a in els:
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", SMALL_PRIME_POWERS)
def test_inverses_and_group_order(q):
    f = build_field(q)
    for a in range(1, q):
        assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, q - 1) == 1


@pytest.mark.parametrize("q", [2, 3, 4, 9, 25, 27])
def test_table_and_direct_paths_agree(q):
    f = build_field(q)
    assert f.add_table is not None
    for a in range(q):
        for b in range(q):
            assert f._add_direct(a, b) == int(f.add_table[a, b])
            assert f._mul_direct(a, b) == int(f.mul_table[a, b])


def test_large_field_without_tables():
    f = build_field(257)
    assert f.add_table is None
    assert f.mul(100, 200) == (100 * 200) % 257
    assert f.mul(5, f.inv(5)) == 1


def test_describe():
    d = build_field(4).describe()
    assert d["name"] == "GF(4)"
    assert d["modulus"] == [1, 1, 1]
