import random
from fractions import Fraction

import pytest

from macfarlane.exactnum import QuadNum, parse_quad
from macfarlane.quatalg import (
    AlgebraDesc, GroupElem, Mat2, Quat, dagger, extend_to_K, from_matrix,
    hilbert_symbol_rational, is_macfarlane, quat_arith, quat_conj, quat_norm,
    quat_trace, ramification_set_rational, to_matrix,
)
from oracles import hilbert_oracle


def rand_quat(rng, desc, span=6):
    def c():
        return QuadNum(Fraction(rng.randint(-span, span), rng.randint(1, 4)),
                       Fraction(rng.randint(-span, span), rng.randint(1, 4)),
                       desc.m)
    return Quat(c(), c(), c(), c(), desc)


DESCS = [AlgebraDesc(1, 1, 1), AlgebraDesc(3, 1, 1), AlgebraDesc(2, 3, 5),
         AlgebraDesc(1, Fraction(1, 2), 4)]


def test_descriptor_json_round_trip():
    for desc in DESCS:
        assert AlgebraDesc.from_json(desc.to_json()) == desc


def test_descriptor_validation():
    with pytest.raises(ValueError):
        AlgebraDesc(4, 1, 1)
    with pytest.raises(ValueError):
        AlgebraDesc(-1, 1, 1)
    with pytest.raises(ValueError):
        AlgebraDesc(1, 0, 1)


def test_defining_relations():
    for desc in DESCS:
        i = Quat(0, 1, 0, 0, desc)
        j = Quat(0, 0, 1, 0, desc)
        k = Quat(0, 0, 0, 1, desc)
        assert i * i == Quat(desc.a, 0, 0, 0, desc)
        assert j * j == Quat(desc.b, 0, 0, 0, desc)
        assert i * j == k
        assert j * i == -k


def test_associativity_and_distributivity():
    rng = random.Random(5)
    for desc in DESCS[:2]:
        for _ in range(25):
            p, q, r = (rand_quat(rng, desc) for _ in range(3))
            assert (p * q) * r == p * (q * r)
            assert p * (q + r) == p * q + p * r


def test_norm_trace_conj():
    rng = random.Random(9)
    for desc in DESCS:
        for _ in range(30):
            p, q = rand_quat(rng, desc), rand_quat(rng, desc)
            assert quat_norm(p * q) == quat_norm(p) * quat_norm(q)
            assert quat_conj(p * q) == quat_conj(q) * quat_conj(p)
            assert quat_trace(p) == p.w * 2
            assert p * quat_conj(p) == Quat(quat_norm(p), 0, 0, 0, desc)
    p = rand_quat(random.Random(1), DESCS[0])
    assert quat_arith(p, p, "sub") == Quat(0, 0, 0, 0, DESCS[0])


def test_inverse():
    rng = random.Random(3)
    q = rand_quat(rng, DESCS[1])
    assert q * q.inverse() == Quat.one(DESCS[1])
    with pytest.raises(ZeroDivisionError):
        Quat(0, 0, 0, 0, DESCS[0]).inverse()


def test_dagger_axioms():
    rng = random.Random(17)
    for desc in DESCS[:3]:
        for _ in range(30):
            p, q = rand_quat(rng, desc), rand_quat(rng, desc)
            assert dagger(dagger(p)) == p
            assert dagger(p * q) == dagger(q) * dagger(p)
            assert dagger(p + q) == dagger(p) + dagger(q)
            # p p^dagger is always dagger-symmetric
            assert (p * dagger(p)).is_dagger_symmetric()


def test_dagger_fixed_space_basis():
    """Fixed points of dagger are spanned by 1, i, j, sqrt(-d) ij."""
    desc = AlgebraDesc(3, 1, 1)
    basis = [Quat.one(desc), Quat(0, 1, 0, 0, desc), Quat(0, 0, 1, 0, desc),
             Quat(0, 0, 0, QuadNum(0, 1, -3), desc)]
    for e in basis:
        assert e.is_dagger_symmetric()
    rng = random.Random(23)
    for _ in range(40):
        q = rand_quat(rng, desc)
        sym = q + dagger(q)
        assert sym.is_dagger_symmetric()
        # symmetric part decomposes over the basis with rational coefficients
        assert sym.w.is_rational() and sym.x.is_rational() and sym.y.is_rational()
        assert sym.z.re == 0


def test_quat_json_round_trip():
    rng = random.Random(31)
    for desc in DESCS:
        q = rand_quat(rng, desc)
        assert Quat.from_json(q.to_json(), desc) == q


# -- group elements ----------------------------------------------------------

def torus_gens():
    desc = AlgebraDesc(1, 1, 1)
    g = GroupElem(Quat(Fraction(3, 2), Fraction(1, 2), 1, 0, desc))
    d = GroupElem(Quat(Fraction(3, 2), Fraction(1, 2), -1, 0, desc))
    return desc, g, d


def test_group_elem_sign_canonicalization():
    desc, g, _ = torus_gens()
    assert GroupElem(-g.q) == g
    assert g * g.inverse() == GroupElem.identity(desc)
    with pytest.raises(ValueError):
        GroupElem(Quat(2, 0, 0, 0, desc))


def test_group_elem_hashable():
    desc, g, d = torus_gens()
    assert len({g, GroupElem(-g.q), d}) == 2


# -- Hilbert symbols ---------------------------------------------------------

PLACES = [2, 3, 5, 7, 11, 13, "inf"]


def test_hilbert_symbol_known_values():
    assert hilbert_symbol_rational(1, 1, 2) == 1
    assert hilbert_symbol_rational(-1, -1, 2) == -1
    assert hilbert_symbol_rational(-1, -1, "inf") == -1
    assert hilbert_symbol_rational(-1, -1, 3) == 1
    assert hilbert_symbol_rational(2, 3, 2) == -1
    assert hilbert_symbol_rational(3, 3, 3) == -1
    assert hilbert_symbol_rational(5, 5, 5) == 1  # (5,5)_5 = (5,-1)_5 = 1


def test_hilbert_symbol_bilinearity():
    rng = random.Random(41)
    for _ in range(60):
        a = rng.choice([n for n in range(-15, 16) if n])
        b = rng.choice([n for n in range(-15, 16) if n])
        c = rng.choice([n for n in range(-15, 16) if n])
        for p in PLACES:
            lhs = hilbert_symbol_rational(a, b * c, p)
            rhs = hilbert_symbol_rational(a, b, p) * hilbert_symbol_rational(a, c, p)
            assert lhs == rhs
            assert hilbert_symbol_rational(a, b, p) == hilbert_symbol_rational(b, a, p)


def test_hilbert_symbol_product_formula():
    rng = random.Random(43)
    for _ in range(25):
        a = rng.choice([n for n in range(-20, 21) if n])
        b = rng.choice([n for n in range(-20, 21) if n])
        primes = {2} | {p for p in range(3, 200) if a % p == 0 or b % p == 0}
        prod = hilbert_symbol_rational(a, b, "inf")
        for p in sorted(primes):
            if all(p % q for q in range(2, p)):
                prod *= hilbert_symbol_rational(a, b, p)
        assert prod == 1


def test_hilbert_symbol_against_bruteforce_oracle():
    rng = random.Random(47)
    for _ in range(8):
        a = rng.choice([n for n in range(-12, 13) if n])
        b = rng.choice([n for n in range(-12, 13) if n])
        for p in PLACES:
            assert hilbert_symbol_rational(a, b, p) == hilbert_oracle(a, b, p), (a, b, p)


def test_ramification_sets():
    assert ramification_set_rational(1, 1) == set()
    assert ramification_set_rational(-1, -1) == {2, "inf"}
    assert ramification_set_rational(2, 3) == {2, 3}
    # ramification sets always have even size
    rng = random.Random(53)
    for _ in range(20):
        a = rng.choice([n for n in range(-20, 21) if n])
        b = rng.choice([n for n in range(-20, 21) if n])
        assert len(ramification_set_rational(a, b)) % 2 == 0


# -- predicate and bridge ----------------------------------------------------

def test_is_macfarlane_cases():
    v = is_macfarlane(3, 1, 1)
    assert v.status == "yes" and v.desc == AlgebraDesc(3, 1, 1)
    v = is_macfarlane(1, -1, -1)
    assert v.status == "yes" and v.desc == AlgebraDesc(1, 1, 1)
    with pytest.raises(ValueError):
        is_macfarlane(-2, 1, 1)  # real quadratic base field
    assert is_macfarlane(1, QuadNum(0, 1, -1), 1).status == "undecided"
    assert is_macfarlane(1, 0, 1).status == "no"
    assert extend_to_K(-3, 5, 2).a == 6


def test_to_matrix_homomorphism():
    rng = random.Random(61)
    for desc in DESCS[:3]:
        for _ in range(15):
            p, q = rand_quat(rng, desc), rand_quat(rng, desc)
            assert to_matrix(p * q) == to_matrix(p) * to_matrix(q)
            assert to_matrix(p + q) == to_matrix(p) + to_matrix(q)
            assert to_matrix(p).det().pure_scalar() == quat_norm(p)
            assert to_matrix(p).trace().pure_scalar() == quat_trace(p)
            assert from_matrix(to_matrix(p), desc) == p


def test_dagger_is_conjugate_transpose():
    rng = random.Random(67)
    desc = AlgebraDesc(1, 1, 1)
    for _ in range(20):
        p = rand_quat(rng, desc)
        assert to_matrix(dagger(p)) == to_matrix(p).conj_transpose()


def test_from_matrix_examples():
    desc = AlgebraDesc(1, 1, 1)
    M = Mat2((("1", "1"), ("1", "2")), desc)
    assert from_matrix(M) == Quat(Fraction(3, 2), Fraction(1, 2), 1, 0, desc)
    M = Mat2((("1", "2"), ("0", "1")), desc)
    assert from_matrix(M) == Quat(1, 0, 1, -1, desc)
    assert to_matrix(Quat.one(desc)) == Mat2(((1, 0), (0, 1)), desc)


def test_from_matrix_rejects_outside_image():
    desc = AlgebraDesc(2, 3, 5)  # sqrt(a), sqrt(b) irrational: strict purity
    q = rand_quat(random.Random(71), desc)
    M = to_matrix(q)
    assert from_matrix(M) == q
    bad = Mat2(((1, 1), (0, 1)), desc)
    with pytest.raises(ValueError):
        from_matrix(bad)
