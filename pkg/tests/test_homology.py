"""Betti numbers, canonical class coordinates, homologous-cycle tests."""
import random

import pytest

from planarops import gf2, surjection as S
from planarops.homology import (class_of, complex_slice, homologous, homology,
                                poincare_polynomial)

REFERENCE = {2: [1, 1], 3: [1, 3, 2], 4: [1, 6, 11, 6]}


def test_poincare_polynomials_match_reference():
    for arity, betti in REFERENCE.items():
        assert poincare_polynomial(arity) == betti


def _product_formula(arity):
    # coefficients of prod_{j=1}^{arity-1} (1 + j t)
    poly = [1]
    for j in range(1, arity):
        poly = [a + (j * poly[i - 1] if i else 0)
                for i, a in enumerate(poly)] + [j * poly[-1]]
    return poly


def test_poincare_polynomial_matches_product_formula():
    for arity in (2, 3, 4):
        assert poincare_polynomial(arity) == _product_formula(arity)


def test_poincare_polynomial_range():
    with pytest.raises(ValueError):
        poincare_polynomial(1)
    with pytest.raises(ValueError):
        poincare_polynomial(6)


def test_bracket_class_generates_arity2():
    h = homology(2, 1)
    assert h.betti == 1
    assert class_of(S.chain_from_str("121+212", 2)).weight == 1


def test_betti_zero_above_top_dimension():
    assert homology(3, 3).betti == 0
    assert homology(2, 2).betti == 0


def test_class_of_examples():
    assert not class_of(S.zero(2, 0))
    assert class_of(S.chain_from_str("12", 2))
    # 12+21 bounds: delta(121) = 12+21
    assert not class_of(S.chain_from_str("12+21", 2))


def test_class_of_rejects_non_cycles():
    with pytest.raises(ValueError, match="not a cycle"):
        class_of(S.chain_from_str("121", 2))
    with pytest.raises(ValueError, match="not a cycle"):
        class_of(S.chain_from_str("1213", 3))


def test_boundary_matrix_columns_match_differential():
    for arity in (2, 3, 4):
        for dim in range(1, arity):
            sl = complex_slice(arity, dim)
            below = complex_slice(arity, dim - 1)
            index = {s: i for i, s in enumerate(below.basis)}
            for j, s in enumerate(sl.basis):
                col = sl.boundary_matrix.column(j)
                cell = S.Chain(arity, dim, frozenset({s}))
                want = frozenset(index[t] for t in S.differential(cell).terms)
                assert set(col.support()) == want


def test_successive_boundaries_vanish():
    for arity in (3, 4):
        for dim in range(2, arity):
            upper = complex_slice(arity, dim).boundary_matrix
            lower = complex_slice(arity, dim - 1).boundary_matrix
            for j in range(upper.ncols):
                assert not lower.mul(upper.column(j))


def test_homology_basis_invariants():
    for arity in (2, 3, 4):
        for dim in range(arity):
            h = homology(arity, dim)
            assert h.betti == len(h.cycle_basis) - len(h.boundary_basis)
            assert h.betti == len(h.coset_reps)
            dmat = complex_slice(arity, dim).boundary_matrix
            for rep in h.coset_reps:
                assert not dmat.mul(rep)  # every representative is a cycle
            # representatives stay independent after the boundaries
            elim = gf2.Eliminator()
            for b in h.boundary_basis:
                elim.add(b.word)
            assert all(elim.add(rep.word) for rep in h.coset_reps)


def _random_chain(rng, arity, dim):
    basis = complex_slice(arity, dim).basis
    terms = frozenset(s for s in basis if rng.getrandbits(1))
    return S.Chain(arity, dim, terms)


def test_boundaries_have_zero_class():
    rng = random.Random(41)
    for arity in (2, 3, 4):
        for dim in range(1, arity):
            for _ in range(40):
                w = _random_chain(rng, arity, dim)
                assert not class_of(S.differential(w))


def test_class_of_is_additive_on_cycles():
    rng = random.Random(43)
    for arity in (3, 4):
        for dim in range(arity):
            h = homology(arity, dim)
            if not h.coset_reps:
                continue
            for _ in range(20):
                c1 = h.representative(
                    gf2.BitVector(h.betti, rng.getrandbits(h.betti)))
                c2 = h.representative(
                    gf2.BitVector(h.betti, rng.getrandbits(h.betti)))
                boundary = S.differential(_random_chain(rng, arity, dim + 1)) \
                    if dim + 1 < arity else S.zero(arity, dim)
                assert class_of(c1 + c2 + boundary) == \
                    class_of(c1) ^ class_of(c2)


def test_representative_roundtrip():
    h = homology(4, 2)
    rng = random.Random(47)
    for _ in range(20):
        coords = gf2.BitVector(h.betti, rng.getrandbits(h.betti))
        assert class_of(h.representative(coords)) == coords


def test_homologous_relation():
    a = S.chain_from_str("12", 2)
    b = S.chain_from_str("21", 2)
    assert homologous(a, a)
    assert homologous(a, b) and homologous(b, a)
    c = a + S.differential(S.chain_from_str("121+212", 2))
    assert homologous(b, c)  # transitivity target
    with pytest.raises(ValueError):
        homologous(a, S.chain_from_str("123", 3))
    with pytest.raises(ValueError, match="not a cycle"):
        homologous(S.chain_from_str("121", 2), S.chain_from_str("121", 2))


def test_arity5_betti_matches_product_formula():
    poly = _product_formula(5)
    assert poly == [1, 10, 35, 50, 24]
    assert poincare_polynomial(5) == poly
