"""Obstruction pipeline: lifted boundaries, certificates, lift invariance."""
import random
import time

import pytest

from planarops import gf2, model
from planarops import surjection as S
from planarops.gerstenhaber import (class_of_chain, class_of_text,
                                    monomial_to_cycle, parse_monomial,
                                    zero_class)
from planarops.homology import complex_slice, homologous, homology
from planarops.obstruction import (CANCELLED_CELLS, GAMMA, PI_DC_GROUPS, Y_CYCLE,
                                   Hom0Element, ObstructionValue, PiAssignment,
                                   alpha, default_assignment, hom0_basis,
                                   lift_invariance_check, obstruction_verdict,
                                   partial_images, partial_map, pi_dC, pi_dP,
                                   random_assignment, run_obstruction_suite,
                                   verify_gamma)

PI_DC_CELLS = [
    "121314", "121341", "123141", "131242", "131412", "132423", "134243",
    "142434", "213124", "213412", "214123", "231324", "231342", "231413",
    "234142", "234143", "241423", "312423", "313424", "314123", "341243",
    "341424", "412434", "414234",
]


def test_default_lifted_boundary_is_frozen():
    assert pi_dC() == S.chain(4, 2, PI_DC_CELLS)
    assert len(pi_dC().terms) == 24


def test_groups_match_their_monomials():
    total = S.zero(4, 2)
    for text, cells in PI_DC_GROUPS.items():
        part = model.evaluate_pi(model.free_chain_from_str(text))
        assert part == S.chain(4, 2, cells), text
        total = total + part
    assert total == pi_dC()
    for cell in CANCELLED_CELLS:
        hits = sum(cells.count(cell) for cells in PI_DC_GROUPS.values())
        assert hits == 2
        assert S.seq_from_str(cell) not in pi_dC().terms


def test_lifted_boundaries_are_cycles():
    assert S.differential(pi_dC()).is_zero
    assert pi_dP().is_zero  # the default lift kills every term of d(P)
    rng = random.Random(5)
    for _ in range(5):
        pi = random_assignment(rng)
        assert S.differential(pi_dC(pi)).is_zero
        assert S.differential(pi_dP(pi)).is_zero


def test_gamma_certificate():
    assert verify_gamma()
    assert S.differential(GAMMA) == Y_CYCLE + pi_dC()
    assert len(GAMMA.terms) == 14
    assert homologous(pi_dC(), Y_CYCLE)


def test_gamma_perturbation_fails():
    dropped = min(GAMMA.terms)
    perturbed = S.Chain(4, 3, GAMMA.terms - {dropped})
    assert S.differential(perturbed) != Y_CYCLE + pi_dC()


def test_gamma_agrees_with_linear_solve():
    target = Y_CYCLE + pi_dC()
    h2 = homology(4, 2)
    matrix = complex_slice(4, 3).boundary_matrix
    x = gf2.solve(matrix, h2.vector_of(target))
    assert x is not None
    assert matrix.mul(x) == h2.vector_of(target)


def test_alpha_values():
    a = alpha()
    assert a.at_P.is_zero
    assert a.at_C == class_of_text("[x1,x4]*[x2,x3]")
    assert not a.at_C.is_zero
    assert a.at_P.coords.to01() == "000000"
    assert a.at_C.coords.to01() == "00000000100"
    assert a.concat().n == 17
    assert a.concat().to01() == "000000" + "00000000100"


def test_hom0_basis_values():
    basis = hom0_basis()
    assert len(basis) == 5
    for f in basis[:3]:
        assert f.value_B.is_zero and not f.value_A.is_zero
    for f in basis[3:]:
        assert f.value_A.is_zero and not f.value_B.is_zero
    assert basis[4].value_B == class_of_text("[x1,[x2,x3]]")
    # the nested bracket class realized through the cell complex directly
    nested = monomial_to_cycle(parse_monomial("[x1,[x2,x3]]"))
    assert basis[4].value_B == class_of_chain(nested)
    elim = gf2.Eliminator()
    assert all(elim.add(f.value_A.coords.word) for f in basis[:3])


def test_partial_images_values():
    images = partial_images()
    assert [v.at_P for v in images[:3]] == [
        class_of_text("[x1,x2]*x3*x4"),
        class_of_text("[x1,x4]*x2*x3"),
        class_of_text("x1*x2*[x3,x4]"),
    ]
    pair = class_of_text("[x1,x4]*[x2,x3]") + class_of_text("[x1,x2]*[x3,x4]")
    assert images[3].at_P.is_zero and images[4].at_P.is_zero
    assert images[3].at_C == pair and images[4].at_C == pair
    # the last two rows coincide exactly, so the span has rank 4, not 5
    assert images[3].concat() == images[4].concat()
    rows = [v.concat() for v in images]
    assert all(r.n == 17 for r in rows)
    elim = gf2.Eliminator()
    for r in rows:
        elim.add(r.word)
    assert elim.rank == 4


def test_partial_map_is_linear():
    basis = hom0_basis()
    rows = [v.concat() for v in partial_images()]
    zero_f = Hom0Element(zero_class(3, 1), zero_class(3, 2))
    for bits in range(32):
        f = zero_f
        word = 0
        for j in range(5):
            if bits >> j & 1:
                f = f + basis[j]
                word ^= rows[j].word
        assert partial_map(f).concat() == gf2.BitVector(17, word)


def test_alpha_stays_outside_the_image():
    rows = [v.concat() for v in partial_images()]
    assert not gf2.in_span(rows, alpha().concat())


def test_verdict_certificate():
    cert = obstruction_verdict()
    assert cert.verdict == "NOT_FORMAL"
    assert cert.span_rank == 4
    assert cert.gamma_check is True
    assert cert.pi_A == "0"
    assert cert.pi_B == "12131+21312+23132+31323"
    assert list(cert.pi_dC_terms) == PI_DC_CELLS
    assert cert.alpha_at_P == "000000"
    assert cert.alpha_at_C == "00000000100"
    assert len(cert.partial_image_rows) == 5
    assert all(len(r) == 17 and set(r) <= {"0", "1"}
               for r in cert.partial_image_rows)
    assert cert.partial_image_rows[3] == cert.partial_image_rows[4]
    d = cert.to_dict()
    assert set(d) == {"pi_A", "pi_B", "pi_dC_terms", "gamma_check",
                      "alpha_at_P", "alpha_at_C", "partial_image_rows",
                      "span_rank", "verdict"}


def test_assignment_validation():
    with pytest.raises(ValueError, match="pi_A must be a cycle"):
        PiAssignment(S.chain_from_str("1213", 3), default_assignment().pi_B)
    with pytest.raises(ValueError, match="1-chain of arity 3"):
        PiAssignment(S.chain_from_str("121", 2), default_assignment().pi_B)
    with pytest.raises(ValueError, match="pi_B must bound"):
        PiAssignment(S.zero(3, 1), S.zero(3, 2))
    with pytest.raises(ValueError, match="2-chain of arity 3"):
        PiAssignment(S.zero(3, 1), S.chain_from_str("12", 2))
    with pytest.raises(ValueError, match="value_A"):
        Hom0Element(zero_class(3, 2), zero_class(3, 2))
    with pytest.raises(ValueError, match="at_C"):
        ObstructionValue(zero_class(4, 1), zero_class(4, 1))


def test_shifting_pi_b_moves_alpha_by_a_boundary_image():
    # adding the nested-bracket cycle to the B lift shifts alpha by the
    # boundary image of the matching degree-0 homomorphism
    base = default_assignment()
    images = partial_images()
    shift_cycle = monomial_to_cycle(parse_monomial("[[x1,x2],x3]"))
    shifted = PiAssignment(base.pi_A, base.pi_B + shift_cycle)
    got = alpha(shifted).concat() ^ alpha().concat()
    assert got == images[3].concat()


def test_shifting_pi_a_moves_alpha_by_a_boundary_image():
    base = default_assignment()
    images = partial_images()
    shift_cycle = monomial_to_cycle(parse_monomial("[x1,x2]*x3"))
    shifted = PiAssignment(base.pi_A + shift_cycle, base.pi_B)
    got = alpha(shifted).concat() ^ alpha().concat()
    assert got == images[0].concat()


def test_lift_invariance():
    start = time.monotonic()
    rep = lift_invariance_check(50, seed=1)
    assert rep.passed
    assert rep.details["trials"] == 50
    assert time.monotonic() - start < 60
    with pytest.raises(ValueError, match="at least 1"):
        lift_invariance_check(0, seed=1)


def test_suite_runs_and_passes():
    checks, cert = run_obstruction_suite(trials=5, seed=3)
    assert [c.check_id for c in checks] == [
        "obstruction.cycle", "obstruction.gamma", "obstruction.alpha",
        "obstruction.partial_images", "obstruction.verdict",
        "obstruction.lift_invariance"]
    assert all(c.passed for c in checks)
    assert cert.verdict == "NOT_FORMAL"
    verdict_details = checks[4].details["certificate"]
    assert verdict_details == cert.to_dict()
