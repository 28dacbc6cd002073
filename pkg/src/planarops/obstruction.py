"""First formality obstruction of the cell operad at arity 4.

The level-2 generators P and C of the free model have no chain-level
image compatible with the boundary; the defect is measured by the
homology classes of the lifted boundaries. The class at C is nonzero
and stays outside the image of the degree-0 homomorphism space pushed
forward by the boundary, so no choice of lift repairs it: the cell
operad is not formal as a planar operad over F2.

Everything here is certified by explicit chains: a named 2-cycle y, a
14-cell 3-chain whose boundary exhibits y + (lifted boundary of C), the
five basis homomorphisms, and exact rank computations in the
17-dimensional target.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any

from . import gerstenhaber, gf2, homology, model, surjection
from .gerstenhaber import HClass, class_of_text, zero_class
from .gf2 import BitVector
from .model import evaluate_pi, generator, model_differential
from .reports import CheckReport, report
from .surjection import Chain, differential

# 2-cycle representing the crossing bracket pair [x1,x4][x2,x3]
Y_CYCLE = surjection.chain(4, 2, ["141232", "414232", "141323", "414323"])

# 3-chain whose boundary joins Y_CYCLE to the lifted boundary of C
GAMMA = surjection.chain(4, 3, [
    "2314132", "2341432", "2131412", "3414243", "2131242", "2141232",
    "2313242", "2414232", "3141323", "3414323", "3132423", "3134243",
    "1213141", "4142434",
])

# the lifted boundary of C, grouped by contributing model monomial; the
# groups overlap in 313234 and 123242, which cancel in the total
PI_DC_GROUPS: dict[str, tuple[str, ...]] = {
    "B o1 m": ("312423", "314123", "341243", "123242", "131242", "131412",
               "412434"),
    "B o2 m": ("231413", "214123", "234143", "241423", "123141", "414234"),
    "B o3 m": ("213412", "234142", "231342", "121341", "341424", "313424",
               "313234"),
    "m o1 B": ("213124", "231324", "121314", "313234"),
    "m o2 B": ("132423", "134243", "123242", "142434"),
}

CANCELLED_CELLS = ("123242", "313234")

VERDICT_NOT_FORMAL = "NOT_FORMAL"
VERDICT_UNDECIDED = "FORMAL_NOT_EXCLUDED"


@dataclass(frozen=True)
class PiAssignment:
    """A chain-level lift of the two arity-3 homotopy generators."""

    pi_A: Chain
    pi_B: Chain

    def __post_init__(self) -> None:
        if (self.pi_A.arity, self.pi_A.dimension) != (3, 1) and not self.pi_A.is_zero:
            raise ValueError("pi_A must be a 1-chain of arity 3")
        if (self.pi_B.arity, self.pi_B.dimension) != (3, 2):
            raise ValueError("pi_B must be a 2-chain of arity 3")
        if not differential(self.pi_A).is_zero:
            raise ValueError("pi_A must be a cycle")
        want = evaluate_pi(model_differential(generator("B")))
        if not (differential(self.pi_B) + want).is_zero:
            raise ValueError("pi_B must bound the image of d(B)")


def default_assignment() -> PiAssignment:
    return PiAssignment(surjection.zero(3, 1),
                        model.MODEL.chain_images["B"])


def _overrides(pi: PiAssignment) -> dict[str, Chain]:
    return {"A": pi.pi_A, "B": pi.pi_B}


def pi_dC(pi: PiAssignment | None = None) -> Chain:
    """The lift of d(C), a 2-cycle of arity 4; 24 cells at the default lift."""
    pi = pi or default_assignment()
    return evaluate_pi(model_differential(generator("C")), _overrides(pi))


def pi_dP(pi: PiAssignment | None = None) -> Chain:
    pi = pi or default_assignment()
    return evaluate_pi(model_differential(generator("P")), _overrides(pi))


@dataclass(frozen=True)
class Hom0Element:
    """Grading-preserving values on the homotopy generators A and B."""

    value_A: HClass
    value_B: HClass

    def __post_init__(self) -> None:
        if (self.value_A.arity, self.value_A.dimension) != (3, 1):
            raise ValueError("value_A must lie in degree-1 homology of arity 3")
        if (self.value_B.arity, self.value_B.dimension) != (3, 2):
            raise ValueError("value_B must lie in degree-2 homology of arity 3")

    def __add__(self, other: "Hom0Element") -> "Hom0Element":
        return Hom0Element(self.value_A + other.value_A,
                           self.value_B + other.value_B)


@dataclass(frozen=True)
class ObstructionValue:
    """Classes assigned to the two level-2 generators."""

    at_P: HClass
    at_C: HClass

    def __post_init__(self) -> None:
        if (self.at_P.arity, self.at_P.dimension) != (4, 1):
            raise ValueError("at_P must lie in degree-1 homology of arity 4")
        if (self.at_C.arity, self.at_C.dimension) != (4, 2):
            raise ValueError("at_C must lie in degree-2 homology of arity 4")

    def __add__(self, other: "ObstructionValue") -> "ObstructionValue":
        return ObstructionValue(self.at_P + other.at_P, self.at_C + other.at_C)

    def concat(self) -> BitVector:
        """17 coordinates: the 6 at P followed by the 11 at C."""
        p, c = self.at_P.coords, self.at_C.coords
        return BitVector(p.n + c.n, (p.word << c.n) | c.word)


def alpha(pi: PiAssignment | None = None) -> ObstructionValue:
    """Obstruction classes of the lifted boundaries of P and C."""
    pi = pi or default_assignment()
    return ObstructionValue(gerstenhaber.class_of_chain(pi_dP(pi)),
                            gerstenhaber.class_of_chain(pi_dC(pi)))


def verify_gamma() -> bool:
    """Boundary certificate: d(GAMMA) = Y_CYCLE + default pi_dC."""
    return differential(GAMMA) == Y_CYCLE + pi_dC()


def hom0_basis() -> list[Hom0Element]:
    """The five basis homomorphisms out of the homotopy generators."""
    level1 = {g.name for g in model.GENERATORS.values()
              if g.level == 1 and g.arity <= 4}
    if level1 != {"A", "B"}:
        raise RuntimeError("the obstruction expansion assumes A and B are the"
                           " only low-arity homotopy generators")
    za = zero_class(3, 1)
    zb = zero_class(3, 2)
    return [
        Hom0Element(class_of_text("[x1,x2]*x3"), zb),
        Hom0Element(class_of_text("[x1,x3]*x2"), zb),
        Hom0Element(class_of_text("x1*[x2,x3]"), zb),
        Hom0Element(za, class_of_text("[[x1,x2],x3]")),
        Hom0Element(za, class_of_text("[x1,[x2,x3]]")),
    ]


def _hat_tree(t: model.Tree, values: dict[str, HClass]) -> HClass:
    out = values[t[0]]
    slot = 1
    placed = []
    for c in t[1:]:
        if c is not None:
            placed.append((slot, c))
        slot += 1
    for root_slot, c in reversed(placed):
        out = gerstenhaber.class_compose(out, root_slot, _hat_tree(c, values))
    return out


def partial_map(f: Hom0Element) -> ObstructionValue:
    """Push f through the boundary of the level-2 generators.

    f is extended to tree monomials by sending m and b to their classes
    and composing at class level, then evaluated on d(P) and d(C).
    """
    values = {
        "m": gerstenhaber.class_of_chain(model.MODEL.chain_images["m"]),
        "b": gerstenhaber.class_of_chain(model.MODEL.chain_images["b"]),
        "A": f.value_A,
        "B": f.value_B,
    }
    at_P = zero_class(4, 1)
    for t in model_differential(generator("P")).terms:
        at_P = at_P + _hat_tree(t, values)
    at_C = zero_class(4, 2)
    for t in model_differential(generator("C")).terms:
        at_C = at_C + _hat_tree(t, values)
    return ObstructionValue(at_P, at_C)


def partial_images() -> list[ObstructionValue]:
    return [partial_map(f) for f in hom0_basis()]


@dataclass(frozen=True)
class ObstructionCertificate:
    pi_A: str
    pi_B: str
    pi_dC_terms: tuple[str, ...]
    gamma_check: bool
    alpha_at_P: str  # coordinate bits over the canonical class basis
    alpha_at_C: str
    partial_image_rows: tuple[str, ...]  # five 17-bit rows (P bits then C bits)
    span_rank: int
    verdict: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "pi_A": self.pi_A,
            "pi_B": self.pi_B,
            "pi_dC_terms": list(self.pi_dC_terms),
            "gamma_check": self.gamma_check,
            "alpha_at_P": self.alpha_at_P,
            "alpha_at_C": self.alpha_at_C,
            "partial_image_rows": list(self.partial_image_rows),
            "span_rank": self.span_rank,
            "verdict": self.verdict,
        }


def obstruction_verdict(pi: PiAssignment | None = None) -> ObstructionCertificate:
    """Decide whether the obstruction dies in the image of the boundary map."""
    pi = pi or default_assignment()
    cycle = pi_dC(pi)
    a = alpha(pi)
    images = partial_images()
    rows = [v.concat() for v in images]
    elim = gf2.Eliminator()
    for v in rows:
        elim.add(v.word)
    span_rank = elim.rank
    in_image = elim.reduce(a.concat().word) == 0
    verdict = VERDICT_UNDECIDED if in_image else VERDICT_NOT_FORMAL
    return ObstructionCertificate(
        pi_A=str(pi.pi_A),
        pi_B=str(pi.pi_B),
        pi_dC_terms=tuple(surjection.seq_to_str(s, 4) for s in cycle.sorted_terms()),
        gamma_check=verify_gamma(),
        alpha_at_P=a.at_P.coords.to01(),
        alpha_at_C=a.at_C.coords.to01(),
        partial_image_rows=tuple(v.to01() for v in rows),
        span_rank=span_rank,
        verdict=verdict,
    )


def _random_combination(rng: random.Random,
                        vectors: tuple[BitVector, ...], n: int) -> BitVector:
    word = 0
    for v in vectors:
        if rng.getrandbits(1):
            word ^= v.word
    return BitVector(n, word)


def random_assignment(rng: random.Random) -> PiAssignment:
    """A uniformly drawn valid lift: any 1-cycle, any solution for B."""
    h1 = homology.homology(3, 1)
    h2 = homology.homology(3, 2)
    vec_a = _random_combination(rng, h1.cycle_basis, len(h1.basis))
    pi_a = h1.chain_of(vec_a)
    target = evaluate_pi(model_differential(generator("B")))
    matrix = homology.complex_slice(3, 2).boundary_matrix
    particular = gf2.solve(matrix, h1.vector_of(target))
    if particular is None:
        raise RuntimeError("the image of d(B) stopped being a boundary")
    vec_b = particular ^ _random_combination(rng, h2.cycle_basis, len(h2.basis))
    pi_b = h2.chain_of(vec_b)
    return PiAssignment(pi_a, pi_b)


def lift_invariance_check(trials: int, seed: int) -> CheckReport:
    """Redraw the lift and confirm the verdict and coset never move."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    base = alpha()
    images = partial_images()
    rows = [v.concat() for v in images]
    base_verdict = not gf2.in_span(rows, base.concat())
    failures: list[dict[str, Any]] = []
    for trial in range(trials):
        assignment = random_assignment(rng)
        shifted = alpha(assignment)
        same_verdict = (not gf2.in_span(rows, shifted.concat())) == base_verdict
        coset_fixed = gf2.in_span(rows, base.concat() ^ shifted.concat())
        if not (same_verdict and coset_fixed):
            failures.append({"trial": trial,
                             "pi_A": str(assignment.pi_A),
                             "pi_B": str(assignment.pi_B),
                             "same_verdict": same_verdict,
                             "coset_fixed": coset_fixed})
    details: dict[str, Any] = {"trials": trials, "seed": seed}
    if failures:
        details["failures"] = failures[:3]
    return report(
        "obstruction.lift_invariance",
        "redrawing the chain-level lift never changes the verdict and only"
        " moves the obstruction inside the boundary image",
        not failures, details)


def run_obstruction_suite(trials: int, seed: int) \
        -> tuple[list[CheckReport], ObstructionCertificate]:
    """The six obstruction checks plus the machine-readable certificate."""
    checks: list[CheckReport] = []

    cycle = pi_dC()
    grouped = surjection.zero(4, 2)
    for cells in PI_DC_GROUPS.values():
        grouped = grouped + surjection.chain(4, 2, cells)
    cancelled = all(
        sum(cells.count(c) for cells in PI_DC_GROUPS.values()) == 2
        for c in CANCELLED_CELLS)
    ok_cycle = (len(cycle.terms) == 24 and differential(cycle).is_zero
                and grouped == cycle and cancelled)
    checks.append(report(
        "obstruction.cycle",
        "the lifted boundary of C is a 24-cell 2-cycle matching its five"
        " contributing monomials after two shared cells cancel",
        ok_cycle,
        {"terms": [surjection.seq_to_str(s, 4) for s in cycle.sorted_terms()],
         "cancelled": list(CANCELLED_CELLS)}))

    target = Y_CYCLE + cycle
    matrix = homology.complex_slice(4, 3).boundary_matrix
    h2 = homology.homology(4, 2)
    solved = gf2.solve(matrix, h2.vector_of(target))
    ok_gamma = verify_gamma() and solved is not None
    checks.append(report(
        "obstruction.gamma",
        "an explicit 14-cell 3-chain bounds y + (lifted boundary of C), so"
        " the two 2-cycles are homologous; an independent linear solve agrees",
        ok_gamma, {"gamma_cells": len(GAMMA.terms),
                   "solve_found_preimage": solved is not None}))

    a = alpha()
    crossing = class_of_text("[x1,x4]*[x2,x3]")
    ok_alpha = a.at_P.is_zero and a.at_C == crossing and not a.at_C.is_zero
    checks.append(report(
        "obstruction.alpha",
        "the obstruction vanishes at P and equals the nonzero class of"
        " [x1,x4]*[x2,x3] at C",
        ok_alpha, {"alpha_at_P": a.at_P.coords.to01(),
                   "alpha_at_C": a.at_C.coords.to01()}))

    images = partial_images()
    expected_P = [class_of_text("[x1,x2]*x3*x4"),
                  class_of_text("[x1,x4]*x2*x3"),
                  class_of_text("x1*x2*[x3,x4]")]
    first_three = [images[j].at_P for j in range(3)]
    elim = gf2.Eliminator()
    independent = all(elim.add(v.coords.word) for v in first_three)
    pair_value = (class_of_text("[x1,x4]*[x2,x3]")
                  + class_of_text("[x1,x2]*[x3,x4]"))
    ok_partial = (first_three == expected_P and independent
                  and images[3].at_P.is_zero and images[4].at_P.is_zero
                  and images[3].at_C == pair_value
                  and images[4].at_C == pair_value
                  and all(v.concat().n == 17 for v in images))
    checks.append(report(
        "obstruction.partial_images",
        "the five boundary images take their stated values in the"
        " 17-dimensional target: three independent P-components, then twice"
        " the class of [x1,x4]*[x2,x3]+[x1,x2]*[x3,x4] at C",
        ok_partial,
        {"rows": [v.concat().to01() for v in images],
         "target_dimension": 17}))

    cert = obstruction_verdict()
    checks.append(report(
        "obstruction.verdict",
        "the obstruction class lies outside the span of the five boundary"
        " images, so no lift extends to the next level",
        cert.verdict == VERDICT_NOT_FORMAL,
        {"certificate": cert.to_dict()}))

    checks.append(lift_invariance_check(trials, seed))
    return checks, cert
