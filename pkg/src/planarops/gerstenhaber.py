"""Homology classes named by product/bracket monomials.

A monomial is a planar binary tree of product (m) and bracket (b)
vertices plus a permutation labeling its leaves with variables x1..xk.
Its class in H is realized by composing the representative cycles 12 and
121+212 along the tree and relabeling values by the leaf permutation.
Bracket syntax: "[x1,x4]*[x2,x3]", "[[x1,x2],x3]*x4".
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations, permutations

from . import gf2, homology
from .gf2 import BitVector
from .reports import CheckReport, report
from .surjection import Chain, act, compose, unit

LEAF = ("x",)

PRODUCT_CYCLE = Chain(2, 0, frozenset({(1, 2)}))
BRACKET_CYCLE = Chain(2, 1, frozenset({(1, 2, 1), (2, 1, 2)}))


@dataclass(frozen=True)
class GerstMonomial:
    tree: tuple  # nested ("m", l, r) / ("b", l, r) / LEAF
    leaf_labels: tuple[int, ...]

    def __post_init__(self) -> None:
        k = _leaf_count(self.tree)
        if sorted(self.leaf_labels) != list(range(1, k + 1)):
            raise ValueError("leaf labels must be a permutation of 1..k")

    @property
    def arity(self) -> int:
        return len(self.leaf_labels)

    @property
    def dimension(self) -> int:
        return _bracket_count(self.tree)

    def __str__(self) -> str:
        labels = iter(self.leaf_labels)

        def render(t: tuple) -> str:
            if t == LEAF:
                return f"x{next(labels)}"
            left, right = render(t[1]), render(t[2])
            if t[0] == "b":
                return f"[{left},{right}]"
            if t[2][0] == "m":  # keep the stored association visible
                right = f"({right})"
            return f"{left}*{right}"

        return render(self.tree)


def _leaf_count(t: tuple) -> int:
    return 1 if t == LEAF else _leaf_count(t[1]) + _leaf_count(t[2])


def _bracket_count(t: tuple) -> int:
    if t == LEAF:
        return 0
    return (t[0] == "b") + _bracket_count(t[1]) + _bracket_count(t[2])


def parse_monomial(text: str) -> GerstMonomial:
    s = text.replace(" ", "")
    pos = 0
    labels: list[int] = []

    def atom() -> tuple:
        nonlocal pos
        if pos < len(s) and s[pos] == "(":
            pos += 1
            t = expr()
            if pos >= len(s) or s[pos] != ")":
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            pos += 1
            return t
        if pos < len(s) and s[pos] == "[":
            pos += 1
            left = expr()
            if pos >= len(s) or s[pos] != ",":
                raise ValueError(f"expected ',' in bracket of {text!r}")
            pos += 1
            right = expr()
            if pos >= len(s) or s[pos] != "]":
                raise ValueError(f"unclosed bracket in {text!r}")
            pos += 1
            return ("b", left, right)
        if pos < len(s) and s[pos] == "x":
            pos += 1
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if start == pos:
                raise ValueError(f"variable without index in {text!r}")
            labels.append(int(s[start:pos]))
            return LEAF
        raise ValueError(f"unexpected character at {pos} in {text!r}")

    def expr() -> tuple:
        nonlocal pos
        t = atom()
        while pos < len(s) and s[pos] == "*":
            pos += 1
            t = ("m", t, atom())
        return t

    tree = expr()
    if pos != len(s):
        raise ValueError(f"trailing input in {text!r}")
    return GerstMonomial(tree, tuple(labels))


def monomial_to_cycle(mono: GerstMonomial) -> Chain:
    """Realize the monomial as a cycle; dimension = number of brackets."""

    def evaluate(t: tuple) -> Chain:
        if t == LEAF:
            return unit()
        base = PRODUCT_CYCLE if t[0] == "m" else BRACKET_CYCLE
        # graft right child first so the left slot index stays 1
        out = compose(base, 2, evaluate(t[2]))
        return compose(out, 1, evaluate(t[1]))

    return act(mono.leaf_labels, evaluate(mono.tree))


@dataclass(frozen=True)
class HClass:
    arity: int
    dimension: int
    coords: BitVector

    def __post_init__(self) -> None:
        if self.coords.n != homology.homology(self.arity, self.dimension).betti:
            raise ValueError("coordinate length differs from the betti number")

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "HClass") -> "HClass":
        if (self.arity, self.dimension) != (other.arity, other.dimension):
            raise ValueError("grading mismatch")
        return HClass(self.arity, self.dimension, self.coords ^ other.coords)

    def representative(self) -> Chain:
        return homology.homology(self.arity, self.dimension).representative(self.coords)


def zero_class(arity: int, dimension: int) -> HClass:
    betti = homology.homology(arity, dimension).betti
    return HClass(arity, dimension, BitVector(betti))


def class_of_chain(c: Chain) -> HClass:
    return HClass(c.arity, c.dimension, homology.class_of(c))


def class_of_monomial(mono: GerstMonomial) -> HClass:
    return class_of_chain(monomial_to_cycle(mono))


def class_of_text(text: str) -> HClass:
    return class_of_monomial(parse_monomial(text))


def class_compose(h1: HClass, i: int, h2: HClass) -> HClass:
    """Compose classes through canonical representative cycles."""
    if not 1 <= i <= h1.arity:
        raise ValueError(f"slot {i} out of range for arity {h1.arity}")
    composite = compose(h1.representative(), i, h2.representative())
    return class_of_chain(composite)


def verify_gerstenhaber_relations() -> list[CheckReport]:
    """The defining relations of the homology operad, at class level."""
    cm = class_of_chain(PRODUCT_CYCLE)
    cb = class_of_chain(BRACKET_CYCLE)

    assoc = class_compose(cm, 1, cm) == class_compose(cm, 2, cm)
    rep_assoc = report("gerstenhaber.associativity",
                       "the product composes associatively: m o1 m = m o2 m in H",
                       assoc)

    m_comm = class_of_text("x1*x2") == class_of_text("x2*x1")
    rep_mcomm = report("gerstenhaber.product_commutative",
                       "swapping the two product arguments fixes the class", m_comm)

    b_comm = class_of_text("[x1,x2]") == class_of_text("[x2,x1]")
    rep_bcomm = report("gerstenhaber.bracket_commutative",
                       "swapping the two bracket arguments fixes the class", b_comm)

    jac = (class_of_text("[x1,[x2,x3]]") + class_of_text("[x2,[x3,x1]]")
           + class_of_text("[x3,[x1,x2]]"))
    rep_jac = report("gerstenhaber.jacobi",
                     "the cyclic sum of nested brackets vanishes", jac.is_zero)

    poisson = class_of_text("[x1*x2,x3]") == (class_of_text("x1*[x2,x3]")
                                              + class_of_text("x2*[x1,x3]"))
    rep_poisson = report("gerstenhaber.poisson",
                         "the bracket is a derivation of the product", poisson)

    return [rep_assoc, rep_mcomm, rep_bcomm, rep_jac, rep_poisson]


# hand-listed reference monomials for the small homology groups; the
# (4, 2) list is knowingly dependent (one entry repeats) and the genuine
# basis is computed instead
REFERENCE_TABLE: dict[tuple[int, int], tuple[str, ...]] = {
    (2, 0): ("x1*x2",),
    (2, 1): ("[x1,x2]",),
    (3, 0): ("x1*x2*x3",),
    (3, 1): ("[x1,x2]*x3", "[x1,x3]*x2", "[x2,x3]*x1"),
    (3, 2): ("[[x1,x2],x3]", "[x1,[x2,x3]]"),
    (4, 0): ("x1*x2*x3*x4",),
    (4, 1): ("[x1,x2]*x3*x4", "[x1,x3]*x2*x4", "[x1,x4]*x2*x3",
             "[x2,x3]*x1*x4", "[x2,x4]*x1*x3", "[x3,x4]*x1*x2"),
    (4, 2): ("[[x1,x2],x3]*x4", "[x1,[x2,x3]]*x4", "[[x2,x3],x4]*x1",
             "[x2,[x3,x4]]*x1", "[x1,[x3,x4]]*x2", "[x1,[x3,x4]]*x2",
             "[x1,[x2,x4]]*x3", "[[x1,x2],x4]*x3", "[x1,x2]*[x3,x4]",
             "[x1,x3]*[x2,x4]", "[x1,x4]*[x2,x3]"),
    (4, 3): ("[x1,[x2,[x3,x4]]]", "[x1,[[x2,x4],x3]]", "[[x1,x4],[x2,x3]]",
             "[[x1,x3],[x2,x4]]", "[[x1,[x3,x4]],x2]", "[[[x1,x4],x3],x2]"),
}


def _tree_shapes(n: int) -> list[tuple]:
    if n == 1:
        return [LEAF]
    out = []
    for left_size in range(1, n):
        for lt in _tree_shapes(left_size):
            for rt in _tree_shapes(n - left_size):
                out.append(("?", lt, rt))
    return out


def _assign_ops(shape: tuple, brackets: int) -> list[tuple]:
    slots = []

    def walk(t: tuple, path: tuple) -> None:
        if t == LEAF:
            return
        slots.append(path)
        walk(t[1], path + (1,))
        walk(t[2], path + (2,))

    walk(shape, ())
    out = []
    for chosen in combinations(range(len(slots)), brackets):
        bset = {slots[c] for c in chosen}

        def rebuild(t: tuple, path: tuple) -> tuple:
            if t == LEAF:
                return LEAF
            op = "b" if path in bset else "m"
            return (op, rebuild(t[1], path + (1,)), rebuild(t[2], path + (2,)))

        out.append(rebuild(shape, ()))
    return out


def enumerate_monomials(arity: int, dimension: int) -> list[GerstMonomial]:
    """Every monomial of the slice, in a deterministic printed order."""
    monos = []
    for shape in _tree_shapes(arity):
        for tree in _assign_ops(shape, dimension):
            for perm in permutations(range(1, arity + 1)):
                monos.append(GerstMonomial(tree, perm))
    return sorted(monos, key=str)


@dataclass(frozen=True)
class ReferenceBasis:
    arity: int
    dimension: int
    listed: tuple[GerstMonomial, ...]
    listed_classes: tuple[HClass, ...]
    independent: bool
    spanning: bool
    basis: tuple[GerstMonomial, ...]  # a genuine basis (listed when independent)
    discrepancy: str | None


@functools.lru_cache(maxsize=None)
def reference_basis(arity: int, dimension: int) -> ReferenceBasis:
    """The hand-listed monomials with an independence audit.

    When the listed set fails to be a basis, a replacement is computed by
    a greedy rank-checked sweep over all monomials of the slice.
    """
    if (arity, dimension) not in REFERENCE_TABLE:
        raise ValueError(f"no reference list for arity {arity} dimension {dimension}")
    listed = tuple(parse_monomial(t) for t in REFERENCE_TABLE[arity, dimension])
    classes = tuple(class_of_monomial(m) for m in listed)
    betti = homology.homology(arity, dimension).betti
    elim = gf2.Eliminator()
    rank = 0
    for h in classes:
        if elim.add(h.coords.word):
            rank += 1
    independent = rank == len(listed)
    spanning = rank == betti
    if independent and spanning:
        return ReferenceBasis(arity, dimension, listed, classes, True, True,
                              listed, None)
    greedy: list[GerstMonomial] = []
    gelim = gf2.Eliminator()
    for mono in enumerate_monomials(arity, dimension):
        if len(greedy) == betti:
            break
        if gelim.add(class_of_monomial(mono).coords.word):
            greedy.append(mono)
    note = (f"listed monomials span rank {rank} of {betti}"
            f" ({len(listed)} entries, {len(set(map(str, listed)))} distinct);"
            " computed basis substituted")
    return ReferenceBasis(arity, dimension, listed, classes, independent,
                          spanning, tuple(greedy), note)
