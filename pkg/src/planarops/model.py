"""Free planar operad on eight bigraded generators, with boundary and
comparison maps into the cell operad.

Generators (arity, dimension, level): m (2,0,0) product, b (2,1,0)
bracket, u (4,2,0) crossing products, l (4,3,0) crossing brackets,
A (3,1,1) associativity homotopy, B (3,2,1) product/bracket
compatibility homotopy, P (4,2,2) and C (4,3,2) second homotopies.
The boundary is the char-2 derivation with

    d(A) = m o1 m + m o2 m
    d(B) = b o1 m + b o2 m + m o1 b + m o2 b
    d(P) = m o1 A + m o2 A + A o1 m + A o2 m + A o3 m
    d(C) = A o1 b + A o2 b + A o3 b + b o1 A + b o2 A
         + B o1 m + B o2 m + B o3 m + m o1 B + m o2 B

and zero on m, b, u, l. The comparison map sends each generator of
level <= 1 to a fixed cell chain and is undefined on P and C.
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable

from . import gerstenhaber, gf2, homology, surjection
from .gerstenhaber import HClass
from .reports import CheckReport, report
from .surjection import Chain

Tree = tuple  # (generator name, child_1, ..., child_arity); leaf child = None


@dataclass(frozen=True)
class GeneratorSymbol:
    name: str
    arity: int
    dimension: int
    level: int


GENERATORS: dict[str, GeneratorSymbol] = {
    g.name: g for g in (
        GeneratorSymbol("m", 2, 0, 0),
        GeneratorSymbol("b", 2, 1, 0),
        GeneratorSymbol("u", 4, 2, 0),
        GeneratorSymbol("l", 4, 3, 0),
        GeneratorSymbol("A", 3, 1, 1),
        GeneratorSymbol("B", 3, 2, 1),
        GeneratorSymbol("P", 4, 2, 2),
        GeneratorSymbol("C", 4, 3, 2),
    )
}


def tree_arity(t: Tree) -> int:
    return sum(1 if c is None else tree_arity(c) for c in t[1:])


def tree_dimension(t: Tree) -> int:
    return GENERATORS[t[0]].dimension + sum(
        tree_dimension(c) for c in t[1:] if c is not None)


def tree_level(t: Tree) -> int:
    return max([GENERATORS[t[0]].level]
               + [tree_level(c) for c in t[1:] if c is not None])


def tree_to_str(t: Tree) -> str:
    """Render as grafts onto the root, highest slot first: "m o2 b o1 b".

    Slots are the root generator's own input positions; rendering the
    highest slot first keeps every lower slot index valid while the text
    is replayed left to right.
    """
    parts = [t[0]]
    grafts = []
    for slot, c in enumerate(t[1:], start=1):
        if c is not None:
            grafts.append((slot, c))
    for root_slot, c in reversed(grafts):
        sub = tree_to_str(c)
        if len(c) > 1 and any(ch is not None for ch in c[1:]):
            sub = f"({sub})"
        parts.append(f"o{root_slot} {sub}")
    return " ".join(parts)


@dataclass(frozen=True)
class FreeChain:
    """F2 sum of tree monomials sharing one arity and dimension."""

    arity: int
    dimension: int
    terms: frozenset[Tree]

    def __post_init__(self) -> None:
        for t in self.terms:
            if tree_arity(t) != self.arity or tree_dimension(t) != self.dimension:
                raise ValueError(f"term {tree_to_str(t)} has the wrong bidegree")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def level(self) -> int:
        return max((tree_level(t) for t in self.terms), default=0)

    def __add__(self, other: "FreeChain") -> "FreeChain":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")
        return FreeChain(self.arity, self.dimension, self.terms ^ other.terms)

    def sorted_terms(self) -> list[Tree]:
        return sorted(self.terms, key=tree_to_str)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(tree_to_str(t) for t in self.sorted_terms())


def generator(name: str) -> FreeChain:
    g = GENERATORS[name]
    tree: Tree = (name, *([None] * g.arity))
    return FreeChain(g.arity, g.dimension, frozenset({tree}))


def free_zero(arity: int, dimension: int = 0) -> FreeChain:
    return FreeChain(arity, dimension, frozenset())


def _graft_tree(t: Tree, i: int, s: Tree) -> Tree:
    count = 0

    def walk(t: Tree) -> Tree:
        nonlocal count
        out = [t[0]]
        for c in t[1:]:
            if c is None:
                count += 1
                out.append(s if count == i else None)
            else:
                out.append(walk(c))
        return tuple(out)

    return walk(t)


def graft(x: FreeChain, i: int, y: FreeChain) -> FreeChain:
    """Substitute y into the i-th input of x; bilinear over F2."""
    if not 1 <= i <= x.arity:
        raise ValueError(f"slot {i} out of range for arity {x.arity}")
    acc: set[Tree] = set()
    for tx in x.terms:
        for ty in y.terms:
            acc ^= {_graft_tree(tx, i, ty)}
    return FreeChain(x.arity + y.arity - 1, x.dimension + y.dimension,
                     frozenset(acc))


_TOKEN = re.compile(r"\s*(?:(?P<op>o(?P<slot>\d+))|(?P<name>[A-Za-z]\w*)"
                    r"|(?P<open>\()|(?P<close>\)))")


def _parse_tree(text: str) -> Tree:
    pos = 0

    def take(kind: str):
        nonlocal pos
        m = _TOKEN.match(text, pos)
        if not m or not m.group(kind):
            raise ValueError(f"expected {kind} at position {pos} in {text!r}")
        pos = m.end()
        return m

    def atom() -> Tree:
        nonlocal pos
        m = _TOKEN.match(text, pos)
        if m and m.group("open"):
            pos = m.end()
            t = chain_expr()
            take("close")
            return t
        m = take("name")
        name = m.group("name")
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r}")
        return (name, *([None] * GENERATORS[name].arity))

    def chain_expr() -> Tree:
        nonlocal pos
        t = atom()
        while True:
            m = _TOKEN.match(text, pos)
            if not (m and m.group("op")):
                return t
            pos = m.end()
            slot = int(m.group("slot"))
            s = atom()
            if not 1 <= slot <= tree_arity(t):
                raise ValueError(f"slot {slot} out of range in {text!r}")
            t = _graft_tree(t, slot, s)

    t = chain_expr()
    if text[pos:].strip():
        raise ValueError(f"trailing input in {text!r}")
    return t


def free_chain_from_str(text: str) -> FreeChain:
    """Parse a "+"-joined sum of graft expressions like "m o1 A + A o3 m"."""
    parts = [p.strip() for p in text.split("+")]
    parts = [p for p in parts if p and p != "0"]
    if not parts:
        raise ValueError("empty chain text needs an explicit bidegree; use free_zero")
    trees = [_parse_tree(p) for p in parts]
    arities = {tree_arity(t) for t in trees}
    dims = {tree_dimension(t) for t in trees}
    if len(arities) > 1 or len(dims) > 1:
        raise ValueError("mixed bidegrees in chain text")
    acc: set[Tree] = set()
    for t in trees:
        acc ^= {t}
    return FreeChain(arities.pop(), dims.pop(), frozenset(acc))


def _boundary_table() -> dict[str, FreeChain]:
    gm, gb = generator("m"), generator("b")
    gA, gB = generator("A"), generator("B")
    dA = graft(gm, 1, gm) + graft(gm, 2, gm)
    dB = (graft(gb, 1, gm) + graft(gb, 2, gm)
          + graft(gm, 1, gb) + graft(gm, 2, gb))
    dP = (graft(gm, 1, gA) + graft(gm, 2, gA)
          + graft(gA, 1, gm) + graft(gA, 2, gm) + graft(gA, 3, gm))
    dC = (graft(gA, 1, gb) + graft(gA, 2, gb) + graft(gA, 3, gb)
          + graft(gb, 1, gA) + graft(gb, 2, gA)
          + graft(gB, 1, gm) + graft(gB, 2, gm) + graft(gB, 3, gm)
          + graft(gm, 1, gB) + graft(gm, 2, gB))
    return {
        "m": free_zero(2, 0), "b": free_zero(2, 0),
        "u": free_zero(4, 1), "l": free_zero(4, 2),
        "A": dA, "B": dB, "P": dP, "C": dC,
    }


def _chain_image_table() -> dict[str, Chain | None]:
    return {
        "m": surjection.chain(2, 0, [(1, 2)]),
        "b": surjection.chain(2, 1, [(1, 2, 1), (2, 1, 2)]),
        "u": gerstenhaber.monomial_to_cycle(
            gerstenhaber.parse_monomial("[x1,x3]*[x2,x4]")),
        "l": gerstenhaber.monomial_to_cycle(
            gerstenhaber.parse_monomial("[[x1,x3],[x2,x4]]")),
        "A": surjection.zero(3, 1),
        "B": surjection.chain(3, 2, ["21312", "23132", "12131", "31323"]),
        "P": None,
        "C": None,
    }


@dataclass(frozen=True)
class ModelSpec:
    """Generator table plus the boundary and the cell-level images."""

    generators: tuple[GeneratorSymbol, ...]
    boundaries: dict[str, FreeChain]
    chain_images: dict[str, Chain | None]


MODEL = ModelSpec(tuple(GENERATORS.values()), _boundary_table(),
                  _chain_image_table())


def _subst(pattern: Tree, children: tuple) -> Tree:
    """Fill the leaves of pattern, in planar order, with the given children."""
    it = iter(children)

    def walk(t: Tree) -> Tree:
        out = [t[0]]
        for c in t[1:]:
            out.append(next(it) if c is None else walk(c))
        return tuple(out)

    return walk(pattern)


def _d_tree(t: Tree) -> frozenset[Tree]:
    name = t[0]
    children = t[1:]
    acc: set[Tree] = set()
    for pattern in MODEL.boundaries[name].terms:
        acc ^= {_subst(pattern, children)}
    for idx, c in enumerate(children):
        if c is None:
            continue
        for dc in _d_tree(c):
            acc ^= {(name, *children[:idx], dc, *children[idx + 1:])}
    return frozenset(acc)


def model_differential(c: FreeChain) -> FreeChain:
    """The derivation extending the generator boundaries; drops (dim, level) by one."""
    if c.dimension == 0:
        return free_zero(c.arity, 0)
    acc: set[Tree] = set()
    for t in c.terms:
        acc ^= _d_tree(t)
    return FreeChain(c.arity, c.dimension - 1, frozenset(acc))


def _pi_tree(t: Tree, images: dict[str, Chain | None]) -> Chain:
    name = t[0]
    img = images[name]
    if img is None:
        raise ValueError(f"pi undefined at level 2 (generator {name})")
    out = img
    slot = 1
    placed = []
    for c in t[1:]:
        if c is None:
            slot += 1
        else:
            placed.append((slot, c))
            slot += 1  # slots are counted in the root generator before grafting
    for root_slot, c in reversed(placed):
        out = surjection.compose(out, root_slot, _pi_tree(c, images))
    return out


def evaluate_pi(c: FreeChain, overrides: dict[str, Chain] | None = None) -> Chain:
    """Image in the cell operad, composing generator images along each tree.

    overrides replaces the image of level <= 1 generators, e.g. to probe
    different homotopy lifts; bidegrees must match the generator.
    """
    images = dict(_DEFAULT_IMAGES)
    for name, chain in (overrides or {}).items():
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r}")
        g = GENERATORS[name]
        if g.level >= 2:
            raise ValueError(f"pi undefined at level 2 (generator {name})")
        if (chain.arity, chain.dimension) != (g.arity, g.dimension):
            raise ValueError(f"override for {name} has the wrong bidegree")
        images[name] = chain
    acc = surjection.zero(c.arity, c.dimension)
    for t in c.terms:
        acc = acc + _pi_tree(t, images)
    return acc


_DEFAULT_IMAGES = MODEL.chain_images


def evaluate_rho(c: FreeChain,
                 overrides: dict[str, Chain] | None = None) -> HClass:
    """Homology class of the image; needs the image to be a cycle."""
    return gerstenhaber.class_of_chain(evaluate_pi(c, overrides))


def enumerate_monomials(arity: int, dimension: int,
                        generators: Iterable[str] | None = None,
                        max_level: int | None = None) -> list[FreeChain]:
    """Tree monomials of the slice, sorted by their rendered form."""
    if generators is None:
        allowed = tuple(GENERATORS)
    else:
        allowed = tuple(generators)
        for name in allowed:
            if name not in GENERATORS:
                raise ValueError(f"unknown generator {name!r}")
    if max_level is not None:
        allowed = tuple(n for n in allowed if GENERATORS[n].level <= max_level)
    trees = _enum_trees(arity, dimension, allowed)
    return [FreeChain(arity, dimension, frozenset({t}))
            for t in sorted(trees, key=tree_to_str)]


@functools.lru_cache(maxsize=None)
def _enum_trees(arity: int, dimension: int,
                allowed: tuple[str, ...]) -> tuple[Tree, ...]:
    if arity < 1 or dimension < 0:
        return ()
    out: list[Tree] = []
    for name in allowed:
        g = GENERATORS[name]
        if g.arity > arity or g.dimension > dimension:
            continue

        def assign(slot: int, rem_a: int, rem_d: int, acc: tuple) -> None:
            if slot == g.arity:
                if rem_a == 0 and rem_d == 0:
                    out.append((name, *acc))
                return
            slots_left = g.arity - slot - 1
            for a in range(1, rem_a - slots_left + 1):
                for d in range(rem_d + 1):
                    if (a, d) == (1, 0):
                        assign(slot + 1, rem_a - 1, rem_d, acc + (None,))
                    for sub in _enum_trees(a, d, allowed):
                        assign(slot + 1, rem_a - a, rem_d - d, acc + (sub,))

        assign(0, arity, dimension - g.dimension, ())
    return tuple(out)


def _class_matrix(monos: list[FreeChain], arity: int, dimension: int):
    """Matrix of the class map on a monomial slice, one column per monomial."""
    betti = homology.homology(arity, dimension).betti
    cols = [evaluate_rho(mc).coords for mc in monos]
    return gf2.BitMatrix.from_columns(cols, betti)


def _coords_in(monos: list[FreeChain], c: FreeChain) -> gf2.BitVector:
    index = {next(iter(mc.terms)): i for i, mc in enumerate(monos)}
    return gf2.BitVector.from_indices(len(monos), (index[t] for t in c.terms))


def verify_bigraded_model() -> list[CheckReport]:
    """Fourteen rank and exactness facts pinning the model against homology."""
    checks: list[CheckReport] = []

    # arity 3: product/bracket slices against the three homology groups
    arity3_expect = {0: (2, "associativity boundary d(A)"),
                     1: (4, "compatibility boundary d(B)"),
                     2: (2, None)}
    for dim, (want, kernel_name) in arity3_expect.items():
        monos = enumerate_monomials(3, dim, generators=("m", "b"))
        mat = _class_matrix(monos, 3, dim)
        kern = gf2.kernel_basis(mat)
        if kernel_name is None:
            ok = len(monos) == want and not kern and gf2.rank(mat) == \
                homology.homology(3, dim).betti
            claim = (f"the {want} arity-3 bracket trees map isomorphically"
                     " onto the degree-2 homology")
        else:
            dgen = model_differential(generator("A" if dim == 0 else "B"))
            ok = (len(monos) == want and len(kern) == 1
                  and kern[0] == _coords_in(monos, dgen))
            claim = (f"the arity-3 slice in dimension {dim} has dimension"
                     f" {want} and class-map kernel spanned by the"
                     f" {kernel_name}")
        checks.append(report(f"model.arity3.dim{dim}", claim, ok,
                             {"slice_dimension": len(monos),
                              "kernel_rank": len(kern)}))

    # arity 4: slice dimensions over {m, b} and over the level-1 homotopies
    level0 = {d: enumerate_monomials(4, d, generators=("m", "b"))
              for d in range(4)}
    for dim, want in ((0, 5), (1, 15), (2, 15)):
        ok = len(level0[dim]) == want
        checks.append(report(
            f"model.arity4.level0.dim{dim}",
            f"arity-4 product/bracket trees in dimension {dim} number {want}",
            ok, {"count": len(level0[dim])}))

    level1 = {}
    for dim, want in ((1, 5), (2, 10), (3, 5)):
        monos = [mc for mc in enumerate_monomials(4, dim,
                                                  generators=("m", "b", "A", "B"))
                 if mc.level == 1]
        level1[dim] = monos
        checks.append(report(
            f"model.arity4.level1.dim{dim}",
            f"arity-4 trees using one homotopy generator in dimension {dim}"
            f" number {want}",
            len(monos) == want, {"count": len(monos)}))

    # exactness: boundaries out of the homotopy slice fill the class-map kernel
    kernel_span = {0: ("P", 4), 1: ("C", 9), 2: (None, 5)}
    for dim, (kname, want_rank) in kernel_span.items():
        upper = level1[dim + 1]
        lower = level0[dim]
        dcols = [_coords_in(lower, model_differential(mc)) for mc in upper]
        dmat = gf2.BitMatrix.from_columns(dcols, len(lower))
        dkern = gf2.kernel_basis(dmat)
        rmat = _class_matrix(lower, 4, dim)
        boundary_classes_vanish = all(
            evaluate_rho(model_differential(mc)).is_zero for mc in upper)
        ranks_fill = gf2.rank(dmat) + gf2.rank(rmat) == len(lower)
        if kname is None:
            kernel_ok = not dkern
            kern_claim = "no boundary relations"
        else:
            dgen = model_differential(generator(kname))
            kernel_ok = len(dkern) == 1 and dkern[0] == _coords_in(upper, dgen)
            kern_claim = f"boundary relations spanned by d({kname})"
        ok = (gf2.rank(dmat) == want_rank and kernel_ok
              and boundary_classes_vanish and ranks_fill)
        checks.append(report(
            f"model.arity4.exactness.dim{dim}",
            f"in arity 4 dimension {dim} the class-map kernel equals the"
            f" boundary image (rank {want_rank}, {kern_claim})",
            ok, {"boundary_rank": gf2.rank(dmat),
                 "kernel_rank_of_boundary": len(dkern)}))

    # the two classes no product/bracket tree reaches
    for dim, gen_name, text in ((2, "u", "[x1,x3]*[x2,x4]"),
                                (3, "l", "[[x1,x3],[x2,x4]]")):
        monos = level0[dim]
        betti = homology.homology(4, dim).betti
        cols = [evaluate_rho(mc).coords for mc in monos]
        elim = gf2.Eliminator()
        for v in cols:
            elim.add(v.word)
        image_rank = elim.rank
        extra = gerstenhaber.class_of_text(text)
        completes = bool(elim.add(extra.coords.word))
        ok = image_rank == betti - 1 and completes
        checks.append(report(
            f"model.arity4.cokernel.dim{dim}",
            f"product/bracket classes fill all of degree-{dim} homology except"
            f" the class of {text}, the image of the generator {gen_name}",
            ok, {"image_rank": image_rank, "betti": betti}))

    order = ["model.arity3.dim0", "model.arity3.dim1", "model.arity3.dim2",
             "model.arity4.level0.dim0", "model.arity4.level0.dim1",
             "model.arity4.level0.dim2", "model.arity4.level1.dim1",
             "model.arity4.level1.dim2", "model.arity4.level1.dim3",
             "model.arity4.exactness.dim0", "model.arity4.exactness.dim1",
             "model.arity4.exactness.dim2", "model.arity4.cokernel.dim2",
             "model.arity4.cokernel.dim3"]
    by_id = {c.check_id: c for c in checks}
    return [by_id[i] for i in order]
