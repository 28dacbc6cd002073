"""The level-2 surjection chain operad (cells of spineless cacti).

A basis cell of arity k and dimension i is a sequence of length i+k over
{1..k} that is surjective, has no equal adjacent entries, and contains
no ordered subsequence a b a b with a != b. The differential deletes one
entry in all ways; composition substitutes interval decompositions.
Everything is exact arithmetic over F2: a chain is a finite set of cells
and addition is symmetric difference.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator

from .reports import CheckReport, report

Seq = tuple[int, ...]


def _pair_alternations(s: Iterable[int], a: int, b: int) -> int:
    """Length of the {a,b}-subsequence of s with repeats collapsed."""
    count = 0
    last = 0
    for v in s:
        if v == a or v == b:
            if v != last:
                count += 1
                last = v
    return count


def is_valid(values: Iterable[int], arity: int) -> bool:
    """True iff the sequence is a basis cell of the given arity."""
    s = tuple(values)
    # cells above the top dimension do not exist
    if not s or len(s) > 2 * arity - 1:
        return False
    seen = set()
    prev = 0
    for v in s:
        if v < 1 or v > arity or v == prev:
            return False
        seen.add(v)
        prev = v
    if len(seen) != arity:
        return False
    # abab over ordered subsequences: some pair alternates four times
    vals = sorted(seen)
    for ai in range(len(vals)):
        for bi in range(ai + 1, len(vals)):
            if _pair_alternations(s, vals[ai], vals[bi]) >= 4:
                return False
    return True


def seq_dimension(s: Seq, arity: int) -> int:
    return len(s) - arity


def seq_to_str(s: Seq, arity: int | None = None) -> str:
    k = arity if arity is not None else max(s)
    if k <= 9:
        return "".join(str(v) for v in s)
    return ",".join(str(v) for v in s)


def seq_from_str(text: str) -> Seq:
    if "," in text:
        return tuple(int(p) for p in text.split(","))
    return tuple(int(ch) for ch in text)


@dataclass(frozen=True)
class Chain:
    """Homogeneous F2 sum of cells; the empty term set is the zero chain."""

    arity: int
    dimension: int
    terms: frozenset[Seq]

    def __post_init__(self) -> None:
        want = self.arity + self.dimension
        for t in self.terms:
            if len(t) != want:
                raise ValueError(f"term {t} has wrong length for ({self.arity},{self.dimension})")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Chain") -> "Chain":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")
        return Chain(self.arity, self.dimension, self.terms ^ other.terms)

    def sorted_terms(self) -> list[Seq]:
        return sorted(self.terms)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return "+".join(seq_to_str(t, self.arity) for t in self.sorted_terms())


def chain(arity: int, dimension: int, terms: Iterable[Seq | str] = ()) -> Chain:
    tt = frozenset(seq_from_str(t) if isinstance(t, str) else tuple(t) for t in terms)
    return Chain(arity, dimension, tt)


def chain_from_str(text: str, arity: int) -> Chain:
    """Parse a "+"-joined cell sum; all terms must share one dimension."""
    parts = [p for p in text.replace(" ", "").split("+") if p and p != "0"]
    terms = frozenset(seq_from_str(p) for p in parts)
    dims = {len(t) - arity for t in terms}
    if len(dims) > 1:
        raise ValueError("mixed dimensions in chain text")
    dim = dims.pop() if dims else 0
    return Chain(arity, dim, terms)


def zero(arity: int, dimension: int = 0) -> Chain:
    return Chain(arity, dimension, frozenset())


def unit() -> Chain:
    """The operad unit: the arity-1 cell (1)."""
    return Chain(1, 0, frozenset({(1,)}))


def enumerate_basis(arity: int, dimension: int) -> list[Seq]:
    """All cells of the slice, lexicographically sorted."""
    if arity < 1 or dimension < 0 or dimension > arity - 1:
        return []
    length = arity + dimension
    out: list[Seq] = []
    prefix: list[int] = []

    def extend(missing: int) -> None:
        pos = len(prefix)
        if pos == length:
            if missing == 0:
                out.append(tuple(prefix))
            return
        if missing > length - pos:
            return
        present = set(prefix)
        for v in range(1, arity + 1):
            if prefix and v == prefix[-1]:
                continue
            if any(a != v and _pair_alternations((*prefix, v), a, v) >= 4
                   for a in present):
                continue
            prefix.append(v)
            extend(missing - (0 if v in present else 1))
            prefix.pop()

    extend(arity)
    return out  # backtracking in increasing value order is already lexicographic


def differential_seq(s: Seq, arity: int) -> frozenset[Seq]:
    out: set[Seq] = set()
    for j in range(len(s)):
        t = s[:j] + s[j + 1:]
        if is_valid(t, arity):
            out ^= {t}
    return frozenset(out)


def differential(c: Chain) -> Chain:
    """Entry deletion summed over all positions, mod 2; lowers dimension by 1."""
    if c.dimension == 0:
        return zero(c.arity, 0)
    acc: set[Seq] = set()
    for s in c.terms:
        acc ^= differential_seq(s, c.arity)
    return Chain(c.arity, c.dimension - 1, frozenset(acc))


def interval_decompositions(y: Seq, n: int) -> list[tuple[Seq, ...]]:
    """Overlapping partitions of y into n pieces sharing single boundary elements."""
    if n < 1:
        raise ValueError("need at least one piece")
    length = len(y)
    out: list[tuple[Seq, ...]] = []
    for cuts in combinations_with_replacement(range(1, length + 1), n - 1):
        pieces = []
        start = 0
        ok = True
        for c in (*cuts, length):
            piece = y[start:c]
            if not piece:
                ok = False
                break
            pieces.append(piece)
            start = c - 1
        if ok:
            out.append(tuple(pieces))
    return out


def compose_seq(x: Seq, i: int, y: Seq, p: int, q: int) -> frozenset[Seq]:
    """Generator-level composition x o_i y with x of arity p, y of arity q."""
    n = x.count(i)
    out: set[Seq] = set()
    for dec in interval_decompositions(y, n):
        shifted = [tuple(v + i - 1 for v in piece) for piece in dec]
        res: list[int] = []
        occ = 0
        for v in x:
            if v == i:
                res.extend(shifted[occ])
                occ += 1
            elif v > i:
                res.append(v + q - 1)
            else:
                res.append(v)
        cand = tuple(res)
        if is_valid(cand, p + q - 1):
            out ^= {cand}
    return frozenset(out)


def compose(x: Chain, i: int, y: Chain) -> Chain:
    """Bilinear planar composition; arity p+q-1, dimension adds."""
    if not 1 <= i <= x.arity:
        raise ValueError(f"slot {i} out of range for arity {x.arity}")
    acc: set[Seq] = set()
    for s in x.terms:
        for t in y.terms:
            acc ^= compose_seq(s, i, t, x.arity, y.arity)
    return Chain(x.arity + y.arity - 1, x.dimension + y.dimension, frozenset(acc))


def act(sigma: Seq, c: Chain) -> Chain:
    """Relabel values by the one-line permutation sigma."""
    if len(sigma) != c.arity or sorted(sigma) != list(range(1, c.arity + 1)):
        raise ValueError("permutation does not match chain arity")
    terms = frozenset(tuple(sigma[v - 1] for v in t) for t in c.terms)
    return Chain(c.arity, c.dimension, terms)


def _cell(s: Seq, arity: int) -> Chain:
    return Chain(arity, len(s) - arity, frozenset({s}))


def check_operad_axioms(max_arity: int) -> list[CheckReport]:
    """Exhaustive planar-operad axiom suite over small cells.

    Associativity triples range over cells of dimension <= 2 whose
    composite arity p+q+r-2 stays <= max_arity; the chain-map and unit
    checks range over pairs/cells within the same arity budget.
    """
    if max_arity < 2:
        raise ValueError("max_arity must be at least 2")
    by_arity: dict[int, list[Seq]] = {}
    for k in range(1, max_arity + 1):
        by_arity[k] = [s for j in range(min(k, 3)) for s in enumerate_basis(k, j)]

    t0 = time.monotonic()
    n_unit = 0
    unit_ok = True
    unit_cex = None
    iota = unit()
    for k, cells in by_arity.items():
        for s in cells:
            c = _cell(s, k)
            if compose(iota, 1, c).terms != c.terms:
                unit_ok, unit_cex = False, f"1 o1 {seq_to_str(s, k)}"
            for i in range(1, k + 1):
                n_unit += 1
                if compose(c, i, iota).terms != c.terms:
                    unit_ok, unit_cex = False, f"{seq_to_str(s, k)} o{i} 1"
    rep_unit = report(
        "axioms.unit", "the arity-1 cell is a two-sided unit for every slot",
        unit_ok, {"cases": n_unit, **({"counterexample": unit_cex} if unit_cex else {})},
        (time.monotonic() - t0) * 1000)

    t1 = time.monotonic()
    n_par = n_seq = 0
    par_ok = seq_ok = True
    par_cex = seq_cex = None
    arities = [k for k in by_arity if k >= 2]
    for p in arities:
        for q in arities:
            for r in arities:
                if p + q + r - 2 > max_arity:
                    continue
                for a in by_arity[p]:
                    ca = _cell(a, p)
                    for b in by_arity[q]:
                        cb = _cell(b, q)
                        for c in by_arity[r]:
                            cc = _cell(c, r)
                            # parallel: (a o_i b) o_(j+q-1) c = (a o_j c) o_i b, i < j
                            for i in range(1, p + 1):
                                for j in range(i + 1, p + 1):
                                    n_par += 1
                                    lhs = compose(compose(ca, i, cb), j + q - 1, cc)
                                    rhs = compose(compose(ca, j, cc), i, cb)
                                    if lhs.terms != rhs.terms:
                                        par_ok = False
                                        par_cex = par_cex or {
                                            "a": seq_to_str(a, p), "b": seq_to_str(b, q),
                                            "c": seq_to_str(c, r), "i": i, "j": j}
                            # sequential: a o_i (b o_j c) = (a o_i b) o_(i+j-1) c
                            for i in range(1, p + 1):
                                for j in range(1, q + 1):
                                    n_seq += 1
                                    lhs = compose(ca, i, compose(cb, j, cc))
                                    rhs = compose(compose(ca, i, cb), i + j - 1, cc)
                                    if lhs.terms != rhs.terms:
                                        seq_ok = False
                                        seq_cex = seq_cex or {
                                            "a": seq_to_str(a, p), "b": seq_to_str(b, q),
                                            "c": seq_to_str(c, r), "i": i, "j": j}
    t2 = time.monotonic()
    rep_par = report(
        "axioms.parallel", "parallel associativity (a o_i b) o_(j+q-1) c = (a o_j c) o_i b",
        par_ok, {"cases": n_par, **({"counterexample": par_cex} if par_cex else {})},
        (t2 - t1) * 1000)
    rep_seq = report(
        "axioms.sequential", "sequential associativity a o_i (b o_j c) = (a o_i b) o_(i+j-1) c",
        seq_ok, {"cases": n_seq, **({"counterexample": seq_cex} if seq_cex else {})},
        (t2 - t1) * 1000)

    t3 = time.monotonic()
    n_dd = 0
    dd_ok = True
    dd_cex = None
    for k in range(1, max_arity + 1):
        for j in range(k):
            for s in enumerate_basis(k, j):
                n_dd += 1
                if not differential(differential(_cell(s, k))).is_zero:
                    dd_ok, dd_cex = False, seq_to_str(s, k)
    rep_dd = report(
        "axioms.delta_squared", "the boundary of a boundary vanishes on every cell",
        dd_ok, {"cells": n_dd, "max_arity": max_arity,
                **({"counterexample": dd_cex} if dd_cex else {})},
        (time.monotonic() - t3) * 1000)

    t4 = time.monotonic()
    n_lz = 0
    lz_ok = True
    lz_cex = None
    for p, cells_p in by_arity.items():
        for q, cells_q in by_arity.items():
            if p + q - 1 > max_arity:
                continue
            for a in cells_p:
                ca = _cell(a, p)
                da = differential(ca)
                for b in cells_q:
                    cb = _cell(b, q)
                    db = differential(cb)
                    for i in range(1, p + 1):
                        n_lz += 1
                        lhs = differential(compose(ca, i, cb))
                        rhs = compose(da, i, cb) + compose(ca, i, db)
                        if (lhs + rhs).terms:
                            lz_ok = False
                            lz_cex = lz_cex or {"a": seq_to_str(a, p),
                                                "b": seq_to_str(b, q), "i": i}
    rep_lz = report(
        "axioms.leibniz",
        "composition is a chain map: delta(x o_i y) = delta(x) o_i y + x o_i delta(y)",
        lz_ok, {"cases": n_lz, **({"counterexample": lz_cex} if lz_cex else {})},
        (time.monotonic() - t4) * 1000)

    return [rep_par, rep_seq, rep_unit, rep_dd, rep_lz]
