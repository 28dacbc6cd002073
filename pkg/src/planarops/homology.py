"""GF(2) homology of the cacti chain complexes.

Each (arity, dimension) slice gets a memoized HomologyBasis holding a
cycle basis, a boundary basis, and canonical coset representatives; the
representatives are found by eliminating boundaries first and then
admitting cycles in the deterministic kernel order, so class coordinates
are reproducible across runs.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

from . import gf2
from .gf2 import BitMatrix, BitVector
from .surjection import Chain, Seq, differential, differential_seq, enumerate_basis


@dataclass(frozen=True)
class ComplexSlice:
    arity: int
    dimension: int
    basis: tuple[Seq, ...]
    boundary_matrix: BitMatrix  # columns = this basis, rows = basis one lower


@functools.lru_cache(maxsize=None)
def complex_slice(arity: int, dimension: int) -> ComplexSlice:
    basis = tuple(enumerate_basis(arity, dimension))
    below = enumerate_basis(arity, dimension - 1) if dimension >= 1 else []
    below_index = {s: i for i, s in enumerate(below)}
    nrows = len(below)
    cols = []
    for s in basis:
        idxs = [below_index[t] for t in differential_seq(s, arity)] if dimension >= 1 else []
        cols.append(BitVector.from_indices(nrows, idxs))
    if cols:
        matrix = BitMatrix.from_columns(cols, nrows)
    else:
        matrix = BitMatrix(nrows, 0, tuple([0] * nrows))
    return ComplexSlice(arity, dimension, basis, matrix)


@dataclass(frozen=True)
class HomologyBasis:
    arity: int
    dimension: int
    basis: tuple[Seq, ...]
    cycle_basis: tuple[BitVector, ...]
    boundary_basis: tuple[BitVector, ...]
    coset_reps: tuple[BitVector, ...]
    betti: int
    # reduced rows with low-order tags tracking coset-rep coordinates
    _elim: gf2.Eliminator = field(repr=False, compare=False)

    def vector_of(self, c: Chain) -> BitVector:
        index = {s: i for i, s in enumerate(self.basis)}
        return BitVector.from_indices(len(self.basis), (index[t] for t in c.terms))

    def chain_of(self, v: BitVector) -> Chain:
        terms = frozenset(self.basis[j] for j in v.support())
        return Chain(self.arity, self.dimension, terms)

    def class_vector(self, c: Chain) -> BitVector:
        """Coordinates of [c] over coset_reps; raises if c is not a cycle."""
        if (c.arity, c.dimension) != (self.arity, self.dimension) and not c.is_zero:
            raise ValueError("chain does not live in this slice")
        word = self.vector_of(c).word if not c.is_zero else 0
        residual = self._elim.reduce(word << self.betti)
        if residual >> self.betti:
            raise ValueError("not a cycle")
        return BitVector(self.betti, residual)

    def representative(self, coords: BitVector) -> Chain:
        """Canonical cycle with the given class coordinates."""
        if coords.n != self.betti:
            raise ValueError("coordinate length mismatch")
        word = 0
        for j in coords.support():
            word ^= self.coset_reps[j].word
        return self.chain_of(BitVector(len(self.basis), word))


@functools.lru_cache(maxsize=None)
def homology(arity: int, dimension: int) -> HomologyBasis:
    if arity < 1:
        raise ValueError("arity must be positive")
    sl = complex_slice(arity, dimension)
    n = len(sl.basis)
    cycles = tuple(gf2.kernel_basis(sl.boundary_matrix)) if dimension >= 1 \
        else tuple(BitVector.from_indices(n, [j]) for j in range(n))
    above = complex_slice(arity, dimension + 1)
    elim = gf2.Eliminator()
    boundaries = []
    for j in range(above.boundary_matrix.ncols):
        col = above.boundary_matrix.column(j)
        if elim.add(col.word):
            boundaries.append(col)
    # admit cycles modulo boundaries; tags carry the rep coordinates
    reps = [v for v in cycles if elim.add(v.word)]
    betti = len(reps)
    tagged = gf2.Eliminator(shift=betti)
    for b in boundaries:
        tagged.add(b.word << betti)
    for idx, v in enumerate(reps):
        tagged.add((v.word << betti) | (1 << (betti - 1 - idx)))
    return HomologyBasis(arity, dimension, sl.basis, cycles, tuple(boundaries),
                         tuple(reps), betti, tagged)


def class_of(c: Chain) -> BitVector:
    """Coordinates of the homology class of a cycle; error on non-cycles."""
    return homology(c.arity, c.dimension).class_vector(c)


def homologous(c1: Chain, c2: Chain) -> bool:
    """True iff the two cycles differ by a boundary."""
    if (c1.arity, c1.dimension) != (c2.arity, c2.dimension):
        raise ValueError("slices differ")
    return class_of(c1) == class_of(c2)


def poincare_polynomial(arity: int) -> list[int]:
    """Betti numbers [b_0, ..., b_(arity-1)]."""
    if arity not in (2, 3, 4, 5):
        raise ValueError("arity must be between 2 and 5")
    return [homology(arity, j).betti for j in range(arity)]
