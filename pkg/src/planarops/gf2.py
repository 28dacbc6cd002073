"""Dense linear algebra over the two-element field.

Vectors and matrix rows are bit-packed into Python ints; logical index j
of a length-n vector lives at bit (n-1-j), so the highest set bit of the
word is the leftmost nonzero coordinate. Elimination always pivots on
that bit, which makes every routine deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class BitVector:
    """Length-tagged vector over F2; addition is exclusive-or."""

    n: int
    word: int = 0

    def __post_init__(self) -> None:
        if self.n < 0 or self.word < 0 or self.word >> self.n:
            raise ValueError("word has bits outside the stated length")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        word = 0
        n = 0
        for b in bits:
            word = (word << 1) | (1 if b else 0)
            n += 1
        return cls(n, word)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "BitVector":
        word = 0
        for j in indices:
            if not 0 <= j < n:
                raise ValueError(f"index {j} out of range for length {n}")
            word |= 1 << (n - 1 - j)
        return cls(n, word)

    @classmethod
    def from01(cls, text: str) -> "BitVector":
        return cls(len(text), int(text, 2) if text else 0)

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(j)
        return (self.word >> (self.n - 1 - j)) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVector(self.n, self.word ^ other.word)

    def __bool__(self) -> bool:
        return self.word != 0

    def support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if self[j])

    @property
    def weight(self) -> int:
        return bin(self.word).count("1")

    def to01(self) -> str:
        return format(self.word, f"0{self.n}b") if self.n else ""


@dataclass(frozen=True)
class BitMatrix:
    """Row-major dense matrix over F2; row words follow the BitVector layout."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError("row has bits outside ncols")

    @classmethod
    def from_rows(cls, rows: Iterable[BitVector], ncols: int | None = None) -> "BitMatrix":
        vs = list(rows)
        if ncols is None:
            if not vs:
                raise ValueError("ncols required for an empty matrix")
            ncols = vs[0].n
        if any(v.n != ncols for v in vs):
            raise ValueError("ragged rows")
        return cls(len(vs), ncols, tuple(v.word for v in vs))

    @classmethod
    def from_columns(cls, cols: Iterable[BitVector], nrows: int | None = None) -> "BitMatrix":
        vs = list(cols)
        if nrows is None:
            if not vs:
                raise ValueError("nrows required for an empty matrix")
            nrows = vs[0].n
        if any(v.n != nrows for v in vs):
            raise ValueError("ragged columns")
        ncols = len(vs)
        rows = [0] * nrows
        for j, v in enumerate(vs):
            w = v.word
            while w:
                low = w & -w
                i = nrows - 1 - (low.bit_length() - 1)
                rows[i] |= 1 << (ncols - 1 - j)
                w ^= low
        return cls(nrows, ncols, tuple(rows))

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def column(self, j: int) -> BitVector:
        mask = 1 << (self.ncols - 1 - j)
        word = 0
        for r in self.rows:
            word = (word << 1) | (1 if r & mask else 0)
        return BitVector(self.nrows, word)

    def mul(self, x: BitVector) -> BitVector:
        """Matrix times column vector."""
        if x.n != self.ncols:
            raise ValueError("dimension mismatch")
        word = 0
        for r in self.rows:
            word = (word << 1) | (bin(r & x.word).count("1") & 1)
        return BitVector(self.nrows, word)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_columns([self.row(i) for i in range(self.nrows)], self.ncols) \
            if self.nrows else BitMatrix(self.ncols, 0, tuple([0] * self.ncols))


class Eliminator:
    """Incremental Gaussian elimination keyed on the highest set bit.

    Words may carry extra low-order tag bits below `shift`; tags are
    xored along with the payload but never chosen as pivots, which is
    what kernel extraction and solving need.
    """

    def __init__(self, shift: int = 0):
        self.shift = shift
        self.pivots: dict[int, int] = {}

    def reduce(self, word: int) -> int:
        piv = self.pivots
        while word >> self.shift:
            p = word.bit_length() - 1
            row = piv.get(p)
            if row is None:
                break
            word ^= row
        return word

    def add(self, word: int) -> int:
        """Insert after reduction; returns the residual (0 if dependent)."""
        word = self.reduce(word)
        if word >> self.shift:
            self.pivots[word.bit_length() - 1] = word
        return word

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(m: BitMatrix) -> int:
    elim = Eliminator()
    for r in m.rows:
        elim.add(r)
    return elim.rank


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of {x : Mx = 0}, deterministic in column order."""
    nc = m.ncols
    elim = Eliminator(shift=nc)
    out = []
    for j in range(nc):
        tagged = (m.column(j).word << nc) | (1 << (nc - 1 - j))
        residual = elim.add(tagged)
        if residual >> nc == 0:
            out.append(BitVector(nc, residual))
    return out


def solve(m: BitMatrix, v: BitVector) -> BitVector | None:
    """Some x with Mx = v, or None when v is outside the column span."""
    if v.n != m.nrows:
        raise ValueError("dimension mismatch")
    nc = m.ncols
    elim = Eliminator(shift=nc)
    for j in range(nc):
        elim.add((m.column(j).word << nc) | (1 << (nc - 1 - j)))
    residual = elim.reduce(v.word << nc)
    if residual >> nc:
        return None
    return BitVector(nc, residual)


def in_span(vectors: list[BitVector], v: BitVector) -> bool:
    lengths = {u.n for u in vectors} | {v.n}
    if len(lengths) > 1:
        raise ValueError("dimension mismatch")
    elim = Eliminator()
    for u in vectors:
        elim.add(u.word)
    return elim.reduce(v.word) == 0
