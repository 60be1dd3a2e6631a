"""Combinatorial codes for cells: compositions, index tuples, permutations.

An index tuple is the code of a cell: an ordered list of disjoint
blocks partitioning {1..n} with block sizes prescribed by a
composition.  The full-flag case (all parts equal to 1) is identified
with permutations by reading off the unique element of each block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Composition:
    """A composition mu = (mu_1, ..., mu_N) of n into positive parts."""

    parts: tuple

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p <= 0 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def num_blocks(self) -> int:
        return len(self.parts)

    @cached_property
    def partial_sums(self) -> tuple:
        """mu^{(i)} = mu_1 + ... + mu_i, strictly increasing to n."""
        out = []
        s = 0
        for p in self.parts:
            s += p
            out.append(s)
        return tuple(out)

    def is_full_flag(self) -> bool:
        return all(p == 1 for p in self.parts)


@dataclass(frozen=True)
class IndexTuple:
    """Disjoint blocks (I_1, ..., I_N) covering {1..n} with |I_j| = mu_j."""

    mu: Composition
    blocks: tuple

    def __init__(self, mu: Composition | Sequence[int], blocks: Iterable[Iterable[int]]):
        if not isinstance(mu, Composition):
            mu = Composition(mu)
        blocks = tuple(tuple(sorted(int(i) for i in b)) for b in blocks)
        if len(blocks) != mu.num_blocks:
            raise ValueError("block count does not match composition")
        seen: set = set()
        for b, size in zip(blocks, mu.parts):
            if len(b) != size:
                raise ValueError(f"block {b} has wrong size (expected {size})")
            seen.update(b)
        if seen != set(range(1, mu.n + 1)):
            raise ValueError(f"blocks {blocks} do not partition 1..{mu.n}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "blocks", blocks)

    @cached_property
    def unions(self) -> tuple:
        """Sorted unions I^{(j)} = I_1 u ... u I_j for j = 1..N."""
        out = []
        acc: list = []
        for b in self.blocks:
            acc = sorted(acc + list(b))
            out.append(tuple(acc))
        return tuple(out)

    def block_of(self, i: int) -> int:
        """1-based block index containing the element i."""
        for j, b in enumerate(self.blocks, start=1):
            if i in b:
                return j
        raise ValueError(f"{i} not covered")

    def to_permutation(self) -> "Permutation":
        if not self.mu.is_full_flag():
            raise ValueError("only full-flag tuples correspond to permutations")
        return Permutation(tuple(b[0] for b in self.blocks))

    def to_json(self) -> dict:
        return {"mu": list(self.mu.parts), "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, obj) -> "IndexTuple":
        return cls(Composition(obj["mu"]), obj["blocks"])

    def __str__(self):
        return ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation w = (w(1), ..., w(n))."""

    word: tuple

    def __init__(self, word: Sequence[int]):
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        object.__setattr__(self, "word", word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __str__(self):
        return ",".join(map(str, self.word))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, w in enumerate(self.word, start=1):
            out[w - 1] = i
        return Permutation(tuple(out))

    def swap_positions(self, i: int) -> "Permutation":
        """Right multiplication by the simple transposition s_i."""
        w = list(self.word)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def descents(self):
        """Positions i with w(i) > w(i+1)."""
        return tuple(i for i in range(1, self.n) if self.word[i - 1] > self.word[i])

    def to_index_tuple(self) -> IndexTuple:
        return IndexTuple(Composition((1,) * self.n), tuple((w,) for w in self.word))

    def length(self) -> int:
        return len(inversions(self))


def inversions(w: Permutation) -> set:
    """Position pairs (i, j) with i < j and w(i) > w(j)."""
    word = w.word
    n = len(word)
    return {(i + 1, j + 1)
            for i in range(n) for j in range(i + 1, n)
            if word[i] > word[j]}


def enumerate_index_tuples(mu: Composition) -> list:
    """All index tuples for mu, ordered lexicographically by sorted blocks."""
    if not isinstance(mu, Composition):
        mu = Composition(mu)

    def rec(remaining: tuple, parts: tuple):
        if not parts:
            yield ()
            return
        for first in itertools.combinations(remaining, parts[0]):
            rest = tuple(x for x in remaining if x not in first)
            for tail in rec(rest, parts[1:]):
                yield (first,) + tail

    tuples = [IndexTuple(mu, blocks) for blocks in rec(tuple(range(1, mu.n + 1)), mu.parts)]
    tuples.sort(key=lambda I: I.blocks)
    return tuples


def length(I: IndexTuple) -> int:
    """l(I) = #{(a, b): a > b, a in I_j, b in I_k, j < k}; the codimension."""
    count = 0
    blocks = I.blocks
    for j in range(len(blocks)):
        for k in range(j + 1, len(blocks)):
            for a in blocks[j]:
                for b in blocks[k]:
                    if a > b:
                        count += 1
    return count


def rank_table(I: IndexTuple) -> tuple:
    """Counts #{i in I^{(p)} : i > n - q} for all p, q; drives the closure order."""
    n = I.mu.n
    out = []
    for union in I.unions:
        row = tuple(sum(1 for i in union if i > n - q) for q in range(1, n + 1))
        out.append(row)
    return tuple(out)


def closure_leq(I: IndexTuple, J: IndexTuple) -> bool:
    """True when the cell of J lies in the closure of the cell of I.

    Closures only gain intersection dimension with the reference flag,
    so containment is the entrywise comparison of rank tables.
    """
    if I.mu != J.mu:
        raise ValueError("index tuples over different compositions")
    ri, rj = rank_table(I), rank_table(J)
    return all(a <= b for rowi, rowj in zip(ri, rj) for a, b in zip(rowi, rowj))


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat order via the rank-matrix (dot) criterion."""
    if u.n != v.n:
        raise ValueError("permutations of different sizes")
    return closure_leq(u.to_index_tuple(), v.to_index_tuple())
