"""Exact eigenvalue multiplicities of the star-transposition Cayley graph.

The graph on the symmetric group of degree n with generators (1 n), ...,
(n-1 n) has an all-integer spectrum contained in [-(n-1), n-1]. The
multiplicity of k is the sum over partitions of n of f(shape) times the
number of standard tableaux of that shape whose top label has content k,
which reduces to products of hook-length dimensions over corner removals.
All arithmetic is exact (Python integers).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from math import comb

from .errors import SizeLimitError
from .partitions import corners, dimension, enumerate_partitions, remove_corner

#: Largest n accepted by :func:`multiplicity_table`.
MAX_TABLE_SIZE = 50


@dataclass(frozen=True)
class SpectrumTable:
    """Eigenvalue -> multiplicity map for one degree n; absent key means zero."""

    n: int
    mul: dict[int, int] = field(repr=False)

    def multiplicity(self, k: int) -> int:
        return self.mul.get(k, 0)

    def __getitem__(self, k: int) -> int:
        return self.mul.get(k, 0)

    def eigenvalues(self) -> list[int]:
        """Sorted eigenvalues with nonzero multiplicity."""
        return sorted(self.mul)

    def support(self) -> set[int]:
        return set(self.mul)

    def total(self) -> int:
        return sum(self.mul.values())

    def power_sum(self, k: int) -> int:
        """Sum of multiplicity(e) * e**k over all eigenvalues, exact."""
        if k < 0:
            raise ValueError(f"power-sum exponent must be non-negative, got {k}")
        return sum(m * e**k for e, m in self.mul.items())

    def as_dict(self, include_zeros: bool = False) -> dict[int, int]:
        """Copy of the table, ascending by eigenvalue.

        With include_zeros, every integer in [-(n-1), n-1] appears as a key.
        """
        ks = range(-(self.n - 1), self.n) if include_zeros else self.eigenvalues()
        return {k: self.mul.get(k, 0) for k in ks}


@cache
def multiplicity_table(n: int) -> SpectrumTable:
    """Exact spectrum table for degree n via the content formula."""
    if n < 1:
        raise ValueError(f"degree must be a positive integer, got {n}")
    if n > MAX_TABLE_SIZE:
        raise SizeLimitError(f"multiplicity table supports n <= {MAX_TABLE_SIZE}, got {n}")
    mul: dict[int, int] = {}
    for shape in enumerate_partitions(n):
        f = dimension(shape)
        for box in corners(shape):
            k = box.content
            mul[k] = mul.get(k, 0) + f * dimension(remove_corner(shape, box))
    return SpectrumTable(n, mul)


def support(n: int) -> set[int]:
    """Eigenvalues with nonzero multiplicity.

    This is [-(n-1), n-1] minus {0} for n in {2, 3} and the full integer
    interval for every other n (including the single vertex at n = 1).
    """
    return multiplicity_table(n).support()


def hook_bound(n: int, l: int) -> int:
    """Lower bound C(n-2, l-1) * C(n-1, l) on the multiplicity of l (and of -l).

    Obtained by counting the single hook shape whose arm-end corner has
    content l: C(n-2, l-1) of its standard fillings put the top label there,
    and the shape's dimension is C(n-1, l). Equality holds at l = n - 1.
    """
    if not 1 <= l <= n - 1:
        raise ValueError(f"l must satisfy 1 <= l <= n-1, got l={l} for n={n}")
    return comb(n - 2, l - 1) * comb(n - 1, l)


def power_sum(table: SpectrumTable, k: int) -> int:
    """Module-level alias for :meth:`SpectrumTable.power_sum`."""
    return table.power_sum(k)
