"""Sylvester Hadamard matrices, Hadamard codes, butterflies, wings and
basic kernels.

Polarity convention: ONE maps the +1 matrix entry to bit 1 (so the code
contains the all-1 word), ZERO maps +1 to bit 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import SizeCapExceeded
from .signatures import DELTA1, Signature, complement, tensor

DEFAULT_MAX_K = 6  # arity cap 2^6 = 64


class Polarity(enum.Enum):
    ONE = "1"
    ZERO = "0"


@dataclass(frozen=True)
class PmMatrix:
    """Square matrix with entries in {+1, -1}."""

    order: int
    entries: tuple  # tuple of row tuples

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def is_hadamard(self) -> bool:
        n = self.order
        for i in range(n):
            for j in range(i, n):
                dot = sum(a * b for a, b in zip(self.entries[i], self.entries[j]))
                if dot != (n if i == j else 0):
                    return False
        return True

    def to_text(self) -> str:
        return "".join(
            "".join("+" if e > 0 else "-" for e in row) + "\n"
            for row in self.entries
        )


def _check_k(k: int, max_k: int, low: int = 0) -> None:
    if k < low:
        raise ValueError(f"k must be >= {low}")
    if k > max_k:
        raise SizeCapExceeded(f"k={k} exceeds cap {max_k}")


def sylvester(k: int, max_k: int = DEFAULT_MAX_K) -> PmMatrix:
    """The 2^k Sylvester Hadamard matrix, by blockwise doubling."""
    _check_k(k, max_k)
    rows = [[1]]
    for _ in range(k):
        rows = [r + r for r in rows] + [r + [-e for e in r] for r in rows]
    return PmMatrix(1 << k, tuple(tuple(r) for r in rows))


def hadamard_code(
    k: int, variant: Polarity = Polarity.ONE, max_k: int = DEFAULT_MAX_K
) -> Signature:
    """Rows of the Sylvester matrix as a binary code of length 2^k."""
    h = sylvester(k, max_k)
    hit = 1 if variant is Polarity.ONE else 0
    rows = frozenset(
        tuple(hit if e > 0 else 1 - hit for e in row) for row in h.entries
    )
    return Signature(1 << k, rows)


def balanced_code(
    k: int, variant: Polarity = Polarity.ONE, max_k: int = DEFAULT_MAX_K
) -> Signature:
    """Hadamard code with its constant word removed; all words have weight
    2^(k-1)."""
    _check_k(k, max_k, low=1)
    code = hadamard_code(k, variant, max_k)
    const = (1,) * (1 << k) if variant is Polarity.ONE else (0,) * (1 << k)
    return Signature(code.arity, code.support - {const})


def butterfly(k: int, max_k: int = DEFAULT_MAX_K - 1) -> Signature:
    """The maximal affine signature with k free variables and pairwise
    non-identical variables; arity 2^(k+1), support 2^k.

    Columns: position 1 is constant 0; position m (1 <= m <= 2^k) carries the
    linear combination whose coefficient vector is the binary counter value
    m-1 (first free variable in the low bit); position m + 2^k carries its
    complement.  The first support row (all free variables 0) is 0...01...1.
    """
    _check_k(k, max_k, low=1)
    half = 1 << k
    rows = set()
    for a in range(half):  # assignment to the k free variables
        left = tuple(_dot(m, a) for m in range(half))
        rows.add(left + tuple(1 - b for b in left))
    return Signature(2 * half, frozenset(rows))


def _dot(m: int, a: int) -> int:
    return bin(m & a).count("1") & 1


def wings(k: int, max_k: int = DEFAULT_MAX_K - 1) -> tuple:
    """(left, right) halves of the butterfly with the constant row removed;
    each has arity 2^k and support 2^k - 1."""
    _check_k(k, max_k, low=1)
    half = 1 << k
    left, right = set(), set()
    for a in range(1, half):  # skip the constant row
        row = tuple(_dot(m, a) for m in range(half))
        left.add(row)
        right.add(tuple(1 - b for b in row))
    return Signature(half, frozenset(left)), Signature(half, frozenset(right))


def basic_kernel(k: int, max_k: int = DEFAULT_MAX_K) -> Signature:
    """The basic delta1-affine kernel of order k (arity 2^k, support 2^k - 1).

    Orders 1 and 2 are the small special cases; from order 3 on this is the
    right wing of the butterfly, equivalently the balanced 1-Hadamard code.
    """
    _check_k(k, max_k, low=1)
    if k == 1:
        return Signature.from_strings(["10"])
    if k == 2:
        return tensor(DELTA1, Signature.from_strings(["001", "010", "100"]))
    return wings(k, max_k=max_k)[1]


def basic_kernel_zero(k: int, max_k: int = DEFAULT_MAX_K) -> Signature:
    """Dual basic kernel for the delta0-affine side."""
    return complement(basic_kernel(k, max_k))
