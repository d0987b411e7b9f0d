"""GF(2) affine machinery: affine detection, basis/constraint extraction,
solution counting, and the pairwise-opposite decomposition of affine EO
signatures.

Vectors are packed into Python ints, bit i (0-based) holding variable i+1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import NotAffineError, PairingError
from .signatures import Signature, delta_factors, is_eo, wt


def _pack(bits) -> int:
    x = 0
    for i, b in enumerate(bits):
        if b:
            x |= 1 << i
    return x


def _unpack(x: int, n: int) -> tuple:
    return tuple((x >> i) & 1 for i in range(n))


def gf2_eliminate(rows: list, ncols: int) -> list:
    """Reduced row echelon form of int-packed rows; zero rows dropped.

    Pivots are chosen at the lowest column index, so the result is canonical
    for a given row space.
    """
    work = [r for r in rows if r]
    out = []
    for col in range(ncols):
        pivot = next((r for r in work if (r >> col) & 1), None)
        if pivot is None:
            continue
        work = [r ^ pivot if (r >> col) & 1 else r for r in work if r != pivot]
        out = [r ^ pivot if (r >> col) & 1 else r for r in out]
        out.append(pivot)
        work = [r for r in work if r]
    return out


def gf2_rank(rows: list, ncols: int) -> int:
    return len(gf2_eliminate(rows, ncols))


def gf2_nullspace(rows: list, ncols: int) -> list:
    """Basis of {x : r·x = 0 for every r}, int-packed."""
    ech = gf2_eliminate(rows, ncols)
    pivots = []
    for r in ech:
        pivots.append((r & -r).bit_length() - 1)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = 1 << fcol
        for r, p in zip(ech, pivots):
            if (r >> fcol) & 1:
                x |= 1 << p
        basis.append(x)
    return basis


@dataclass(frozen=True)
class AffineSystem:
    """An affine solution set over GF(2): offset plus span of a basis,
    or an explicit empty system.

    ``constraints`` holds rows of n+1 bits (last bit the constant term):
    x is a solution iff row·(x,1) = 0 for every row.
    """

    num_vars: int
    offset: tuple | None
    basis: tuple = field(default_factory=tuple)
    constraints: tuple = field(default_factory=tuple)

    @property
    def is_empty(self) -> bool:
        return self.offset is None

    def dimension(self) -> int:
        return len(self.basis)

    def solutions(self):
        """Enumerate the solution set (2^dim vectors)."""
        if self.is_empty:
            return
        n = self.num_vars
        base = _pack(self.offset)
        packed = [_pack(b) for b in self.basis]
        for picks in itertools.product((0, 1), repeat=len(packed)):
            x = base
            for take, vec in zip(picks, packed):
                if take:
                    x ^= vec
            yield _unpack(x, n)

    def to_text(self) -> str:
        from .signatures import bits_str, signature_to_text

        sig = Signature(self.num_vars, frozenset(self.solutions()))
        lines = signature_to_text(sig)
        lines += "constraints\n"
        for row in self.constraints:
            lines += bits_str(row) + "\n"
        return lines


def is_affine(f: Signature) -> bool:
    """True iff the support is an affine subspace (empty included)."""
    s = len(f.support)
    if s == 0:
        return True
    if s & (s - 1):
        return False
    rows = [_pack(r) for r in f.support]
    base = rows[0]
    diffs = [r ^ base for r in rows]
    return s == 1 << gf2_rank(diffs, f.arity)


def affine_system(f: Signature) -> AffineSystem:
    """Offset/basis/constraints view of an affine signature's support."""
    if not is_affine(f):
        raise NotAffineError("signature is not affine")
    n = f.arity
    if not f.support:
        # inconsistent system: the single row 0...0|1
        return AffineSystem(n, None, (), (_unpack(1 << n, n + 1),))
    rows = sorted(_pack(r) for r in f.support)
    base = rows[0]
    basis = gf2_eliminate([r ^ base for r in rows], n)
    null = gf2_nullspace(basis, n)
    constraints = []
    for a in null:
        const = bin(a & base).count("1") & 1
        constraints.append(_unpack(a | (const << n), n + 1))
    return AffineSystem(
        n,
        _unpack(base, n),
        tuple(_unpack(b, n) for b in basis),
        tuple(constraints),
    )


def count_solutions(systems, extra_equations=()) -> int:
    """Number of joint solutions of stacked systems over one variable set.

    Each extra equation is a row of n+1 bits, constant term last.  Exact big
    integer; 0 when inconsistent.
    """
    if not systems and not extra_equations:
        raise ValueError("nothing to count")
    nvars = {s.num_vars for s in systems} | {len(r) - 1 for r in extra_equations}
    if len(nvars) != 1:
        raise ValueError(f"dimension mismatch: {sorted(nvars)}")
    (n,) = nvars
    rows = []
    for s in systems:
        if s.is_empty:
            return 0
        rows.extend(_pack(r) for r in s.constraints)
    rows.extend(_pack(r) for r in extra_equations)
    return count_packed(rows, n)


def count_packed(rows: list, n: int) -> int:
    """Solutions of packed (n+1)-bit rows over n variables; 0 if inconsistent."""
    ech = gf2_eliminate(rows, n + 1)
    const_only = 1 << n
    if const_only in ech:
        return 0
    return 1 << (n - len(ech))


def pairwise_opposite_pairs(f: Signature) -> list:
    """Perfect matching of variables into positionwise-complementary column
    pairs; guaranteed to exist for affine EO signatures."""
    if not is_affine(f) or not is_eo(f) or not f.support:
        raise ValueError("requires a nonempty affine EO signature")
    rows = f.rows_sorted()
    groups: dict = {}
    for i in range(1, f.arity + 1):
        col = tuple(r[i - 1] for r in rows)
        groups.setdefault(col, []).append(i)
    pairs = []
    for col in sorted(groups, key=lambda c: groups[c][0]):
        comp = tuple(1 - b for b in col)
        if col > comp:
            continue
        if comp not in groups or len(groups[col]) != len(groups[comp]):
            raise PairingError(
                "complementary column matching failed; this should be "
                "impossible for affine EO signatures"
            )
        pairs.extend(zip(groups[col], groups[comp]))
    pairs.sort()
    return pairs


def constant_weight_profile(f: Signature) -> tuple:
    """(is_constant_weighted, weight); weight is None when not constant or
    the support is empty."""
    weights = {wt(r) for r in f.support}
    if len(weights) == 1:
        return True, weights.pop()
    return (not weights), None


def random_affine_signature(rng, n: int, max_dim: int | None = None) -> Signature:
    """Sample a random nonempty affine signature of arity n."""
    dim = rng.randint(0, n if max_dim is None else min(n, max_dim))
    offset = rng.getrandbits(n)
    vecs = [rng.getrandbits(n) for _ in range(dim)]
    basis = gf2_eliminate(vecs, n)
    sols = set()
    for picks in itertools.product((0, 1), repeat=len(basis)):
        x = offset
        for take, v in zip(picks, basis):
            if take:
                x ^= v
        sols.add(_unpack(x, n))
    return Signature(n, frozenset(sols))
