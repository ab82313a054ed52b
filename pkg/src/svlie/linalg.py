"""Exact rational linear algebra over finite tensor windows.

Everything runs over `fractions.Fraction`: Gaussian elimination with sparse
rows, nullspace extraction in reduced-echelon canonical form, and the two
window solvers that corroborate structural facts about the algebra:

* `invariant_tensors(n, N)`: window tensors killed by the diagonal action of
  every generator.  Constraints are exact (components of g.t that leave the
  window must vanish too), so solutions are genuinely invariant, not window
  artifacts; expected answer is the line through M_0 (x) ... (x) M_0.

* `skew_action_space(N)`: window rank-2 tensors v with g.v skew for every
  generator; expected answer is skew(window) plus the line through
  M_0 (x) M_0.

Both solvers split their constraint systems into independent blocks per
total degree (the action of a homogeneous generator shifts degree by a fixed
amount), which keeps each elimination small.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import (
    GENERATORS,
    BasisVector,
    Element,
    HalfInt,
    _as_frac,
    basis_window,
    bracket_basis,
)
from .tensors import Tensor2, Tensor3, canonical_key

_ZERO = Fraction(0)


def _rref(rows) -> dict[int, dict[int, Fraction]]:
    """Reduce sparse rows to reduced row echelon form.

    Returns pivot column -> its fully reduced row (pivot entry 1).  Rows are
    dicts column -> Fraction; the input rows are not mutated.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for original in rows:
        row = dict(original)
        # clear every entry sitting at an existing pivot column, smallest
        # first; pivot rows only reach columns to their right, so this ends
        while True:
            hit = None
            for k in row:
                if k in pivots and (hit is None or k < hit):
                    hit = k
            if hit is None:
                break
            f = row.pop(hit)
            for k, v in pivots[hit].items():
                if k == hit:
                    continue
                nv = row.get(k, _ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        if not row:
            continue
        c = min(row)
        inv = 1 / row[c]
        row = {k: v * inv for k, v in row.items()}
        for other in pivots.values():
            f = other.get(c)
            if f:
                for k, v in row.items():
                    nv = other.get(k, _ZERO) - f * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        pivots[c] = row
    return pivots


def _nullspace(pivots: dict[int, dict[int, Fraction]], ncols: int) -> list[list[Fraction]]:
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [_ZERO] * ncols
        v[free] = Fraction(1)
        for c, prow in pivots.items():
            v[c] = -prow.get(free, _ZERO)
        basis.append(v)
    return basis


def _solve(rows, ncols: int) -> list[Fraction] | None:
    """One exact solution of the augmented system (column ncols holds the
    right-hand side), with free variables at zero; None if inconsistent."""
    pivots = _rref(rows)
    if ncols in pivots:
        return None
    x = [_ZERO] * ncols
    for c, prow in pivots.items():
        x[c] = prow.get(ncols, _ZERO)
    return x


class RationalMatrix:
    """Exact matrix with sparse rows of {column: Fraction}."""

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [dict(r) for r in rows] if rows is not None else [{} for _ in range(nrows)]
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")

    @classmethod
    def from_dense(cls, grid) -> "RationalMatrix":
        rows = []
        width = len(grid[0]) if grid else 0
        for r in grid:
            if len(r) != width:
                raise ValueError("ragged matrix")
            rows.append({j: _as_frac(v) for j, v in enumerate(r) if v})
        return cls(len(grid), width, rows)

    @classmethod
    def from_columns(cls, cols: list[list[Fraction]], nrows: int) -> "RationalMatrix":
        rows: list[dict] = [{} for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, v in enumerate(col):
                if v:
                    rows[i][j] = _as_frac(v)
        return cls(nrows, len(cols), rows)

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the kernel, one vector per free column, in canonical
        reduced-echelon form (unit entry at the free column)."""
        return _nullspace(_rref(self.rows), self.ncols)

    def solve(self, rhs) -> list[Fraction] | None:
        """A solution of Ax = b with free variables at zero, or None."""
        if len(rhs) != self.nrows:
            raise ValueError("right-hand side length mismatch")
        aug = []
        for row, b in zip(self.rows, rhs):
            b = _as_frac(b)
            r = dict(row)
            if b:
                r[self.ncols] = b
            aug.append(r)
        return _solve(aug, self.ncols)

    def multiply(self, x) -> list[Fraction]:
        return [sum((v * x[j] for j, v in row.items()), _ZERO) for row in self.rows]


class TensorWindowBasis:
    """Ordered basis of rank-n elementary tensors with all factor indices
    bounded by N, lexicographic in the basis-vector order."""

    def __init__(self, rank: int, bound):
        if rank not in (1, 2, 3):
            raise ValueError("rank must be 1, 2 or 3")
        self.rank = rank
        self.bound = HalfInt.of(bound)
        vs = basis_window(self.bound)
        self.keys = list(itertools.product(vs, repeat=rank))
        self.position = {k: i for i, k in enumerate(self.keys)}

    def __len__(self) -> int:
        return len(self.keys)

    def coords(self, t) -> list[Fraction]:
        out = [_ZERO] * len(self.keys)
        for key, c in t._terms.items():
            if self.rank == 1:
                key = (key,)
            pos = self.position.get(key)
            if pos is None:
                raise ValueError(f"support of {t} leaves the window {self.bound}")
            out[pos] = c
        return out

    def from_coords(self, coords):
        items = [(key, c) for key, c in zip(self.keys, coords) if c]
        if self.rank == 1:
            return Element((k[0], c) for k, c in items)
        return (Tensor2 if self.rank == 2 else Tensor3)(items)


def _act_key(g: BasisVector, key: tuple) -> list[tuple[tuple, Fraction]]:
    """Diagonal action of a basis vector on an elementary tensor key."""
    out = []
    for pos, bv in enumerate(key):
        hit = bracket_basis(g, bv)
        if hit is not None:
            out.append((key[:pos] + (hit[1],) + key[pos + 1:], hit[0]))
    return out


def _key_degree(key: tuple) -> HalfInt:
    return HalfInt(sum(v.index.twice for v in key))


def _normalized(t):
    lead = t.terms()[0][1]
    return t * (1 / lead)


def _by_degree(keys) -> dict[HalfInt, list[tuple]]:
    blocks: dict[HalfInt, list[tuple]] = {}
    for key in keys:
        blocks.setdefault(_key_degree(key), []).append(key)
    return blocks


def invariant_tensors(rank: int, bound) -> list:
    """Basis of window tensors annihilated by every generator of the algebra.

    Since the five generators generate the whole algebra, the solutions are
    invariant under the full diagonal action.  Returned vectors are
    normalized to leading coefficient 1 and sorted canonically.
    """
    window = TensorWindowBasis(rank, bound)
    blocks = _by_degree(window.keys)
    found = []
    for deg in sorted(blocks):
        found.extend(_invariant_block(blocks[deg], rank))
    return sorted(found, key=canonical_key)


def _invariant_block(block: list[tuple], rank: int) -> list:
    rows: dict = {}
    for j, key in enumerate(block):
        for gi, g in enumerate(GENERATORS):
            for out_key, c in _act_key(g, key):
                row = rows.setdefault((gi, out_key), {})
                row[j] = row.get(j, _ZERO) + c
    pivots = _rref(rows.values())
    out = []
    for v in _nullspace(pivots, len(block)):
        items = [(key, c) for key, c in zip(block, v) if c]
        if rank == 1:
            t = Element((k[0], c) for k, c in items)
        else:
            t = (Tensor2 if rank == 2 else Tensor3)(items)
        out.append(_normalized(t))
    return out


def skew_action_space(bound) -> list[Tensor2]:
    """Basis of window rank-2 tensors v with g.v skew for every generator.

    The constraint per generator is (1 + twist)(g.v) = 0, expressed on
    unordered output pairs.  Expected to equal the skew tensors of the
    window plus the line through M_0 (x) M_0.
    """
    window = TensorWindowBasis(2, bound)
    found = []
    blocks = _by_degree(window.keys)
    for deg in sorted(blocks):
        block = blocks[deg]
        rows: dict = {}
        for j, key in enumerate(block):
            for gi, g in enumerate(GENERATORS):
                for (a, b), c in _act_key(g, key):
                    rkey = (gi, (a, b) if a.sort_key <= b.sort_key else (b, a))
                    row = rows.setdefault(rkey, {})
                    nv = row.get(j, _ZERO) + c
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
        pivots = _rref(rows.values())
        for v in _nullspace(pivots, len(block)):
            t = Tensor2((key, c) for key, c in zip(block, v) if c)
            found.append(_normalized(t))
    return sorted(found, key=canonical_key)
