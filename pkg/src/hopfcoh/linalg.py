"""Exact tensor-indexed linear algebra over Gaussian rationals.

Matrices are immutable and sparse (zero entries are never stored), but
every operation has dense semantics.  The single global tensor-index
convention lives here:

    flat index of e_{i1} (x) ... (x) e_{ik}  =  mixed-radix number with i1
    most significant (row-major).

Everything that builds tensor-leg maps (kron, rotation_sigma, the cochain
module) cites this convention; nothing else in the package is allowed to
invent its own index order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .scalars import ONE, Scalar, as_scalar

Vec = tuple  # tuple[Scalar, ...]


# ---------------------------------------------------------------------------
# vectors


def vec(entries) -> Vec:
    return tuple(as_scalar(x) for x in entries)


def zero_vec(n: int) -> Vec:
    return (Scalar(0),) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else Scalar(0) for j in range(n))


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a: Vec) -> Vec:
    c = as_scalar(c)
    return tuple(c * x for x in a)


def vec_dot(a: Vec, b: Vec) -> Scalar:
    """Plain bilinear pairing (no conjugation)."""
    total = Scalar(0)
    for x, y in zip(a, b, strict=True):
        if x and y:
            total = total + x * y
    return total


def vec_is_zero(a: Vec) -> bool:
    return not any(a)


# ---------------------------------------------------------------------------
# tensor index bookkeeping


@dataclass(frozen=True)
class TensorSpace:
    """An ordered tensor product of coordinate spaces."""

    factors: tuple

    def __init__(self, factors: Iterable[int]):
        object.__setattr__(self, "factors", tuple(int(d) for d in factors))
        if any(d < 0 for d in self.factors):
            raise ValueError("negative factor dimension")

    @property
    def total_dim(self) -> int:
        n = 1
        for d in self.factors:
            n *= d
        return n

    def flat(self, indices) -> int:
        indices = tuple(indices)
        if len(indices) != len(self.factors):
            raise ValueError("index arity mismatch")
        i = 0
        for k, d in zip(indices, self.factors):
            if not 0 <= k < d:
                raise ValueError("tensor index out of range")
            i = i * d + k
        return i

    def unflat(self, i: int):
        if not 0 <= i < self.total_dim:
            raise ValueError("flat index out of range")
        out = []
        for d in reversed(self.factors):
            out.append(i % d)
            i //= d
        return tuple(reversed(out))


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable sparse matrix of Scalars; composition checks inner dims."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict):
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        clean = {}
        for (r, c), v in entries.items():
            if not 0 <= r < rows or not 0 <= c < cols:
                raise ValueError(f"entry ({r},{c}) outside {rows}x{cols}")
            v = as_scalar(v)
            if v:
                clean[(r, c)] = v
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors --

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, {})

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, {(i, i): ONE for i in range(n)})

    @staticmethod
    def from_rows(rows_data) -> "Matrix":
        rows_data = [list(r) for r in rows_data]
        nr = len(rows_data)
        nc = len(rows_data[0]) if rows_data else 0
        entries = {}
        for i, row in enumerate(rows_data):
            if len(row) != nc:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                v = as_scalar(v)
                if v:
                    entries[(i, j)] = v
        return Matrix(nr, nc, entries)

    @staticmethod
    def from_cols(cols_data, rows: Optional[int] = None) -> "Matrix":
        cols_data = [tuple(c) for c in cols_data]
        nc = len(cols_data)
        nr = rows if rows is not None else (len(cols_data[0]) if cols_data else 0)
        entries = {}
        for j, col in enumerate(cols_data):
            for i, v in enumerate(col):
                v = as_scalar(v)
                if v:
                    entries[(i, j)] = v
        return Matrix(nr, nc, entries)

    @staticmethod
    def column(v: Vec) -> "Matrix":
        return Matrix(len(v), 1, {(i, 0): x for i, x in enumerate(v) if x})

    @staticmethod
    def row(v: Vec) -> "Matrix":
        return Matrix(1, len(v), {(0, j): x for j, x in enumerate(v) if x})

    # -- access --

    def __getitem__(self, rc) -> Scalar:
        return self.entries.get(rc, Scalar(0))

    def col(self, j: int) -> Vec:
        out = [Scalar(0)] * self.rows
        for (r, c), v in self.entries.items():
            if c == j:
                out[r] = v
        return tuple(out)

    def dense(self):
        return [[self[(i, j)] for j in range(self.cols)] for i in range(self.rows)]

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz})"

    # -- arithmetic --

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        entries = dict(self.entries)
        for k, v in other.entries.items():
            s = entries.get(k)
            entries[k] = v if s is None else s + v
        return Matrix(self.rows, self.cols, entries)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        if not c:
            return Matrix.zero(self.rows, self.cols)
        return Matrix(self.rows, self.cols, {k: c * v for k, v in self.entries.items()})

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"composition undefined: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        right_rows: dict = {}
        for (k, j), v in other.entries.items():
            right_rows.setdefault(k, []).append((j, v))
        acc: dict = {}
        for (i, k), a in self.entries.items():
            hits = right_rows.get(k)
            if not hits:
                continue
            for j, b in hits:
                key = (i, j)
                s = acc.get(key)
                p = a * b
                acc[key] = p if s is None else s + p
        return Matrix(self.rows, other.cols, acc)

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        out = [Scalar(0)] * self.rows
        for (i, j), a in self.entries.items():
            x = v[j]
            if x:
                out[i] = out[i] + a * x
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def conj(self) -> "Matrix":
        return Matrix(self.rows, self.cols, {k: v.conjugate() for k, v in self.entries.items()})

    def conj_transpose(self) -> "Matrix":
        return Matrix(
            self.cols, self.rows, {(c, r): v.conjugate() for (r, c), v in self.entries.items()}
        )

    def is_hermitian(self) -> bool:
        return self.rows == self.cols and self == self.conj_transpose()

    def augment(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in augment")
        entries = dict(self.entries)
        for (r, c), v in other.entries.items():
            entries[(r, c + self.cols)] = v
        return Matrix(self.rows, self.cols + other.cols, entries)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Tensor product of operators: (a (x) b)(x (x) y) = a(x) (x) b(y).

    Row/column flat indices follow the global row-major convention, so
    kron(a, b)[(ia,ib),(ja,jb)] = a[ia,ja] * b[ib,jb].
    """
    entries = {}
    br, bc = b.rows, b.cols
    for (ia, ja), va in a.entries.items():
        for (ib, jb), vb in b.entries.items():
            entries[(ia * br + ib, ja * bc + jb)] = va * vb
    return Matrix(a.rows * b.rows, a.cols * b.cols, entries)


def kron_all(*mats: Matrix) -> Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def tensor_permutation(src_dims, tgt_slot_to_src_slot) -> Matrix:
    """Permutation matrix reordering tensor legs.

    Sends a pure tensor with legs (v_0,...,v_{m-1}) (dims src_dims) to the
    pure tensor whose slot t carries leg tgt_slot_to_src_slot[t].
    """
    src = TensorSpace(src_dims)
    perm = tuple(tgt_slot_to_src_slot)
    if sorted(perm) != list(range(len(src.factors))):
        raise ValueError("not a permutation of tensor slots")
    tgt = TensorSpace([src.factors[s] for s in perm])
    entries = {}
    for i in range(src.total_dim):
        idx = src.unflat(i)
        entries[(tgt.flat(tuple(idx[s] for s in perm)), i)] = ONE
    return Matrix(tgt.total_dim, src.total_dim, entries)


def rotation_sigma(n: int, k: int, x_dim: int, s_dim: int) -> Matrix:
    """The leg rotation from S^k (x) X (x) S^{n-k} onto X (x) S^n.

    The k leading S legs are the final k of the n output legs: the source
    pure tensor s_{n-k+1} (x) ... (x) s_n (x) x (x) s_1 (x) ... (x) s_{n-k}
    maps to x (x) s_1 (x) ... (x) s_n.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    src_dims = [s_dim] * k + [x_dim] + [s_dim] * (n - k)
    # target slot 0 is X (source slot k); output S slot j is s_j
    tgt_to_src = [k]
    for j in range(1, n + 1):
        if j <= n - k:
            tgt_to_src.append(k + j)  # trailing source legs s_1..s_{n-k}
        else:
            tgt_to_src.append(j - (n - k) - 1)  # leading source legs s_{n-k+1}..s_n
    return tensor_permutation(src_dims, tgt_to_src)


# ---------------------------------------------------------------------------
# elimination


def _rows_of(m: Matrix):
    rows: dict = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
    return [rows[r] for r in sorted(rows)]


def _rref_rows(row_dicts, track=None):
    """Full RREF of a list of sparse rows.  Mutates nothing passed in.

    Returns (pivots, rows) with monic pivots, zero above and below each
    pivot, rows sorted by pivot column.  If `track` is a parallel list of
    sparse rows, the same row operations are applied to it (used for
    inconsistency certificates).
    """
    work = [dict(r) for r in row_dicts]
    tr = [dict(t) for t in track] if track is not None else None
    pivots = []
    pivot_rows = []  # indices into work, aligned with pivots
    remaining = list(range(len(work)))
    cols_present: dict = {}
    for ri in remaining:
        for c in work[ri]:
            cols_present.setdefault(c, set()).add(ri)

    def eliminate(target_ri, pivot_ri, col):
        factor = work[target_ri].get(col)
        if not factor:
            return
        prow = work[pivot_ri]
        trow = work[target_ri]
        for c, v in prow.items():
            nv = trow.get(c, Scalar(0)) - factor * v
            if nv:
                trow[c] = nv
                cols_present.setdefault(c, set()).add(target_ri)
            elif c in trow:
                del trow[c]
                s = cols_present.get(c)
                if s is not None:
                    s.discard(target_ri)
        if tr is not None:
            pt, tt = tr[pivot_ri], tr[target_ri]
            for c, v in pt.items():
                nv = tt.get(c, Scalar(0)) - factor * v
                if nv:
                    tt[c] = nv
                elif c in tt:
                    del tt[c]

    used = set()
    for col in sorted(cols_present):
        cand = [ri for ri in cols_present.get(col, ()) if ri not in used and work[ri].get(col)]
        if not cand:
            continue
        ri = min(cand, key=lambda r: (len(work[r]), r))
        inv = ONE / work[ri][col]
        if inv != ONE:
            work[ri] = {c: inv * v for c, v in work[ri].items()}
            if tr is not None:
                tr[ri] = {c: inv * v for c, v in tr[ri].items()}
            for c in work[ri]:
                cols_present.setdefault(c, set()).add(ri)
        holders = [r for r in cols_present.get(col, ()) if r != ri and work[r].get(col)]
        for other in holders:
            eliminate(other, ri, col)
        used.add(ri)
        pivots.append(col)
        pivot_rows.append(ri)

    out_rows = [work[r] for r in pivot_rows]
    if tr is None:
        return pivots, out_rows, None
    zero_tracks = [tr[r] for r in range(len(work)) if r not in used]
    return pivots, out_rows, (zero_tracks, [tr[r] for r in pivot_rows])


def rref(m: Matrix):
    """Reduced row echelon form; returns (pivot_cols, rows as sparse dicts)."""
    pivots, rows, _ = _rref_rows(_rows_of(m))
    return pivots, rows


def image_rank(m: Matrix) -> int:
    """Exact rank.  Eliminates along the smaller dimension."""
    work = m.transpose() if m.rows < m.cols else m
    pivots, _, _ = _rref_rows(_rows_of(work))
    return len(pivots)


def kernel_basis(m: Matrix):
    """Canonical kernel basis: the RREF basis of the null space.

    Idempotent under re-reduction: stacking the output as rows of a matrix
    and re-running rref reproduces it unchanged.
    """
    pivots, rows = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    raw = []
    for f in free:
        v = {f: ONE}
        for p, row in zip(pivots, rows):
            coeff = row.get(f)
            if coeff:
                v[p] = -coeff
        raw.append(v)
    null_pivots, null_rows, _ = _rref_rows(raw)
    basis = []
    for row in null_rows:
        v = [Scalar(0)] * m.cols
        for c, val in row.items():
            v[c] = val
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class SolveResult:
    solution: Optional[Vec]
    certificate: Optional[Vec]  # y with y^T m = 0, y^T rhs != 0 when no solution

    @property
    def consistent(self) -> bool:
        return self.solution is not None


class LinearSolver:
    """One elimination, many right-hand sides.

    Precomputes the RREF of m with the row-operation transform, so each
    solve costs a few sparse dot products.
    """

    def __init__(self, m: Matrix):
        self.m = m
        rows: dict = {}
        for (r, c), v in m.entries.items():
            rows.setdefault(r, {})[c] = v
        row_list = [rows.get(r, {}) for r in range(m.rows)]
        track = [{r: ONE} for r in range(m.rows)]
        pivots, _red, tracked = _rref_rows(row_list, track=track)
        self.pivots = pivots
        self.zero_tracks, self.pivot_tracks = tracked

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, rhs: Vec) -> SolveResult:
        if len(rhs) != self.m.rows:
            raise ValueError("rhs length mismatch")

        def combo(track_row):
            total = Scalar(0)
            for r, coef in track_row.items():
                if rhs[r]:
                    total = total + coef * rhs[r]
            return total

        for t in self.zero_tracks:
            if combo(t):
                y = [Scalar(0)] * self.m.rows
                for r, coef in t.items():
                    y[r] = coef
                return SolveResult(None, tuple(y))
        x = [Scalar(0)] * self.m.cols
        for p, t in zip(self.pivots, self.pivot_tracks):
            x[p] = combo(t)
        return SolveResult(tuple(x), None)


def solve(m: Matrix, rhs: Vec) -> SolveResult:
    """One particular solution of m x = rhs, or a left-kernel certificate."""
    return LinearSolver(m).solve(rhs)


# ---------------------------------------------------------------------------
# incremental span (augmented-rank certification)


class SpanTracker:
    """Row-space tracker: membership tests and rank-increase certification."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: dict = {}  # pivot col -> monic reduced row dict

    def reduce(self, v: Vec):
        w = {i: x for i, x in enumerate(v) if x}
        for p in sorted(self.rows):
            coeff = w.get(p)
            if not coeff:
                continue
            for c, val in self.rows[p].items():
                nv = w.get(c, Scalar(0)) - coeff * val
                if nv:
                    w[c] = nv
                elif c in w:
                    del w[c]
        return w

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def add(self, v: Vec) -> bool:
        """Insert v; True if it enlarged the span (certified rank increase)."""
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        inv = ONE / w[p]
        w = {c: inv * val for c, val in w.items()}
        # keep reduced form: eliminate the new pivot from stored rows
        for q, row in self.rows.items():
            coeff = row.get(p)
            if coeff:
                for c, val in w.items():
                    nv = row.get(c, Scalar(0)) - coeff * val
                    if nv:
                        row[c] = nv
                    elif c in row:
                        del row[c]
        self.rows[p] = w
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


# ---------------------------------------------------------------------------
# exact positive-semidefiniteness


@dataclass(frozen=True)
class PsdResult:
    ok: bool
    pivots: Optional[tuple] = None  # pivot (index, value) sequence when PSD
    witness: Optional[Vec] = None  # v with v* m v < 0 otherwise

    def __bool__(self):
        return self.ok


def psd_check(m: Matrix) -> PsdResult:
    """Exact LDL*-with-diagonal-pivoting PSD test for Hermitian m.

    Zero diagonal pivots are legal only when their whole active row/column
    vanishes; a negative diagonal or a nonzero off-diagonal entry against a
    zero diagonal yields an explicit witness v with v* m v < 0.
    """
    if not m.is_hermitian():
        raise ValueError("psd_check requires a Hermitian matrix")
    n = m.rows
    a = {k: v for k, v in m.entries.items()}

    def get(i, j):
        return a.get((i, j), Scalar(0))

    active = list(range(n))
    steps = []  # (pivot index, {j: a[p,j]/d}) for witness lifting
    pivots = []

    def lift(w: dict) -> Vec:
        for p, ratios in reversed(steps):
            s = Scalar(0)
            for j, r in ratios.items():
                x = w.get(j)
                if x:
                    s = s + r * x
            if s:
                w[p] = -s
        v = [Scalar(0)] * n
        for i, x in w.items():
            v[i] = x
        return tuple(v)

    def certified(w: dict) -> PsdResult:
        v = lift(w)
        quad = Scalar(0)
        for (i, j), val in m.entries.items():
            if v[i] and v[j]:
                quad = quad + v[i].conjugate() * val * v[j]
        assert quad.is_real and quad < 0, "internal error: witness failed verification"
        return PsdResult(False, witness=v)

    while active:
        diag = {i: get(i, i) for i in active}
        for i in active:
            d = diag[i]
            if d and not d.is_real:
                raise ValueError("Hermitian matrix with non-real diagonal")
        neg = [i for i in active if diag[i] and diag[i] < 0]
        if neg:
            return certified({neg[0]: ONE})
        pos = [i for i in active if diag[i]]
        if not pos:
            # all active diagonals zero: PSD iff the active block is zero
            off = [
                (i, j)
                for (i, j) in a
                if i in active and j in active and i != j and a[(i, j)]
            ]
            if not off:
                return PsdResult(True, pivots=tuple(pivots))
            i, j = min(off)
            return certified({i: -a[(i, j)], j: ONE})
        p = pos[0]
        d = diag[p]
        pivots.append((p, d))
        row = {j: get(p, j) for j in active if j != p and get(p, j)}
        ratios = {j: v / d for j, v in row.items()}
        for i in active:
            if i == p:
                continue
            api = get(i, p)
            if not api:
                continue
            for j, r in ratios.items():
                key = (i, j)
                nv = a.get(key, Scalar(0)) - api * r
                if nv:
                    a[key] = nv
                elif key in a:
                    del a[key]
        for i in active:
            a.pop((i, p), None)
            a.pop((p, i), None)
        steps.append((p, ratios))
        active.remove(p)
    return PsdResult(True, pivots=tuple(pivots))
