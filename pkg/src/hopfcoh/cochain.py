"""Coboundary matrices, cohomology, and the contracting homotopies.

Four cochain complexes are built as explicit matrices:

  natural     C^n = X (x) S^n
  dual        C^n = Hom(X, S^n)
  bar         the transpose-dual of the Hochschild-style boundary on
              B^n (x) X for the dual algebra B = S^*
  restricted  the dual complex of a right comodule with gamma = 1 (x) id

Hom(X, W) is flattened with the W index most significant (so the X index
varies fastest), which is exactly the flattening that makes the dual
complex and the transpose of the bar boundary agree entrywise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .comodule import (
    Bicomodule,
    dual_bicomodule,
    module_from_coaction,
    module_from_left_coaction,
)
from .hopf import dual_algebra_mult
from .linalg import (
    LinearSolver,
    Matrix,
    SpanTracker,
    Vec,
    kernel_basis,
    kron,
    kron_all,
    image_rank,
    rotation_sigma,
    tensor_permutation,
)
from .scalars import ONE, Scalar


def _ipow(d: int, n: int) -> int:
    return d**n


# ---------------------------------------------------------------------------
# coboundary matrices


def natural_coboundary(b: Bicomodule, n: int, degree_cap: int = 3) -> Matrix:
    """Coboundary X (x) S^n -> X (x) S^{n+1} of the natural complex."""
    if n < 0:
        raise ValueError("negative degree")
    if n + 1 > degree_cap:
        raise ValueError(f"degree {n}+1 exceeds cap {degree_cap}")
    h, x, s = b.hopf, b.space_dim, b.hopf.dim
    beta, gamma = b.beta.beta, b.gamma.gamma
    if n == 0:
        return beta - rotation_sigma(1, 1, x, s) @ gamma
    i_sn = Matrix.identity(_ipow(s, n))
    total = kron(beta, i_sn)
    for k in range(1, n + 1):
        left = Matrix.identity(x * _ipow(s, k - 1))
        right = Matrix.identity(_ipow(s, n - k))
        term = kron_all(left, h.comult, right)
        total = total + term.scale((-1) ** k)
    last = rotation_sigma(n + 1, 1, x, s) @ kron(gamma, i_sn)
    return total + last.scale((-1) ** (n + 1))


def dual_coboundary(b: Bicomodule, n: int, degree_cap: int = 3) -> Matrix:
    """Coboundary Hom(X, S^n) -> Hom(X, S^{n+1}) of the dual complex.

    Built entry-by-entry: with T a basis map e_y -> (S^n basis v), the three
    families of terms land at

      (T (x) id) o beta :            row ((v,a), j) <- beta[(y,a), j]
      (id^{n-k} (x) d (x) id^{k-1}) o T : kron(insertion, id_X)
      (id (x) T) o gamma :           row ((a,v), j) <- gamma[(a,y), j]
    """
    if n < 0:
        raise ValueError("negative degree")
    if n + 1 > degree_cap:
        raise ValueError(f"degree {n}+1 exceeds cap {degree_cap}")
    h, x, s = b.hopf, b.space_dim, b.hopf.dim
    sn, sn1 = _ipow(s, n), _ipow(s, n + 1)
    rows, cols = sn1 * x, sn * x
    entries: dict = {}

    def bump(r, c, val):
        key = (r, c)
        cur = entries.get(key)
        entries[key] = val if cur is None else cur + val

    # (T (x) id) o beta, sign +1: the beta leg is the last output leg
    for (r, j), val in b.beta.beta.entries.items():
        y, a = divmod(r, s)
        for v in range(sn):
            bump((v * s + a) * x + j, v * x + y, val)
    # (id (x) T) o gamma, sign (-1)^{n+1}: the gamma leg is the first output leg
    sign_g = ONE if (n + 1) % 2 == 0 else -ONE
    for (r, j), val in b.gamma.gamma.entries.items():
        a, y = divmod(r, x)
        sv = sign_g * val
        for v in range(sn):
            bump((a * sn + v) * x + j, v * x + y, sv)
    mat = Matrix(rows, cols, entries)
    # coproduct insertions
    for k in range(1, n + 1):
        ins = kron_all(
            Matrix.identity(_ipow(s, n - k)),
            h.comult,
            Matrix.identity(_ipow(s, k - 1)),
        )
        mat = mat + kron(ins, Matrix.identity(x)).scale((-1) ** k)
    return mat


def bar_boundary(b: Bicomodule, n: int, degree_cap: int = 4) -> Matrix:
    """Hochschild-style boundary B^n (x) X -> B^{n-1} (x) X for B = S^*.

    X is a B-bimodule through the coactions: w.x pairs the beta leg, x.w
    pairs the gamma leg.  The degree-n cochain space of the associated
    operator-style complex is (B^n (x) X)^*, with coboundary the transpose
    of this boundary at degree n+1.
    """
    if n < 1:
        raise ValueError("bar boundary needs n >= 1")
    if n > degree_cap:
        raise ValueError(f"degree {n} exceeds cap {degree_cap}")
    h, x, s = b.hopf, b.space_dim, b.hopf.dim
    mult_b = dual_algebra_mult(h)
    act_l = module_from_coaction(b.beta)  # B (x) X -> X
    act_r = module_from_left_coaction(b.gamma)  # X (x) B -> X
    total = kron(Matrix.identity(_ipow(s, n - 1)), act_l)
    for i in range(1, n):
        term = kron_all(
            Matrix.identity(_ipow(s, i - 1)),
            mult_b,
            Matrix.identity(_ipow(s, n - i - 1) * x),
        )
        total = total + term.scale((-1) ** (n - i))
    rotate = tensor_permutation([s] * n + [x], list(range(1, n + 1)) + [0])
    last = kron(Matrix.identity(_ipow(s, n - 1)), act_r) @ rotate
    return total + last.scale((-1) ** n)


def bar_dual_coboundary(b: Bicomodule, n: int, degree_cap: int = 3) -> Matrix:
    """(B^n (x) X)^* -> (B^{n+1} (x) X)^*: the transpose of bar_boundary(n+1)."""
    if n + 1 > degree_cap:
        raise ValueError(f"degree {n}+1 exceeds cap {degree_cap}")
    return bar_boundary(b, n + 1, degree_cap=degree_cap + 1).transpose()


# ---------------------------------------------------------------------------
# complexes


_BUILDERS = {
    "natural": natural_coboundary,
    "dual": dual_coboundary,
    "bar": bar_dual_coboundary,
    "restricted": dual_coboundary,
}


@dataclass(frozen=True)
class CochainComplex:
    kind: str
    degrees: tuple  # dims of C^0 .. C^cap
    boundaries: tuple  # D_n: C^n -> C^{n+1}, n = 0 .. cap-1

    def __post_init__(self):
        for n, d in enumerate(self.boundaries):
            if d.cols != self.degrees[n] or d.rows != self.degrees[n + 1]:
                raise ValueError(f"boundary {n} has wrong shape")
        for n in range(len(self.boundaries) - 1):
            if not (self.boundaries[n + 1] @ self.boundaries[n]).is_zero():
                raise ValueError(f"chain property fails at degree {n}")

    def boundary(self, n: int) -> Matrix:
        return self.boundaries[n]


def build_complex(b: Bicomodule, kind: str, degree_cap: int = 3) -> CochainComplex:
    """Assemble coboundaries D_0..D_{cap-1}; the chain property is re-verified."""
    if kind not in _BUILDERS:
        raise ValueError(f"unknown complex kind {kind!r}")
    if kind == "restricted" and not _gamma_is_trivial(b):
        raise ValueError("restricted complex needs gamma = 1 (x) id")
    builder = _BUILDERS[kind]
    x, s = b.space_dim, b.hopf.dim
    if kind == "natural":
        degrees = tuple(x * _ipow(s, n) for n in range(degree_cap + 1))
    else:
        degrees = tuple(_ipow(s, n) * x for n in range(degree_cap + 1))
    bounds = tuple(builder(b, n, degree_cap=degree_cap) for n in range(degree_cap))
    return CochainComplex(kind, degrees, bounds)


def _gamma_is_trivial(b: Bicomodule) -> bool:
    h = b.hopf
    return b.gamma.gamma == kron(h.unit_col, Matrix.identity(b.space_dim))


# ---------------------------------------------------------------------------
# cohomology


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    dim_kernel: int
    dim_image_prev: int
    representatives: tuple  # certified cocycles not in the previous image
    coboundary_preimages: tuple  # (kernel basis vec, preimage vec) pairs

    @property
    def dim(self) -> int:
        return self.dim_kernel - self.dim_image_prev


def cohomology(cx: CochainComplex, n: int) -> CohomologyResult:
    """Exact H^n with canonical representatives and coboundary certificates.

    Representatives are the RREF kernel basis vectors that certifiably
    enlarge the span of Im D_{n-1} (an incremental augmented-rank check);
    every remaining kernel vector is certified a coboundary mod the chosen
    representatives by an explicit preimage.
    """
    if n < 0 or n >= len(cx.boundaries):
        raise ValueError("degree out of built range")
    dn = cx.boundaries[n]
    kernel = kernel_basis(dn)
    if n == 0:
        prev_cols = []
        rank_prev = 0
    else:
        prev = cx.boundaries[n - 1]
        prev_cols = [prev.col(j) for j in range(prev.cols)]
        rank_prev = image_rank(prev)
    span = SpanTracker(cx.degrees[n])
    for c in prev_cols:
        span.add(c)
    assert span.rank == rank_prev
    reps = []
    pending = []
    for v in kernel:
        if span.add(v):
            reps.append(v)
        else:
            pending.append(v)
    dim_h = len(kernel) - rank_prev
    assert len(reps) == dim_h, "rank bookkeeping failed"
    preimages = []
    if pending:
        prev = cx.boundaries[n - 1]
        entries = dict(prev.entries)
        for k, r in enumerate(reps):
            for i, val in enumerate(r):
                if val:
                    entries[(i, prev.cols + k)] = val
        solver = LinearSolver(Matrix(prev.rows, prev.cols + len(reps), entries))
        for v in pending:
            res = solver.solve(v)
            assert res.consistent, "kernel vector neither representative nor decomposable"
            preimages.append((v, res.solution[: prev.cols]))
    return CohomologyResult(n, len(kernel), rank_prev, tuple(reps), tuple(preimages))


def cohomology_dims(b: Bicomodule, kind: str, degrees, degree_cap: int = 3):
    cx = build_complex(b, kind, degree_cap)
    return {n: cohomology(cx, n).dim for n in degrees}


# ---------------------------------------------------------------------------
# the two identifications


@dataclass(frozen=True)
class IdentificationReport:
    holds: bool
    degree: int
    detail: str
    dims: Optional[tuple] = None  # (lhs H-dim, rhs H-dim) when computed

    def __bool__(self):
        return self.holds


def _hom_reshuffle(x: int, sn: int) -> Matrix:
    """X^* (x) S^n -> Hom(X, S^n) flattening: (m, w) -> (w, m)."""
    return tensor_permutation([x, sn], [1, 0])


def identify_dual_with_natural(b: Bicomodule, n: int, degree_cap: int = 3) -> IdentificationReport:
    """Dual complex of X vs natural complex of the dual bicomodule on X^*.

    Checks the chain-level sign identity  R d_n^{natural-dual} = (-1)^{n+1}
    d_n^{dual} R  entrywise (R the flattening reshuffle), then that the two
    H^n dimensions agree.
    """
    x, s = b.space_dim, b.hopf.dim
    dual_b = dual_bicomodule(b)
    nat = natural_coboundary(dual_b, n, degree_cap)
    dua = dual_coboundary(b, n, degree_cap)
    r_n = _hom_reshuffle(x, _ipow(s, n))
    r_n1 = _hom_reshuffle(x, _ipow(s, n + 1))
    lhs = r_n1 @ nat
    rhs = (dua @ r_n).scale((-1) ** (n + 1))
    if lhs != rhs:
        return IdentificationReport(False, n, "sign identity fails entrywise")
    cx_nat = build_complex(dual_b, "natural", degree_cap)
    cx_dual = build_complex(b, "dual", degree_cap)
    d_nat = cohomology(cx_nat, n).dim
    d_dual = cohomology(cx_dual, n).dim
    if d_nat != d_dual:
        return IdentificationReport(False, n, "H dimensions differ", (d_dual, d_nat))
    return IdentificationReport(True, n, "sign identity and H-dims agree", (d_dual, d_nat))


def identify_dual_with_bar(b: Bicomodule, n: int, degree_cap: int = 3) -> IdentificationReport:
    """Dual coboundary vs transpose of the bar boundary: must be bit-identical."""
    dua = dual_coboundary(b, n, degree_cap)
    bar = bar_dual_coboundary(b, n, degree_cap)
    if dua != bar:
        return IdentificationReport(False, n, "matrices differ")
    return IdentificationReport(True, n, "matrices bit-identical")


# ---------------------------------------------------------------------------
# contracting homotopies


@dataclass(frozen=True)
class HomotopyCertificate:
    primitive: Vec
    sign: int  # D_{n-1}(primitive) = sign * cocycle, certified exactly

    def __bool__(self):
        return True


def _certify_primitive(d_prev: Matrix, primitive: Vec, cocycle: Vec) -> int:
    image = d_prev.apply(primitive)
    if image == tuple(cocycle):
        return 1
    if image == tuple(-v for v in cocycle):
        return -1
    raise AssertionError("homotopy primitive failed exact certification")


def _require_cocycle(d_n: Matrix, v: Vec):
    if any(d_n.apply(v)):
        raise ValueError("input is not a cocycle")


def _hom_compose_left(post: Matrix, t_vec: Vec, sn: int, x: int) -> Vec:
    """vec(post o T) for T: X -> S^n given as a (sn*x)-vector."""
    t_mat = Matrix(sn, x, {divmod(i, x): v for i, v in enumerate(t_vec) if v})
    comp = post @ t_mat
    out = [Scalar(0)] * (post.rows * x)
    for (w, j), v in comp.entries.items():
        out[w * x + j] = v
    return tuple(out)


def _vec_to_hom(t_vec: Vec, sn: int, x: int) -> Matrix:
    return Matrix(sn, x, {divmod(i, x): v for i, v in enumerate(t_vec) if v})


def _hom_to_vec(m: Matrix) -> Vec:
    out = [Scalar(0)] * (m.rows * m.cols)
    for (w, j), v in m.entries.items():
        out[w * m.cols + j] = v
    return tuple(out)


def _pair_of_boundaries(b: Bicomodule, kind: str, n: int, degree_cap: int, cx: Optional[CochainComplex]):
    """(D_n, D_{n-1}) from a prebuilt complex when given, else built fresh."""
    if cx is not None:
        if cx.kind not in (kind, "restricted" if kind == "dual" else kind):
            raise ValueError("complex kind mismatch")
        return cx.boundary(n), cx.boundary(n - 1)
    builder = _BUILDERS[kind]
    return builder(b, n, degree_cap=degree_cap), builder(b, n - 1, degree_cap=degree_cap)


def homotopy_from_counit_natural(
    b: Bicomodule, n: int, m_vec: Vec, degree_cap: int = 3, cx: Optional[CochainComplex] = None
) -> HomotopyCertificate:
    """Primitive of a natural n-cocycle from the counit: apply (id (x) eps) to the last leg."""
    h, x, s = b.hopf, b.space_dim, b.hopf.dim
    if h.counit is None:
        raise ValueError("needs a counit")
    if n < 1:
        raise ValueError("needs degree >= 1")
    d_n, d_prev = _pair_of_boundaries(b, "natural", n, degree_cap, cx)
    _require_cocycle(d_n, m_vec)
    contract = kron(Matrix.identity(x * _ipow(s, n - 1)), h.counit_row)
    prim = contract.apply(m_vec)
    if (n - 1) % 2:
        prim = tuple(-v for v in prim)
    sign = _certify_primitive(d_prev, prim, m_vec)
    return HomotopyCertificate(prim, sign)


def homotopy_from_counit_dual(
    b: Bicomodule, n: int, t_vec: Vec, degree_cap: int = 3, cx: Optional[CochainComplex] = None
) -> HomotopyCertificate:
    """Primitive of a dual n-cocycle from the counit: post-compose eps (x) id^{n-1}."""
    h, x, s = b.hopf, b.space_dim, b.hopf.dim
    if h.counit is None:
        raise ValueError("needs a counit")
    if n < 1:
        raise ValueError("needs degree >= 1")
    d_n, d_prev = _pair_of_boundaries(b, "dual", n, degree_cap, cx)
    _require_cocycle(d_n, t_vec)
    contract = kron(h.counit_row, Matrix.identity(_ipow(s, n - 1)))
    prim = _hom_to_vec(contract @ _vec_to_hom(t_vec, _ipow(s, n), x))
    if (n - 1) % 2:
        prim = tuple(-v for v in prim)
    sign = _certify_primitive(d_prev, prim, t_vec)
    return HomotopyCertificate(prim, sign)


def homotopy_from_haar(
    b: Bicomodule, n: int, t_vec: Vec, phi: Vec, degree_cap: int = 3, cx: Optional[CochainComplex] = None
) -> HomotopyCertificate:
    """Primitive of a dual n-cocycle from a left-invariant state (gamma trivial)."""
    if not _gamma_is_trivial(b):
        raise ValueError("the invariant-state homotopy needs gamma = 1 (x) id")
    if n < 1:
        raise ValueError("needs degree >= 1")
    x, s = b.space_dim, b.hopf.dim
    d_n, d_prev = _pair_of_boundaries(b, "dual", n, degree_cap, cx)
    _require_cocycle(d_n, t_vec)
    contract = kron(Matrix.row(phi), Matrix.identity(_ipow(s, n - 1)))
    prim = _hom_to_vec(contract @ _vec_to_hom(t_vec, _ipow(s, n), x))
    if n % 2:
        prim = tuple(-v for v in prim)
    sign = _certify_primitive(d_prev, prim, t_vec)
    return HomotopyCertificate(prim, sign)


def homotopy_from_codiagonal(
    b: Bicomodule,
    n: int,
    t_vec: Vec,
    f_functional: Vec,
    side: str = "beta",
    degree_cap: int = 3,
    cx: Optional[CochainComplex] = None,
) -> HomotopyCertificate:
    """Primitive of a dual n-cocycle from a codiagonal.

    side="beta":  R = (id^{n-1} (x) F) o (T (x) id) o beta  (beta non-degenerate)
    side="gamma": R = (F (x) id^{n-1}) o (id (x) T) o gamma (gamma non-degenerate)
    """
    if n < 1:
        raise ValueError("needs degree >= 1")
    h, x, s = b.hopf, b.space_dim, b.hopf.dim
    sn = _ipow(s, n)
    d_n, d_prev = _pair_of_boundaries(b, "dual", n, degree_cap, cx)
    _require_cocycle(d_n, t_vec)
    t_mat = _vec_to_hom(t_vec, sn, x)
    f_row = Matrix.row(f_functional)  # functional on S (x) S
    if side == "beta":
        lifted = kron(t_mat, Matrix.identity(s)) @ b.beta.beta  # X -> S^n (x) S
        contract = kron(Matrix.identity(_ipow(s, n - 1)), f_row)  # S^{n-1} (x) S (x) S -> S^{n-1}
        prim_mat = contract @ lifted
    elif side == "gamma":
        lifted = kron(Matrix.identity(s), t_mat) @ b.gamma.gamma  # X -> S (x) S^n
        contract = kron(f_row, Matrix.identity(_ipow(s, n - 1)))
        prim_mat = contract @ lifted
    else:
        raise ValueError("side must be 'beta' or 'gamma'")
    prim = _hom_to_vec(prim_mat)
    sign = _certify_primitive(d_prev, prim, t_vec)
    return HomotopyCertificate(prim, sign)
