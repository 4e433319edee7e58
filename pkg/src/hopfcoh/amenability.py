"""Codiagonals, invariant means, and the vanishing cross-checks.

Everything here is a certificate: functionals come with their defining
residuals recomputed and asserted exactly zero, infeasible systems come
with Farkas-style witnesses, and each cross-check recomputes both sides
of the equivalence it claims.

Two finite-dimensional trivializations are documented rather than
implemented as separate searches: a bounded approximate codiagonal has a
weak* limit point, which at finite dimension is an exact codiagonal, so
only the exact search exists; and the a-priori stronger requirement that
the codiagonal identity extend to the multiplier algebra collapses because
multipliers of a finite-dimensional algebra are the algebra itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .comodule import (
    Bicomodule,
    catalog_bicomodules,
    catalog_right_comodules,
    one_sided,
    unit_quotient_bicomodule,
    with_trivial_gamma,
)
from .cochain import (
    build_complex,
    cohomology,
    dual_coboundary,
    homotopy_from_codiagonal,
)
from .hopf import (
    HopfStarAlgebra,
    counit_find,
    function_algebra,
    group_algebra,
)
from .linalg import (
    Matrix,
    PsdResult,
    Vec,
    kernel_basis,
    kron,
    psd_check,
    solve,
    vec_dot,
)
from .lp import enumerate_feasibility, solve_equality_feasibility
from .monoids import FiniteGroup, FiniteMonoid
from .scalars import ONE, Scalar


# ---------------------------------------------------------------------------
# codiagonals


@dataclass(frozen=True)
class CodiagonalCertificate:
    functional: Vec  # on S (x) S
    counit_residual: Vec  # F o delta - eps, exactly zero
    balance_residual: Matrix  # (F(x)id)(id(x)delta) - (id(x)F)(delta(x)id), zero
    positivity: Optional[PsdResult] = None
    positive_coordinates: Optional[bool] = None

    def __post_init__(self):
        assert not any(self.counit_residual), "codiagonal fails F o delta = eps"
        assert self.balance_residual.is_zero(), "codiagonal fails the balance identity"


@dataclass(frozen=True)
class CodiagonalSearch:
    certificate: Optional[CodiagonalCertificate]
    solution_space_dim: Optional[int] = None
    infeasibility: Optional[Vec] = None  # left-kernel certificate of the linear system


def _codiagonal_system(h: HopfStarAlgebra):
    """Rows of the linear system a codiagonal functional must satisfy."""
    d = h.dim
    nvars = d * d
    rows_entries: dict = {}
    rhs = []
    row = 0
    # F o delta = eps on each basis element
    for j in range(d):
        col = h.comult.col(j)
        for idx, v in enumerate(col):
            if v:
                rows_entries[(row, idx)] = v
        rhs.append(h.counit[j])
        row += 1
    # (F (x) id)(id (x) delta) = (id (x) F)(delta (x) id) on e_p (x) e_q, coord c
    for p in range(d):
        for q in range(d):
            dq = h.comult.col(q)
            dp = h.comult.col(p)
            for c in range(d):
                coeffs: dict = {}
                for idx, v in enumerate(dq):
                    if v:
                        a, bb = divmod(idx, d)
                        if bb == c:
                            key = p * d + a
                            coeffs[key] = coeffs.get(key, Scalar(0)) + v
                for idx, v in enumerate(dp):
                    if v:
                        a, bb = divmod(idx, d)
                        if a == c:
                            key = bb * d + q
                            coeffs[key] = coeffs.get(key, Scalar(0)) - v
                if coeffs:
                    for key, v in coeffs.items():
                        rows_entries[(row, key)] = v
                    rhs.append(Scalar(0))
                    row += 1
    return Matrix(row, nvars, rows_entries), tuple(rhs)


def _residuals(h: HopfStarAlgebra, f: Vec):
    d = h.dim
    f_row = Matrix.row(f)
    counit_res = tuple(
        vec_dot(f, h.comult.col(j)) - h.counit[j] for j in range(d)
    )
    i_s = Matrix.identity(d)
    lhs = kron(f_row, i_s) @ kron(i_s, h.comult)
    rhs = kron(i_s, f_row) @ kron(h.comult, i_s)
    return counit_res, lhs - rhs


def _codiagonal_positivity(h: HopfStarAlgebra, f: Vec):
    if h.kind == "function":
        return None, all(x.is_real and x >= 0 for x in f)
    if h.kind == "group" and isinstance(h.monoid, FiniteGroup):
        return psd_check(_pair_gram(h.monoid, f)), None
    return None, None


def _pair_gram(g: FiniteGroup, f: Vec) -> Matrix:
    """Gram matrix of the functional over all of G x G."""
    n = g.order
    pairs = [(r, s) for r in range(n) for s in range(n)]
    entries = {}
    for i, (r1, s1) in enumerate(pairs):
        for j, (r2, s2) in enumerate(pairs):
            v = f[g.mul(g.inv(r1), r2) * n + g.mul(g.inv(s1), s2)]
            if v:
                entries[(i, j)] = v
    return Matrix(n * n, n * n, entries)


def find_codiagonal(h: HopfStarAlgebra) -> CodiagonalSearch:
    """Solve the two defining identities exactly; absence is an answer.

    Returns the canonical particular solution of the affine solution set
    (positivity reported, never required) or an inconsistency certificate.
    """
    if h.counit is None:
        raise ValueError("a codiagonal needs a counit")
    system, rhs = _codiagonal_system(h)
    res = solve(system, rhs)
    if not res.consistent:
        return CodiagonalSearch(None, infeasibility=res.certificate)
    f = res.solution
    counit_res, balance = _residuals(h, f)
    gram, coords = _codiagonal_positivity(h, f)
    cert = CodiagonalCertificate(f, counit_res, balance, gram, coords)
    return CodiagonalSearch(cert, solution_space_dim=len(kernel_basis(system)))


@dataclass(frozen=True)
class KroneckerCodiagonal:
    certificate: CodiagonalCertificate
    gram: PsdResult
    block_structure_ok: bool  # Gram entry is 1 exactly within diagonal-difference classes


def kronecker_codiagonal(g: FiniteGroup) -> KroneckerCodiagonal:
    """The diagonal functional F0(u_r (x) u_s) = [r == s] on a group algebra."""
    h = group_algebra(g)
    n = g.order
    f = tuple(ONE if r == s else Scalar(0) for r in range(n) for s in range(n))
    counit_res, balance = _residuals(h, f)
    gram_m = _pair_gram(g, f)
    gram = psd_check(gram_m)
    # the Gram matrix must be the block-of-ones pattern of the classes
    # (r, s) ~ (u, v) iff s r^{-1} = v u^{-1}
    pairs = [(r, s) for r in range(n) for s in range(n)]
    ok = True
    for i, (r1, s1) in enumerate(pairs):
        for j, (r2, s2) in enumerate(pairs):
            same = g.mul(s1, g.inv(r1)) == g.mul(s2, g.inv(r2))
            if gram_m[(i, j)] != (ONE if same else Scalar(0)):
                ok = False
    cert = CodiagonalCertificate(f, counit_res, balance, gram, None)
    return KroneckerCodiagonal(cert, gram, ok)


# ---------------------------------------------------------------------------
# invariant means


@dataclass(frozen=True)
class MeanCertificate:
    weights: tuple  # nonnegative Fractions over the monoid elements
    normalization: Fraction
    invariance_residuals: tuple  # all exactly zero

    def __post_init__(self):
        assert self.normalization == 1
        assert all(w >= 0 for w in self.weights)
        assert not any(self.invariance_residuals)


@dataclass(frozen=True)
class MeanSearch:
    certificate: Optional[MeanCertificate]
    farkas: Optional[tuple] = None  # verified infeasibility certificate

    @property
    def feasible(self) -> bool:
        return self.certificate is not None


def _mean_system(m: FiniteMonoid):
    """Equality system of a left invariant mean: sum_{x: x r = t} w_x = w_t."""
    n = m.order
    rows = []
    rhs = []
    for r in range(n):
        for t in range(n):
            row = [Fraction(0)] * n
            for x in range(n):
                if m.mul(x, r) == t:
                    row[x] += 1
            row[t] -= 1
            if any(row):
                rows.append(row)
                rhs.append(Fraction(0))
    rows.append([Fraction(1)] * n)
    rhs.append(Fraction(1))
    return rows, rhs


def find_invariant_mean(m: FiniteMonoid) -> MeanSearch:
    """Exact LP feasibility for the invariance equalities on the positive cone.

    The simplex answer is cross-checked against a basic-solution
    enumeration oracle; disagreement is a hard failure.
    """
    rows, rhs = _mean_system(m)
    res = solve_equality_feasibility(rows, rhs)
    oracle = enumerate_feasibility(rows, rhs)
    assert oracle == res.feasible, "simplex and enumeration oracle disagree"
    if not res.feasible:
        return MeanSearch(None, farkas=res.farkas)
    w = res.point
    residuals = []
    for row, b in zip(rows[:-1], rhs[:-1]):
        residuals.append(sum(c * x for c, x in zip(row, w)) - b)
    cert = MeanCertificate(w, sum(w, Fraction(0)), tuple(residuals))
    return MeanSearch(cert)


# ---------------------------------------------------------------------------
# cross-checks


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    details: tuple  # lines of evidence

    def __bool__(self):
        return self.passed


def check_codiagonal_vanishing(h: HopfStarAlgebra, degree_cap: int = 3) -> CheckOutcome:
    """Codiagonal existence against dual-cohomology vanishing.

    With a codiagonal: H^n_d = 0 (n = 1..cap-1) on every catalog bicomodule
    with a non-degenerate side, re-derived two ways (ranks, and the
    codiagonal homotopy applied to every kernel-basis cocycle).  Without a
    counit: H^1 of the one-sided regular comodule must be nonzero.
    """
    from .comodule import regular_right_coaction

    details = []
    eps = counit_find(h)
    if eps.functional is None:
        reg = one_sided(regular_right_coaction(h))
        cx = build_complex(reg, "dual", degree_cap)
        h1 = cohomology(cx, 1).dim
        details.append(f"counit absent (certificate held); H^1_d one-sided regular = {h1}")
        return CheckOutcome("codiagonal-vanishing", h1 != 0, tuple(details))
    search = find_codiagonal(h)
    if search.certificate is None:
        details.append("counit present but no codiagonal: nothing to cross-check")
        return CheckOutcome("codiagonal-vanishing", True, tuple(details))
    f = search.certificate.functional
    ok = True
    for entry in catalog_bicomodules(h):
        if not entry.has_nondegenerate_side:
            continue
        side = "beta" if any(entry.beta_nondegenerate) else "gamma"
        cx = build_complex(entry.bicomodule, "dual", degree_cap)
        for n in range(1, degree_cap):
            result = cohomology(cx, n)
            if result.dim != 0:
                ok = False
                details.append(f"{entry.name}: H^{n}_d = {result.dim} != 0")
                continue
            cocycles = [v for v, _ in result.coboundary_preimages]
            for t_vec in cocycles:
                cert = homotopy_from_codiagonal(
                    entry.bicomodule, n, t_vec, f, side=side, degree_cap=degree_cap, cx=cx
                )
                assert cert.sign in (1, -1)
            details.append(f"{entry.name}: H^{n}_d = 0, homotopy certified ({len(cocycles)} cocycles)")
    return CheckOutcome("codiagonal-vanishing", ok, tuple(details))


def canonical_mean_cocycle(h: HopfStarAlgebra):
    """The unit-quotient bicomodule and the induced cocycle of id - eps(.)1.

    Returns (bicomodule, T-bar as a vec of Hom(X, S)); d_1(T-bar) = 0 is
    certified here.
    """
    if h.counit is None:
        raise ValueError("needs a counital algebra")
    quot = unit_quotient_bicomodule(h)
    bic = with_trivial_gamma(quot.coaction)
    d = h.dim
    t_full = Matrix.identity(d) - h.unit_col @ h.counit_row
    t_bar = t_full @ quot.section  # S-valued on X = S / C*1
    x = quot.coaction.space_dim
    t_vec = [Scalar(0)] * (d * x)
    for (w, j), v in t_bar.entries.items():
        t_vec[w * x + j] = v
    t_vec = tuple(t_vec)
    d1 = dual_coboundary(bic, 1)
    assert not any(d1.apply(t_vec)), "canonical cocycle is not closed"
    return bic, t_vec


def check_mean_vs_cohomology(m: FiniteMonoid, degree_cap: int = 3) -> CheckOutcome:
    """Mean feasibility == coboundary status of the canonical cocycle ==
    vanishing of restricted H^1 across the catalog right comodules."""
    if not m.has_identity:
        raise ValueError("the mean cross-check needs a monoid with identity")
    h = function_algebra(m)
    details = []
    mean = find_invariant_mean(m)
    details.append(f"invariant mean feasible: {mean.feasible}")
    if h.dim == 1:
        details.append("one-dimensional algebra: quotient is zero, nothing to compare")
        return CheckOutcome("mean-vs-cohomology", mean.feasible, tuple(details))
    bic, t_vec = canonical_mean_cocycle(h)
    d0 = dual_coboundary(bic, 0)
    res = solve(d0, t_vec)
    res_neg = solve(d0, tuple(-v for v in t_vec))
    is_coboundary = res.consistent or res_neg.consistent
    details.append(f"canonical cocycle is a coboundary: {is_coboundary}")
    ok = mean.feasible == is_coboundary
    if mean.feasible:
        phi = tuple(Scalar(w) for w in mean.certificate.weights)
        f_prim = _mean_primitive(bic, phi, t_vec)
        image = d0.apply(f_prim)
        sign_ok = image == t_vec or image == tuple(-v for v in t_vec)
        details.append(f"explicit primitive from the mean certified: {sign_ok}")
        ok = ok and sign_ok
    else:
        aug_ok = not is_coboundary
        details.append(f"certified non-exact (augmented rank grows): {aug_ok}")
        ok = ok and aug_ok
    h1_all_zero = True
    for name, coaction in catalog_right_comodules(h):
        r_bic = with_trivial_gamma(coaction)
        cx = build_complex(r_bic, "restricted", degree_cap)
        h1 = cohomology(cx, 1).dim
        details.append(f"restricted H^1 on {name}: {h1}")
        if h1 != 0:
            h1_all_zero = False
    ok = ok and (h1_all_zero == mean.feasible)
    details.append(f"restricted H^1 vanishing everywhere: {h1_all_zero}")
    return CheckOutcome("mean-vs-cohomology", ok, tuple(details))


def _mean_primitive(bic: Bicomodule, phi: Vec, t_vec: Vec) -> Vec:
    """f = Phi o T for the mean functional Phi; a primitive of the cocycle."""
    x, s = bic.space_dim, bic.hopf.dim
    out = [Scalar(0)] * x
    for i, v in enumerate(t_vec):
        if v:
            w, j = divmod(i, x)
            out[j] = out[j] + phi[w] * v
    return tuple(out)


def check_graded_cocycles(g: FiniteGroup, degree_cap: int = 3) -> CheckOutcome:
    """Pointwise structure of 1-cocycles on the pair-graded bicomodule.

    Every kernel-basis cocycle alpha must satisfy, on the (s, t) component,
    alpha(x) = phi_t(alpha(x)) (u_t - u_s) and the mirrored identity, and
    the reconstructed functional f(x_{(s,t)}) = phi_s(alpha(x_{(s,t)}))
    must satisfy d_0(f) = alpha exactly.
    """
    from .comodule import pair_graded_bicomodule

    h = group_algebra(g)
    bic = pair_graded_bicomodule(h)
    n_elems = g.order
    x = bic.space_dim
    d1 = dual_coboundary(bic, 1, degree_cap)
    d0 = dual_coboundary(bic, 0, degree_cap)
    details = []
    ok = True
    cocycles = kernel_basis(d1)
    details.append(f"1-cocycle space dimension: {len(cocycles)}")
    for idx, alpha in enumerate(cocycles):
        # alpha as Hom(X, S): column j holds alpha(x_j) in S
        for s_i in range(n_elems):
            for t_i in range(n_elems):
                j = s_i * n_elems + t_i
                value = [alpha[w * x + j] for w in range(n_elems)]
                coeff_t = value[t_i]
                expected = [Scalar(0)] * n_elems
                expected[t_i] = expected[t_i] + coeff_t
                expected[s_i] = expected[s_i] - coeff_t
                if value != expected:
                    ok = False
                    details.append(f"cocycle {idx}: two-term identity fails at ({s_i},{t_i})")
                coeff_s = value[s_i]
                mirrored = [Scalar(0)] * n_elems
                mirrored[s_i] = mirrored[s_i] + coeff_s
                mirrored[t_i] = mirrored[t_i] - coeff_s
                if value != mirrored:
                    ok = False
                    details.append(f"cocycle {idx}: mirrored identity fails at ({s_i},{t_i})")
                if s_i == t_i and any(value):
                    ok = False
                    details.append(f"cocycle {idx}: diagonal component nonzero at {s_i}")
        f = [Scalar(0)] * x
        for s_i in range(n_elems):
            for t_i in range(n_elems):
                j = s_i * n_elems + t_i
                f[j] = alpha[s_i * x + j]  # phi_{s} of alpha on the (s,t) component
        image = d0.apply(tuple(f))
        if image != tuple(alpha):
            ok = False
            details.append(f"cocycle {idx}: reconstructed functional fails d_0(f) = alpha")
    if ok:
        details.append("all cocycles reconstructed exactly")
    return CheckOutcome("graded-cocycles", ok, tuple(details))
