"""Derived operator families on the tensor-field module and their identities.

Three operator families are materialized through the module action:

* product    P(u,r,b1,b2) = t^(-r) b1 . D(u,r) b2           (weight preserving)
* reduced    R(u,r,b1,b2) = P(u,r,b1,b2) - D(u,0) b1 b2
* evaluated  Q(u,r,b1,b2) = psi(b1) D(u,r) b2 - D(u,0) b1 b2

Every bracket identity among them, the scalar action of the zero modes,
the collapse of B coefficients through psi, the shift-difference
subspace and the rank-one identities are checked as exact zero
residuals by applying operator combinations to slice basis vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .coeff import BElem
from .glnrep import burnside_dim
from .linalg import Mat, SpanBasis, mat_sub, zeros
from .loop import Degree, LoopElem, diff_derivation, poly_derivation
from .scalars import GaussRat, ZERO
from .tensmod import ModVector, TensorModule, act

Op = Callable[[ModVector], ModVector]


@dataclass(frozen=True)
class OpSpec:
    family: str  # "product", "reduced" or "evaluated"
    u: Tuple[GaussRat, ...]
    r: Degree
    b1: BElem
    b2: BElem

    def __post_init__(self):
        if self.family not in ("product", "reduced", "evaluated"):
            raise ValueError(f"unknown operator family {self.family!r}")


def _pair(u: Sequence[GaussRat], s: Sequence[int]) -> GaussRat:
    out = ZERO
    for a, b in zip(u, s):
        if b:
            out = out + a * b
    return out


def _neg_deg(r: Degree) -> Degree:
    return tuple(-a for a in r)


def _add_deg(r: Degree, s: Degree) -> Degree:
    return tuple(a + b for a, b in zip(r, s))


def as_operator(spec: OpSpec, module: TensorModule) -> Op:
    n = module.n
    pres = module.pres
    d_elem = LoopElem.d_vec(n, pres, spec.u, spec.r, spec.b2)
    zero_deg = (0,) * n
    zero_mode = LoopElem.d_vec(n, pres, spec.u, zero_deg, spec.b1 * spec.b2)
    if spec.family == "product":
        shift_back = LoopElem.t_part(n, pres, _neg_deg(spec.r), spec.b1)
        return lambda v: act(shift_back, act(d_elem, v))
    if spec.family == "reduced":
        shift_back = LoopElem.t_part(n, pres, _neg_deg(spec.r), spec.b1)
        return lambda v: (act(shift_back, act(d_elem, v))
                          - act(zero_mode, v))
    p1 = spec.b1.psi()
    return lambda v: act(d_elem, v).scale(p1) - act(zero_mode, v)


def op_matrix_of(spec: OpSpec, module: TensorModule,
                 slices: Sequence[Degree]) -> Mat:
    """Matrix of the operator on the span of the given slices; raises if
    the image leaves them (the product family is weight preserving, so a
    single slice suffices there)."""
    op = as_operator(spec, module)
    slices = [tuple(m) for m in slices]
    index = {m: k for k, m in enumerate(slices)}
    d = module.d
    out = zeros(len(slices) * d, len(slices) * d)
    for cs, m in enumerate(slices):
        for k in range(d):
            w = op(module.basis_vector(m, k))
            col = cs * d + k
            for mm, vec in w.data.items():
                if mm not in index:
                    raise ValueError(f"operator leaves the slice set at {mm}")
                base = index[mm] * d
                for row in range(d):
                    out[base + row][col] = vec[row]
    return out


def _residual_matrix(op: Op, module: TensorModule,
                     base: Degree = None) -> Mat:
    """Apply an operator combination to every basis vector of one slice
    and collect the (should-be-zero) results as a matrix block."""
    base = base if base is not None else (0,) * module.n
    d = module.d
    cols = []
    for k in range(d):
        w = op(module.basis_vector(base, k))
        cols.append(w)
    rows_support = sorted({m for w in cols for m in w.data})
    out = zeros(max(1, len(rows_support)) * d, d)
    for k, w in enumerate(cols):
        for mm, vec in w.data.items():
            basei = rows_support.index(mm) * d
            for row in range(d):
                out[basei + row][k] = vec[row]
    return out


def _commutator_op(a: Op, b: Op) -> Op:
    return lambda v: a(b(v)) - b(a(v))


def _combine(*terms: Tuple[GaussRat, Op]) -> Op:
    def run(v: ModVector) -> ModVector:
        out = None
        for c, op in terms:
            w = op(v).scale(GaussRat._coerce(c))
            out = w if out is None else out + w
        return out
    return run


def product_bracket_residual(s1: OpSpec, s2: OpSpec,
                             module: TensorModule) -> Mat:
    """[P(u,r,b1,b2), P(v,s,b3,b4)] minus
    P(w,r+s,b1b3,b2b4) - (u,s) P(v,s,b1b2b3,b4) + (v,r) P(u,r,b1b3b4,b2)
    with w = (u,s)v - (v,r)u."""
    u, r, b1, b2 = s1.u, s1.r, s1.b1, s1.b2
    v, s, b3, b4 = s2.u, s2.r, s2.b1, s2.b2
    us = _pair(u, s)
    vr = _pair(v, r)
    w = tuple(us * y - vr * x for x, y in zip(u, v))
    lhs = _commutator_op(as_operator(s1, module), as_operator(s2, module))
    rhs = _combine(
        (GaussRat(1), as_operator(OpSpec("product", w, _add_deg(r, s),
                                         b1 * b3, b2 * b4), module)),
        (-us, as_operator(OpSpec("product", v, s, b1 * b2 * b3, b4), module)),
        (vr, as_operator(OpSpec("product", u, r, b1 * b3 * b4, b2), module)),
    )
    return _residual_matrix(lambda x: lhs(x) - rhs(x), module)


def _shifted_bracket_residual(family: str, s1: OpSpec, s2: OpSpec,
                              module: TensorModule) -> Mat:
    """Common form of the reduced/evaluated family brackets:
    [X(u,r,b1,b2), X(v,s,b3,b4)] = X(w,r+s,b1b3,b2b4)
    - (u,s) X(v,s,b3,b1b2b4) + (v,r) X(u,r,b1,b2b3b4)."""
    u, r, b1, b2 = s1.u, s1.r, s1.b1, s1.b2
    v, s, b3, b4 = s2.u, s2.r, s2.b1, s2.b2
    us = _pair(u, s)
    vr = _pair(v, r)
    w = tuple(us * y - vr * x for x, y in zip(u, v))
    lhs = _commutator_op(
        as_operator(OpSpec(family, u, r, b1, b2), module),
        as_operator(OpSpec(family, v, s, b3, b4), module))
    rhs = _combine(
        (GaussRat(1), as_operator(OpSpec(family, w, _add_deg(r, s),
                                         b1 * b3, b2 * b4), module)),
        (-us, as_operator(OpSpec(family, v, s, b3, b1 * b2 * b4), module)),
        (vr, as_operator(OpSpec(family, u, r, b1, b2 * b3 * b4), module)),
    )
    return _residual_matrix(lambda x: lhs(x) - rhs(x), module)


def reduced_bracket_residual(s1: OpSpec, s2: OpSpec,
                             module: TensorModule) -> Mat:
    return _shifted_bracket_residual("reduced", s1, s2, module)


def evaluated_bracket_residual(s1: OpSpec, s2: OpSpec,
                               module: TensorModule) -> Mat:
    return _shifted_bracket_residual("evaluated", s1, s2, module)


def product_to_reduced_residual(s1: OpSpec, s2: OpSpec,
                                module: TensorModule) -> Mat:
    """[P, P] re-expressed through the reduced family:
    [P(u,r,b1,b2), P(v,s,b3,b4)] = R(w,r+s,b1b3,b2b4)
    - (u,s) R(v,s,b1b2b3,b4) + (v,r) R(u,r,b1b3b4,b2)."""
    u, r, b1, b2 = s1.u, s1.r, s1.b1, s1.b2
    v, s, b3, b4 = s2.u, s2.r, s2.b1, s2.b2
    us = _pair(u, s)
    vr = _pair(v, r)
    w = tuple(us * y - vr * x for x, y in zip(u, v))
    lhs = _commutator_op(
        as_operator(OpSpec("product", u, r, b1, b2), module),
        as_operator(OpSpec("product", v, s, b3, b4), module))
    rhs = _combine(
        (GaussRat(1), as_operator(OpSpec("reduced", w, _add_deg(r, s),
                                         b1 * b3, b2 * b4), module)),
        (-us, as_operator(OpSpec("reduced", v, s, b1 * b2 * b3, b4), module)),
        (vr, as_operator(OpSpec("reduced", u, r, b1 * b3 * b4, b2), module)),
    )
    return _residual_matrix(lambda x: lhs(x) - rhs(x), module)


def scaled_product_bracket_residual(v: Tuple[GaussRat, ...], s: Degree,
                                    b: BElem, u: Tuple[GaussRat, ...],
                                    r: Degree, b2: BElem,
                                    module: TensorModule) -> Mat:
    """With P(u,r)b := P(u,r,1,b):
    [P(v,s)b, P(u,r)b'] = P(w,r+s)bb' + (u,s) P(v,s)bb' - (v,r) P(u,r)bb'
    with w = (v,r)u - (u,s)v."""
    one = module.pres.one()
    us = _pair(u, s)
    vr = _pair(v, r)
    w = tuple(vr * x - us * y for x, y in zip(u, v))
    lhs = _commutator_op(
        as_operator(OpSpec("product", v, s, one, b), module),
        as_operator(OpSpec("product", u, r, one, b2), module))
    bb = b * b2
    rhs = _combine(
        (GaussRat(1), as_operator(OpSpec("product", w, _add_deg(r, s),
                                         one, bb), module)),
        (us, as_operator(OpSpec("product", v, s, one, bb), module)),
        (-vr, as_operator(OpSpec("product", u, r, one, bb), module)),
    )
    return _residual_matrix(lambda x: lhs(x) - rhs(x), module)


def zero_mode_scalar_residual(u: Tuple[GaussRat, ...], b: BElem,
                              module: TensorModule) -> Mat:
    """D(u,0)b on the degree-zero slice minus psi(b)(u,alpha) Id."""
    n = module.n
    x = LoopElem.d_vec(n, module.pres, u, (0,) * n, b)
    scal = b.psi() * _pair(u, module.alpha)

    def op(v: ModVector) -> ModVector:
        return act(x, v) - v.scale(scal)

    return _residual_matrix(op, module)


def coefficient_collapse_residual(u: Tuple[GaussRat, ...], r: Degree,
                                  b: BElem, module: TensorModule) -> Mat:
    """D(u,r)b minus psi(b) D(u,r) as operators; must vanish."""
    n = module.n
    xb = LoopElem.d_vec(n, module.pres, u, r, b)
    x1 = LoopElem.d_vec(n, module.pres, u, r)
    pb = b.psi()

    def op(v: ModVector) -> ModVector:
        return act(xb, v) - act(x1, v).scale(pb)

    return _residual_matrix(op, module)


class ShiftDifferenceBasis:
    """Row-reduced basis of span{ v(x)t^r - v(x)t^0 } over the window.

    The generators (v_k at slice r) - (v_k at slice 0) are already a
    reduced echelon basis when coordinates are ordered with the nonzero
    slices first and slice 0 last: each generator has its pivot at
    (r, k) and its only other entries at slice 0.  Reduction of a
    vector therefore subtracts its every non-zero-slice component and
    leaves the sum of all slice vectors at slice 0, so membership is
    exactly 'slice sum vanishes'.
    """

    def __init__(self, module: TensorModule):
        self.module = module
        n_slices = len(module.window.slices())
        self.dim = module.d * (n_slices - 1)
        self.codim = module.d

    def contains(self, v: ModVector) -> bool:
        return all(not c for c in v.slice_sum())

    def quotient_rep(self, v: ModVector) -> List[GaussRat]:
        """Image in the d-dimensional quotient, as bottom-slice coords."""
        return v.slice_sum()

    def explicit_rows(self) -> List[List[GaussRat]]:
        """Dense generator rows, for small-scale rank checks."""
        module = self.module
        d = module.d
        slices = [m for m in module.window.slices() if any(m)]
        zero = (0,) * module.n
        cols = {m: k for k, m in enumerate(slices + [zero])}
        rows = []
        for m in slices:
            for k in range(d):
                row = [ZERO] * (len(cols) * d)
                row[cols[m] * d + k] = GaussRat(1)
                row[cols[zero] * d + k] = GaussRat(-1)
                rows.append(row)
        return rows


def evaluated_preserves_differences(spec: OpSpec, module: TensorModule,
                                    W: ShiftDifferenceBasis = None) -> bool:
    """The evaluated family maps shift differences into the
    shift-difference subspace (on generators whose image stays in the
    window)."""
    if spec.family != "evaluated":
        raise ValueError("expected an evaluated-family operator")
    W = W or ShiftDifferenceBasis(module)
    op = as_operator(spec, module)
    margin = tuple(abs(a) for a in spec.r)
    zero = (0,) * module.n
    for m in module.window.interior(margin):
        if m == zero:
            continue
        for k in range(module.d):
            diff = (module.basis_vector(m, k)
                    - module.basis_vector(zero, k))
            if not W.contains(op(diff)):
                return False
    return True


def quotient_intertwining_check(specs: Sequence[OpSpec],
                                module: TensorModule) -> bool:
    """The projection modulo shift differences intertwines the reduced
    family on the bottom slice with the evaluated family on the
    quotient, and restricts bijectively on the bottom slice."""
    W = ShiftDifferenceBasis(module)
    zero = (0,) * module.n
    d = module.d
    # bijectivity: bottom-slice basis vectors project to the standard basis
    span = SpanBasis(d)
    for k in range(d):
        span.insert(W.quotient_rep(module.basis_vector(zero, k)))
    if span.dim != d:
        return False
    for spec in specs:
        red = as_operator(OpSpec("reduced", spec.u, spec.r,
                                 spec.b1, spec.b2), module)
        ev = as_operator(OpSpec("evaluated", spec.u, spec.r,
                                spec.b1, spec.b2), module)
        for k in range(d):
            v = module.basis_vector(zero, k)
            if W.quotient_rep(red(v)) != W.quotient_rep(ev(v)):
                return False
    return True


def bottom_slice_algebra_dim(module: TensorModule,
                             specs: Sequence[OpSpec]) -> int:
    """Burnside dimension of the algebra generated by weight-preserving
    product operators on the bottom slice; equals d^2 iff irreducible."""
    zero = (0,) * module.n
    mats = [op_matrix_of(spec, module, [zero]) for spec in specs]
    return burnside_dim(mats)


def default_irreducibility_specs(module: TensorModule) -> List[OpSpec]:
    """Documented generator sample: P(e_i, e_j, 1, 1) for all i, j plus
    the zero-mode P(e_1, 0, 1, 1)."""
    n = module.n
    one = module.pres.one()
    specs = []
    for i in range(n):
        u = tuple(GaussRat(1 if t == i else 0) for t in range(n))
        for j in range(n):
            r = tuple(1 if t == j else 0 for t in range(n))
            specs.append(OpSpec("product", u, r, one, one))
    e1 = tuple(GaussRat(1 if t == 0 else 0) for t in range(n))
    specs.append(OpSpec("product", e1, (0,) * n, one, one))
    return specs


# -- rank-one checks --------------------------------------------------


def rank_one_scalar_shift_check(module: TensorModule,
                                r_range: Sequence[int]) -> List[str]:
    """For n = 1 the derivation d_r acts on v(x)t^s by the scalar
    r c + s + alpha; equivalently the shifted derivation (t^r - 1)d acts
    on the quotient by the scalar r c."""
    if module.n != 1:
        raise ValueError("rank-one check needs n = 1")
    failures = []
    W = ShiftDifferenceBasis(module)
    c = module.rep.c
    alpha = module.alpha[0]
    R = module.window.radius
    for r in r_range:
        for s in range(-(R - abs(r)), R - abs(r) + 1):
            x = LoopElem.d_part(1, module.pres, 1, (r,))
            v = module.basis_vector((s,), 0)
            got = act(x, v)
            scal = c * r + s + alpha
            want = module.basis_vector((s + r,), 0).scale(scal)
            if got != want:
                failures.append(f"d_{r} on slice {s}: wrong scalar")
        v0 = module.basis_vector((0,), 0)
        got_q = W.quotient_rep(act(diff_derivation(module.pres, r), v0))
        want_q = [x * (c * r) for x in W.quotient_rep(v0)]
        if got_q != want_q:
            failures.append(f"quotient scalar of (t^{r}-1)d is not {r}c")
    return failures


def rank_one_commutation_check(module: TensorModule, k_max: int = 2,
                               f_degrees: Sequence[int] = (1, 2, 3)) -> List[str]:
    """For n = 1: f(A - k) . B = B . f(A) where A = (1 - t^-1) d_0 =
    d_0 - d_(-1) and B = (t-1)^(k+1) d_(-1), for monomial f up to the
    given degrees (linearity extends this to all polynomials)."""
    if module.n != 1:
        raise ValueError("rank-one check needs n = 1")
    failures = []
    pres = module.pres
    A = diff_derivation(pres, -1).scale(-1)  # d_0 - d_(-1)
    for k in range(k_max + 1):
        B = poly_derivation(pres, k + 1, -1)
        for p in f_degrees:
            v = module.basis_vector((0,) * 1, 0)

            def apply_pow(x: LoopElem, shift: int, w: ModVector, power: int):
                for _ in range(power):
                    w = act(x, w) + w.scale(GaussRat(shift))
                return w

            left = apply_pow(A, -k, act(B, v), p)
            right = act(B, apply_pow(A, 0, v, p))
            if left != right:
                failures.append(f"commutation fails at k={k}, f=x^{p}")
    return failures


def rank_one_quotient_annihilation_check(module: TensorModule,
                                         i_range: Sequence[int] = (-1, 0, 1)
                                         ) -> List[str]:
    """For n = 1 the square of the augmentation ideal times d kills the
    quotient: (t-1)^2 t^i d maps the bottom slice into shift differences."""
    if module.n != 1:
        raise ValueError("rank-one check needs n = 1")
    failures = []
    W = ShiftDifferenceBasis(module)
    for i in i_range:
        x = poly_derivation(module.pres, 2, i)
        for k in range(module.d):
            v = module.basis_vector((0,), k)
            if not W.contains(act(x, v)):
                failures.append(f"(t-1)^2 t^{i} d image not in differences")
    return failures
