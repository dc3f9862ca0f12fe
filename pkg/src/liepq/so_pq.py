"""Explicit so(p,q) constructions: the defining form, the frozen generator
basis, the standard module, T_c, the deformed bracket, the embedding into
so(R^{n+1}, I_{p,q}(c)), the exceptional isomorphisms, and the half-spin
modules of so(4,4) via real Clifford gamma matrices.

Basis convention (frozen; serialized artifacts depend on it): generators are
indexed by pairs (i, j), i < j, in lexicographic order.  The generator for
(i, j) is E_ij - E_ji when coordinates i and j carry the same sign of the
form, and E_ij + E_ji when i < p <= j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ContractError, ShapeMismatchError, UnknownSmallestModuleError, UnsupportedRealizationError
from .exact_linalg import (
    Matrix,
    ONE,
    Rational,
    Subspace,
    ZERO,
    congruence_diagonalize,
    invert,
    kernel,
    kron,
    mat_mul,
    rat,
    rational_sqrt,
    wedge_square_index,
)
from .lie_core import LieAlgebra, canonical_json
from .rep_theory import (
    Representation,
    adjoint_rep,
    dual_rep,
    invariant_symmetric_forms,
    restrict,
    wedge_square_rep,
)


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise ContractError("signature needs p, q >= 0 and p + q >= 1")

    @property
    def n(self) -> int:
        return self.p + self.q


def ipq(p: int, q: int) -> Matrix:
    """The defining diagonal form diag(I_p, -I_q)."""
    Signature(p, q)
    return Matrix.diagonal([ONE] * p + [-ONE] * q)


def ipq_c(p: int, q: int, c) -> Matrix:
    """diag(c, I_{p,q}) for c > 0 and diag(I_{p,q}, c) for c < 0."""
    c = rat(c)
    if c == 0:
        raise ContractError("ipq_c requires c != 0")
    Signature(p, q)
    if c > 0:
        return Matrix.diagonal([c] + [ONE] * p + [-ONE] * q)
    return Matrix.diagonal([ONE] * p + [-ONE] * q + [c])


def generator_pairs(n: int):
    return wedge_square_index(n)


def _generator(p: int, n: int, i: int, j: int) -> Matrix:
    m = Matrix.zeros(n, n)
    m.entries[i * n + j] = ONE
    if (i < p) == (j < p):
        m.entries[j * n + i] = -ONE
    else:
        m.entries[j * n + i] = ONE
    return m


def so_pq_algebra(p: int, q: int) -> LieAlgebra:
    """MATRIX realization of so(p,q) in the frozen generator basis."""
    n = p + q
    if n < 2:
        raise ContractError("so(p,q) needs p + q >= 2")
    Signature(p, q)
    basis = [_generator(p, n, i, j) for i, j in generator_pairs(n)]
    return LieAlgebra.from_matrices(basis, validate=False)


def standard_rep(p: int, q: int) -> Representation:
    """Natural representation: each basis element acts as itself on R^n."""
    algebra = so_pq_algebra(p, q)
    return Representation(algebra, p + q, list(algebra.basis))


def t_c(p: int, q: int, c) -> Matrix:
    """Matrix of T_c : wedge^2 R^n -> so(p,q) in the frozen bases.

    T_c(u ^ v) = c<u,.>v - c<v,.>u; on basis bivectors the image is a single
    generator, so the matrix has one entry per column.
    """
    c = rat(c)
    n = p + q
    Signature(p, q)
    pairs = generator_pairs(n)
    m = len(pairs)
    out = Matrix.zeros(m, m)
    for col, (i, j) in enumerate(pairs):
        if not c:
            continue
        coeff = -c if (i < p and j < p) else c
        out.entries[col * m + col] = coeff  # row index equals generator index
    return out


@dataclass
class DeformedAlgebra:
    """so(p,q) (+) R^{p,q} with the bracket [.,.]_c, as an abstract algebra.

    Coordinates 0..m-1 are the so(p,q) block in the frozen basis order;
    coordinates m..m+n-1 are the standard module.
    """

    p: int
    q: int
    c: Rational
    algebra: LieAlgebra
    so_indices: tuple
    vec_indices: tuple

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def so_block_subspace(self) -> Subspace:
        vectors = []
        for idx in self.so_indices:
            v = [ZERO] * self.dim
            v[idx] = ONE
            vectors.append(v)
        return Subspace.from_vectors(self.dim, vectors)

    def to_json_dict(self) -> dict:
        data = self.algebra.to_json_dict()
        data.update(
            {
                "p": self.p,
                "q": self.q,
                "c": str(self.c),
                "blocks": {
                    "so": list(self.so_indices),
                    "vec": list(self.vec_indices),
                },
            }
        )
        return data

    def to_json(self) -> str:
        return canonical_json(self.to_json_dict())


def deformed_algebra(p: int, q: int, c) -> DeformedAlgebra:
    """The bracket [.,.]_c on so(p,q) (+) R^{p,q}; Jacobi-validated."""
    c = rat(c)
    n = p + q
    if n < 3:
        raise ContractError("the deformed bracket needs p + q >= 3")
    so = so_pq_algebra(p, q)
    m = so.dim
    pairs = generator_pairs(n)
    pair_index = {pr: k for k, pr in enumerate(pairs)}
    entries = []
    for (i, j), entry in so.structure.items():
        for k, v in entry.items():
            entries.append((i, j, k, v))
    for a, gen in enumerate(so.basis):
        for i in range(n):
            for k in range(n):
                v = gen[k, i]
                if v:
                    entries.append((a, m + i, m + k, v))
    if c:
        for (i, j), idx in pair_index.items():
            coeff = -c if (i < p and j < p) else c
            entries.append((m + i, m + j, idx, coeff))
    algebra = LieAlgebra.from_structure(m + n, entries, validate=True)
    return DeformedAlgebra(
        p=p,
        q=q,
        c=c,
        algebra=algebra,
        so_indices=tuple(range(m)),
        vec_indices=tuple(range(m, m + n)),
    )


@dataclass
class EmbeddingIso:
    """The explicit map (X, u) -> block matrix into so(R^{n+1}, I_{p,q}(c))."""

    p: int
    q: int
    c: Rational
    target_form: Matrix
    images: list  # one (n+1) x (n+1) matrix per deformed-algebra basis index

    def apply(self, coeffs) -> Matrix:
        n1 = self.images[0].rows
        out = Matrix.zeros(n1, n1)
        for x, img in zip(coeffs, self.images):
            if x:
                out = out + img.scale(x)
        return out


def embedding_iso(p: int, q: int, c) -> EmbeddingIso:
    c = rat(c)
    if c == 0:
        raise ContractError("embedding_iso requires c != 0")
    n = p + q
    if n < 3:
        raise ContractError("embedding_iso needs p + q >= 3")
    so = so_pq_algebra(p, q)
    m = so.dim
    images = []
    # extra coordinate sits first for c > 0 and last for c < 0
    if c > 0:
        def place(i, j):
            return i + 1, j + 1

        extra = 0
    else:
        def place(i, j):
            return i, j

        extra = n
    for gen in so.basis:
        out = Matrix.zeros(n + 1, n + 1)
        for i in range(n):
            for j in range(n):
                v = gen[i, j]
                if v:
                    r, s = place(i, j)
                    out.entries[r * (n + 1) + s] = v
        images.append(out)
    eta = [ONE] * p + [-ONE] * q
    for i in range(n):
        out = Matrix.zeros(n + 1, n + 1)
        r, _ = place(i, i)
        # column c.u and row u* = -u^t I_{p,q}
        out.entries[r * (n + 1) + extra] = c
        out.entries[extra * (n + 1) + r] = -eta[i]
        images.append(out)
    return EmbeddingIso(p=p, q=q, c=c, target_form=ipq_c(p, q, c), images=images)


def so_of_form(form: Matrix) -> LieAlgebra:
    """so(R^d, form) = {A : A^t.form + form.A = 0} with a canonical basis."""
    if not form.is_symmetric():
        raise ContractError("so_of_form requires a symmetric form")
    d = form.rows
    rows = []
    # unknowns A_{kl}; equations indexed by (i, j)
    for i in range(d):
        for j in range(d):
            row = [ZERO] * (d * d)
            for k in range(d):
                v = form[k, j]
                if v:
                    row[k * d + i] += v
                v = form[i, k]
                if v:
                    row[k * d + j] += v
            rows.append(row)
    basis = [Matrix(d, d, vec) for vec in kernel(Matrix.from_rows(rows)).basis_rows()]
    return LieAlgebra.from_matrices(basis, validate=False)


def sqrt_conjugation(p: int, q: int, c) -> Matrix | None:
    """For perfect-square |c|: the diagonal S with S.so(I_{p,q}(c)).S^{-1}
    landing in so(p+1,q) (c > 0) or so(p,q+1) (c < 0); None otherwise."""
    c = rat(c)
    if c == 0:
        raise ContractError("c must be nonzero")
    s = rational_sqrt(abs(c))
    if s is None:
        return None
    n = p + q
    if c > 0:
        return Matrix.diagonal([s] + [ONE] * n)
    return Matrix.diagonal([ONE] * n + [s])


# -- exceptional isomorphisms -----------------------------------------


SO31_SL2C = "SO31_SL2C"
SO32_SP4R = "SO32_SP4R"
SO33_SL4R = "SO33_SL4R"


@dataclass
class ExceptionalIso:
    name: str
    small_algebra: LieAlgebra
    small_modules: list  # Representation objects realizing the small modules
    carrier: Representation  # module whose invariant form produces the iso
    carrier_form: Matrix
    normalizer: Matrix  # S with S^t.form.S = scale * I_{p,q}
    scale: Rational
    target: LieAlgebra  # so(p,q) in the frozen basis
    iso_coeffs: Matrix  # columns: image of small-algebra basis in target basis

    def apply(self, coeffs) -> Matrix:
        """Image of a small-algebra element inside the target matrix algebra."""
        out = [ZERO] * self.target.dim
        d = self.target.dim
        for j, x in enumerate(coeffs):
            if x:
                for i in range(d):
                    out[i] += x * self.iso_coeffs[i, j]
        result = Matrix.zeros(self.target.basis[0].rows, self.target.basis[0].cols)
        for coeff, b in zip(out, self.target.basis):
            if coeff:
                result = result + b.scale(coeff)
        return result


def exceptional_iso(name: str) -> ExceptionalIso:
    if name == SO31_SL2C:
        return _iso_sl2c()
    if name == SO32_SP4R:
        return _iso_sp4()
    if name == SO33_SL4R:
        return _iso_sl4()
    raise ContractError(f"unknown exceptional isomorphism {name!r}")


def _iso_sl4():
    algebra = _sl4_algebra()
    std = Representation(algebra, 4, list(algebra.basis))
    wedge = wedge_square_rep(std)
    return _finish_iso(
        SO33_SL4R, algebra, [std, dual_rep(std)], wedge, target_p=3, target_q=3
    )


def _iso_sp4():
    omega = Matrix.from_rows(
        [
            [ZERO, ZERO, ONE, ZERO],
            [ZERO, ZERO, ZERO, ONE],
            [-ONE, ZERO, ZERO, ZERO],
            [ZERO, -ONE, ZERO, ZERO],
        ]
    )
    algebra = _form_preserving_algebra(omega)
    std = Representation(algebra, 4, list(algebra.basis))
    wedge = wedge_square_rep(std)
    # primitive part: kernel of contraction with the symplectic form
    pairs = wedge_square_index(4)
    contraction = Matrix.from_rows([[omega[i, j] for (i, j) in pairs]])
    primitive = kernel(contraction)
    carrier = restrict(wedge, primitive)
    return _finish_iso(SO32_SP4R, algebra, [std], carrier, target_p=3, target_q=2)


def _iso_sl2c():
    algebra, herm = _sl2c_realified()
    cvec = Representation(algebra, 4, _sl2c_standard_actions())
    return _finish_iso(SO31_SL2C, algebra, [cvec], herm, target_p=3, target_q=1)


def _finish_iso(name, algebra, small_modules, carrier, target_p, target_q):
    forms = invariant_symmetric_forms(carrier)
    if len(forms) != 1:
        raise ContractError(
            f"{name}: expected a unique invariant symmetric form, got {len(forms)}"
        )
    form = forms[0]
    s, scale = _normalize_form_to_scaled_ipq(form, target_p, target_q)
    target = so_pq_algebra(target_p, target_q)
    coord = target.coordinatizer()
    sinv = invert(s)
    d = algebra.dim
    iso = Matrix.zeros(target.dim, d)
    for j in range(d):
        image = mat_mul(mat_mul(sinv, carrier.actions[j]), s)
        coeffs = coord.express(image)
        if coeffs is None:
            raise ContractError(f"{name}: conjugated action left so({target_p},{target_q})")
        for i, cf in enumerate(coeffs):
            iso.entries[i * d + j] = cf
    return ExceptionalIso(
        name=name,
        small_algebra=algebra,
        small_modules=small_modules,
        carrier=carrier,
        carrier_form=form,
        normalizer=s,
        scale=scale,
        target=target,
        iso_coeffs=iso,
    )


def _normalize_form_to_scaled_ipq(gram: Matrix, p: int, q: int):
    """Rational S and scale with S^t.gram.S = scale * I_{p,q}.

    Works whenever, after exact congruence diagonalization, positives and
    negatives pair up into planes with perfect-square ratio (hyperbolic
    planes) and the leftovers match the scale up to squares; that covers
    every carrier form this package constructs.
    """
    n = p + q
    if gram.rows != n:
        raise ShapeMismatchError("form has the wrong size for the target signature")
    pmat, diag = congruence_diagonalize(gram)
    if any(d == 0 for d in diag):
        raise ContractError("carrier form is degenerate")
    pos = [i for i, d in enumerate(diag) if d > 0]
    neg = [i for i, d in enumerate(diag) if d < 0]
    candidates = []
    for d in diag:
        a = abs(d)
        if a not in candidates:
            candidates.append(a)
    if ONE not in candidates:
        candidates.insert(0, ONE)
    flip = len(pos) != p
    if flip and len(neg) != p:
        raise ContractError("carrier form has the wrong inertia")
    want_pos, want_neg = (neg, pos) if flip else (pos, neg)
    sign = -ONE if flip else ONE
    for lam in candidates:
        cols = _match_columns(diag, want_pos, want_neg, sign * lam)
        if cols is not None:
            order = cols[0] + cols[1]
            s = Matrix.zeros(n, n)
            for new_col, vec in enumerate(order):
                for i in range(n):
                    s.entries[i * n + new_col] = vec[i]
            full = mat_mul(pmat, s)
            return full, sign * lam
    raise ContractError("could not rationally normalize the carrier form")


def _match_columns(diag, pos, neg, lam):
    """Columns (in the diagonalized coordinates) of norms +lam then -lam."""
    n = len(diag)
    pos = list(pos)
    neg = list(neg)
    plus_cols = []
    minus_cols = []

    def unit(i, coeff=ONE):
        v = [ZERO] * n
        v[i] = coeff
        return v

    # singles whose ratio to lam is a perfect square
    for i in list(pos):
        r = rational_sqrt(lam / diag[i])
        if r is not None:
            plus_cols.append(unit(i, r))
            pos.remove(i)
    for j in list(neg):
        r = rational_sqrt(lam / -diag[j])
        if r is not None:
            minus_cols.append(unit(j, r))
            neg.remove(j)
    # pair leftovers into rational hyperbolic planes
    while pos and neg:
        i = pos.pop()
        match = None
        for j in neg:
            r = rational_sqrt(-diag[j] / diag[i])
            if r is not None:
                match = (j, r)
                break
        if match is None:
            return None
        j, r = match
        neg.remove(j)
        # isotropic pair u0 = e_i + e_j / r', pairing s0 = 2 d_i
        rinv = 1 / r
        u0 = [ZERO] * n
        u0[i] = ONE
        u0[j] = rinv
        u1 = [ZERO] * n
        u1[i] = ONE
        u1[j] = -rinv
        s0 = 2 * diag[i]
        f = lam / (2 * s0)
        plus_cols.append([f * a + b for a, b in zip(u0, u1)])
        minus_cols.append([f * a - b for a, b in zip(u0, u1)])
    if pos or neg:
        return None
    return plus_cols, minus_cols


def _sl4_algebra() -> LieAlgebra:
    basis = []
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            m = Matrix.zeros(4, 4)
            m.entries[i * 4 + j] = ONE
            basis.append(m)
    for i in range(3):
        m = Matrix.zeros(4, 4)
        m.entries[i * 4 + i] = ONE
        m.entries[(i + 1) * 4 + (i + 1)] = -ONE
        basis.append(m)
    return LieAlgebra.from_matrices(basis, validate=False)


def _form_preserving_algebra(form: Matrix) -> LieAlgebra:
    """{A : A^t.form + form.A = 0} for an arbitrary (possibly skew) form."""
    d = form.rows
    rows = []
    for i in range(d):
        for j in range(d):
            row = [ZERO] * (d * d)
            for k in range(d):
                v = form[k, j]
                if v:
                    row[k * d + i] += v
                v = form[i, k]
                if v:
                    row[k * d + j] += v
            rows.append(row)
    basis = [Matrix(d, d, vec) for vec in kernel(Matrix.from_rows(rows)).basis_rows()]
    return LieAlgebra.from_matrices(basis, validate=False)


# complex 2x2 helpers for the sl(2,C) case: a matrix is a (re, im) pair


def _cmul(a, b):
    return (
        mat_mul(a[0], b[0]) - mat_mul(a[1], b[1]),
        mat_mul(a[0], b[1]) + mat_mul(a[1], b[0]),
    )


def _cadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _conj_t(a):
    return (a[0].transpose(), (-a[1]).transpose())


def _sl2c_complex_basis():
    z = Matrix.zeros(2, 2)
    h = Matrix.from_rows([[ONE, ZERO], [ZERO, -ONE]])
    e = Matrix.from_rows([[ZERO, ONE], [ZERO, ZERO]])
    f = Matrix.from_rows([[ZERO, ZERO], [ONE, ZERO]])
    real = [(h, z), (e, z), (f, z)]
    imag = [(z, h), (z, e), (z, f)]
    return real + imag


def _realify(cm) -> Matrix:
    re, im = cm
    n = re.rows
    out = Matrix.zeros(2 * n, 2 * n)
    for i in range(n):
        for j in range(n):
            a, b = re[i, j], im[i, j]
            out.entries[(2 * i) * 2 * n + 2 * j] = a
            out.entries[(2 * i) * 2 * n + 2 * j + 1] = -b
            out.entries[(2 * i + 1) * 2 * n + 2 * j] = b
            out.entries[(2 * i + 1) * 2 * n + 2 * j + 1] = a
    return out


def _sl2c_standard_actions():
    return [_realify(x) for x in _sl2c_complex_basis()]


def _herm_basis():
    z = Matrix.zeros(2, 2)
    ident = Matrix.identity(2)
    s1 = Matrix.from_rows([[ZERO, ONE], [ONE, ZERO]])
    s2_im = Matrix.from_rows([[ZERO, -ONE], [ONE, ZERO]])  # imaginary part of sigma_2
    s3 = Matrix.from_rows([[ONE, ZERO], [ZERO, -ONE]])
    return [(ident, z), (s1, z), (z, s2_im), (s3, z)]


def _herm_coords(cm):
    re, im = cm
    # t.I + x.sigma_1 + y.sigma_2 + z.sigma_3 = [[t+z, x-iy], [x+iy, t-z]]
    t = (re[0, 0] + re[1, 1]) / 2
    zc = (re[0, 0] - re[1, 1]) / 2
    x = re[0, 1]
    y = -im[0, 1]
    return [t, x, y, zc]


def _sl2c_realified():
    """The realified sl(2,C) with its action on 2x2 Hermitian matrices.

    The Hermitian action X.A = X A + A conj(X)^t carries the four-dimensional
    module whose invariant form has inertia (3,1).
    """
    basis_c = _sl2c_complex_basis()
    algebra = LieAlgebra.from_matrices([_realify(x) for x in basis_c], validate=False)
    herm = _herm_basis()
    actions = []
    for x in basis_c:
        cols = []
        for b in herm:
            image = _cadd(_cmul(x, b), _cmul(b, _conj_t(x)))
            cols.append(_herm_coords(image))
        m = Matrix.zeros(4, 4)
        for j, col in enumerate(cols):
            for i in range(4):
                m.entries[i * 4 + j] = col[i]
        actions.append(m)
    herm_rep = Representation(algebra, 4, actions)
    return algebra, herm_rep


def sl2c_compact_form_vectors():
    """su(2) = span{iH, E - F, i(E + F)} in the frozen sl(2,C)_R basis order
    (H, E, F, iH, iE, iF)."""
    i_h = [ZERO, ZERO, ZERO, ONE, ZERO, ZERO]
    e_minus_f = [ZERO, ONE, -ONE, ZERO, ZERO, ZERO]
    i_e_plus_f = [ZERO, ZERO, ZERO, ZERO, ONE, ONE]
    return [i_h, e_minus_f, i_e_plus_f]


# -- half-spin modules of so(4,4) --------------------------------------


@dataclass
class HalfSpinData:
    gammas: list
    spinor_rep: Representation
    chirality: Matrix
    plus_space: Subspace
    minus_space: Subspace
    c_plus: Representation
    c_minus: Representation


def clifford_gammas_44():
    """Sixteen-dimensional real gammas with gamma_i^2 = (I_{4,4})_ii."""
    s1 = Matrix.from_rows([[ZERO, ONE], [ONE, ZERO]])
    s3 = Matrix.from_rows([[ONE, ZERO], [ZERO, -ONE]])
    eps = Matrix.from_rows([[ZERO, ONE], [-ONE, ZERO]])
    plus, minus = [s1], [eps]
    for _ in range(3):
        size = plus[0].rows
        ident = Matrix.identity(size)
        new_plus = [kron(s1, ident)]
        new_minus = [kron(eps, ident)]
        for g in plus:
            new_plus.append(kron(s3, g))
        for g in minus:
            new_minus.append(kron(s3, g))
        plus, minus = new_plus, new_minus
    return plus + minus


def half_spin_reps(p: int, q: int) -> HalfSpinData:
    """The two 8-dimensional chiral summands of the so(4,4) spinor module."""
    if (p, q) != (4, 4):
        raise UnsupportedRealizationError("half-spin construction is fixed at (4,4)")
    gammas = clifford_gammas_44()
    algebra = so_pq_algebra(4, 4)
    eta = ipq(4, 4)
    products = {}
    for a in range(8):
        for b in range(a + 1, 8):
            products[(a, b)] = mat_mul(gammas[a], gammas[b])
    actions = []
    for gen in algebra.basis:
        ai = mat_mul(gen, eta)
        out = Matrix.zeros(16, 16)
        for a in range(8):
            for b in range(a + 1, 8):
                v = ai[a, b]
                if v:
                    out = out + products[(a, b)].scale(v / 2)
        actions.append(out)
    spinor = Representation(algebra, 16, actions)
    chi = gammas[0]
    for g in gammas[1:]:
        chi = mat_mul(chi, g)
    ident = Matrix.identity(16)
    plus_space = kernel(chi - ident)
    minus_space = kernel(chi + ident)
    return HalfSpinData(
        gammas=gammas,
        spinor_rep=spinor,
        chirality=chi,
        plus_space=plus_space,
        minus_space=minus_space,
        c_plus=restrict(spinor, plus_space),
        c_minus=restrict(spinor, minus_space),
    )


# -- the dimension table -----------------------------------------------


class DimensionBound(NamedTuple):
    dim_group: int
    smallest_module: int
    total: int


def smallest_module_dim(p: int, q: int) -> int:
    """m(so(p,q)) for the in-scope table; UnknownSmallestModuleError outside."""
    n = p + q
    if p < 1 or q < 1:
        raise UnknownSmallestModuleError(
            "table covers p, q >= 1 only (compact forms are out of scope)"
        )
    if n < 3:
        raise UnknownSmallestModuleError("no table entry below p + q = 3")
    if (p, q) == (2, 2):
        return 3
    return n


def dimension_bound(p: int, q: int) -> DimensionBound:
    m = smallest_module_dim(p, q)
    n = p + q
    return DimensionBound(n * (n - 1) // 2, m, n * (n - 1) // 2 + m)


def adjoint_of(p: int, q: int) -> Representation:
    return adjoint_rep(so_pq_algebra(p, q))


def wedge_of_standard(p: int, q: int) -> Representation:
    return wedge_square_rep(standard_rep(p, q))
