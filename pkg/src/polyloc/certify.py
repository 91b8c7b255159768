"""Second-order certification along the univariate representation.

The Hessian curve H(t) and constraint-Jacobian curve C(t) are matrices of
univariate polynomials reduced mod w.  Positive definiteness at a root of w
is decided by Sylvester's criterion; definiteness restricted to the nullspace
of C by the bordered determinantal criterion.  Every minor is precomputed
symbolically once and sign-evaluated exactly per root.
"""

from itertools import combinations

from .arith import UPoly, QMatrix, hessian, determinant, compose_mod
from .errors import ConstraintQualificationError, DimensionError
from .realroots import sign_at

DIRECT = "direct"
CONGRUENT = "congruent"


class HessianCurve:
    """Symmetric n x n matrix of UPoly entries reduced mod w."""

    def __init__(self, mat, w, convention=DIRECT):
        self.mat = mat
        self.w = w
        self.n = mat.rows
        self.convention = convention
        self._minors = {}

    def entry(self, i, j):
        return self.mat[i, j]

    def leading_minors(self, perm=None):
        """D_1..D_n of the (symmetrically permuted) matrix, reduced mod w."""
        perm = tuple(perm) if perm is not None else tuple(range(self.n))
        if perm not in self._minors:
            sub = self.mat.submatrix(perm, perm)
            self._minors[perm] = tuple(
                determinant(sub.submatrix(range(k), range(k))) % self.w
                for k in range(1, self.n + 1))
        return self._minors[perm]

    def minor_signs_at(self, a, perm=None):
        return [sign_at(d, a) for d in self.leading_minors(perm)]


class JacobianCurve:
    """m x n constraint Jacobian along the curve, entries reduced mod w."""

    def __init__(self, mat, w):
        self.mat = mat
        self.w = w
        self.m = mat.rows
        self.n = mat.cols
        self._col_minors = {}
        self._bordered = {}

    def column_minor(self, cols):
        cols = tuple(cols)
        if cols not in self._col_minors:
            self._col_minors[cols] = determinant(
                self.mat.submatrix(range(self.m), cols)) % self.w
        return self._col_minors[cols]


def _x_block(rep, n):
    """Upper-left n x n block of A^-1 (unit upper triangular)."""
    return rep.cov.Ainv.submatrix(range(n), range(n))


def _congruence(mat, S):
    """S^T * mat * S for a rational S and a UPoly matrix."""
    n = mat.rows
    rows = mat.to_rows()
    mid = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = UPoly.zero()
            for k in range(n):
                c = S[k, j]
                if c:
                    acc = acc + rows[i][k].scale(c)
            mid[i][j] = acc
    out = []
    for i in range(n):
        for j in range(n):
            acc = UPoly.zero()
            for k in range(n):
                c = S[k, i]
                if c:
                    acc = acc + mid[k][j].scale(c)
            out.append(acc)
    return QMatrix(n, n, out)


def hessian_curve(source, rep, n_x=None, convention=DIRECT):
    """Hessian of ``source`` w.r.t. its first ``n_x`` variables, evaluated at
    A^-1 v(t) and reduced mod w.

    ``direct`` evaluates the source Hessian at the curve; ``congruent``
    additionally conjugates by the (x-block of) A^-1, which is a congruence by
    an invertible matrix and so certifies the same definiteness outcomes."""
    N = source.nvars
    n_x = N if n_x is None else n_x
    if not 1 <= n_x <= N:
        raise DimensionError("bad primal block size")
    coords = rep.coordinate_polys()
    Hm = hessian(source, range(n_x))
    entries = [[None] * n_x for _ in range(n_x)]
    for i in range(n_x):
        for j in range(i, n_x):
            e = compose_mod(Hm[i, j], coords, rep.w)
            entries[i][j] = e
            entries[j][i] = e
    mat = QMatrix(n_x, n_x, [entries[i][j] for i in range(n_x) for j in range(n_x)])
    if convention == CONGRUENT:
        mat = _congruence(mat, _x_block(rep, n_x))
        mat = mat.map(lambda p: p % rep.w)
    elif convention != DIRECT:
        raise ValueError(f"unknown Hessian convention {convention!r}")
    return HessianCurve(mat, rep.w, convention)


def jacobian_curve(h, rep, convention=DIRECT):
    """Constraint Jacobian at the projected curve point, reduced mod w."""
    if not h:
        return JacobianCurve(QMatrix(0, rep.nvars, []), rep.w)
    n = h[0].nvars
    coords = rep.coordinate_polys()[:n]
    rows = []
    for hj in h:
        grad_row = [compose_mod(hj.diff(i), coords, rep.w) for i in range(n)]
        rows.append(grad_row)
    mat = QMatrix.from_rows(rows)
    if convention == CONGRUENT:
        S = _x_block(rep, n)
        out = []
        for i in range(mat.rows):
            for j in range(n):
                acc = UPoly.zero()
                for k in range(n):
                    c = S[k, j]
                    if c:
                        acc = acc + mat[i, k].scale(c)
                out.append(acc % rep.w)
        mat = QMatrix(mat.rows, n, out)
    return JacobianCurve(mat, rep.w)


def is_pd_at(Hc, a):
    """H(a) positive definite (Sylvester: every leading minor positive)."""
    return all(s == 1 for s in Hc.minor_signs_at(a))


def constraint_rank_permutation(Cc, a):
    """A variable order putting a nonsingular m x m block of C(a) first, or
    None when C(a) is rank-deficient (constraint qualification fails)."""
    m, n = Cc.m, Cc.n
    for cols in combinations(range(n), m):
        if sign_at(Cc.column_minor(cols), a) != 0:
            rest = [i for i in range(n) if i not in cols]
            return tuple(cols) + tuple(rest)
    return None


def _bordered_minors(Hc, Cc, perm):
    key = tuple(perm)
    if key not in Cc._bordered:
        m, n = Cc.m, Cc.n
        z = UPoly.zero()
        size = m + n
        rows = [[z] * size for _ in range(size)]
        for i in range(m):
            for j in range(n):
                e = Cc.mat[i, perm[j]]
                rows[i][m + j] = e
                rows[m + j][i] = e
        for i in range(n):
            for j in range(n):
                rows[m + i][m + j] = Hc.mat[perm[i], perm[j]]
        B = QMatrix.from_rows(rows)
        Cc._bordered[key] = tuple(
            determinant(B.submatrix(range(k), range(k))) % Hc.w
            for k in range(2 * m + 1, size + 1))
    return Cc._bordered[key]


def is_pd_on_nullspace_at(Hc, Cc, a):
    """H(a) positive definite on the nullspace of C(a).

    Bordered criterion: with B = [[0, C], [C^T, H]], the condition holds
    exactly when the leading principal minors D_k for k = 2m+1..m+n all have
    sign (-1)^m, valid once the first m columns of C are independent (a
    variable permutation arranges that)."""
    if Cc.m == 0:
        return is_pd_at(Hc, a)
    perm = constraint_rank_permutation(Cc, a)
    if perm is None:
        raise ConstraintQualificationError(
            "constraint Jacobian is rank-deficient at a critical point")
    target = -1 if Cc.m % 2 else 1
    return all(sign_at(d, a) == target for d in _bordered_minors(Hc, Cc, perm))


def det_nonvanishing_on_critical(detP, roots):
    """True when detP (already reduced mod w) is nonzero at every root."""
    return all(sign_at(detP, a) != 0 for a in roots)
