"""Shape-position detection and univariate representations of critical sets.

A zero-dimensional radical ideal in shape position has the reduced lex basis
{w(x1), x2 - v2(x1), ..., xn - vn(x1)}: every solution is (t, v2(t), ...,
vn(t)) for a root t of w.  When points collide in the first coordinate, the
linear change of variables y = A(j) x with first row (1, j, j^2, ...) is
swept over j = 0, 1, 2, ... until a separating one is found.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import MPoly, UPoly, QMatrix, substitute_linear, compose_mod
from .errors import InternalInvariantError, PositiveDimensionalError
from .groebner import (LEX, ReducedGB, buchberger, is_zero_dimensional,
                       quotient_basis, radical_zero_dim)


@dataclass(frozen=True)
class ChangeOfVariables:
    """y = A x with A the identity except for first row (1, j, j^2, ...)."""

    j: int
    n: int
    A: QMatrix
    Ainv: QMatrix

    @classmethod
    def build(cls, j, n):
        one, zero = Fraction(1), Fraction(0)
        a = [[one if r == c else zero for c in range(n)] for r in range(n)]
        ainv = [row[:] for row in a]
        for c in range(1, n):
            a[0][c] = Fraction(j ** c)
            ainv[0][c] = -Fraction(j ** c)
        A = QMatrix.from_rows(a)
        Ainv = QMatrix.from_rows(ainv)
        if A.matmul(Ainv) != QMatrix.identity(n):
            raise InternalInvariantError("A * Ainv != I")
        return cls(j, n, A, Ainv)


class UnivariateRep:
    """(A, w, v): all solutions of the source system are A^-1 v(t) over the
    real (or complex) roots t of the squarefree monic eliminant w."""

    def __init__(self, cov, w, v):
        self.cov = cov
        self.w = w
        self.v = tuple(v)
        self.nvars = cov.n
        self._coords = None

    def coordinate_polys(self):
        """Images of the roots in the original variables: A^-1 v(t)."""
        if self._coords is None:
            coords = []
            for i in range(self.nvars):
                acc = UPoly.zero()
                for jj in range(self.nvars):
                    c = self.cov.Ainv[i, jj]
                    if c:
                        acc = acc + self.v[jj].scale(c)
                coords.append(acc % self.w if acc.degree() >= self.w.degree()
                              else acc)
            self._coords = tuple(coords)
        return self._coords

    def residuals(self, gens):
        """Each generator composed with A^-1 v(t), reduced mod w; all zero
        exactly when every root of w maps into the generators' variety."""
        coords = self.coordinate_polys()
        return [compose_mod(g, coords, self.w) for g in gens]

    def certify(self, gens):
        bad = [i for i, r in enumerate(self.residuals(gens)) if r]
        if bad:
            raise InternalInvariantError(
                f"representation does not annihilate generators {bad}")

    def __repr__(self):
        return (f"UnivariateRep(j={self.cov.j}, deg w={self.w.degree()}, "
                f"n={self.nvars})")


def is_shape_position(G):
    """Return (w, v) if the reduced lex basis has the shape
    {w(x1), x2 - v2(x1), ..., xn - vn(x1)}, else None.

    The unit ideal (empty variety) counts as shape position with w = 1."""
    n = G.nvars
    if G.is_trivial:
        return UPoly.one(), (UPoly.t(),) + tuple(UPoly.zero() for _ in range(n - 1))
    gens = G.generators
    if len(gens) != n:
        return None
    w = _as_univariate(gens[0], 0, n)
    if w is None:
        return None
    v = [UPoly.t()]
    for i in range(1, n):
        g = gens[i]
        e_i = _exp_single(i, 1, n)
        if g.terms.get(e_i) != 1:
            return None
        rest = MPoly(n, {e: c for e, c in g.terms.items() if e != e_i})
        vi = _as_univariate(-rest, 0, n)
        if vi is None:
            return None
        v.append(vi)
    return w, tuple(v)


def _exp_single(i, k, nvars):
    e = [0] * nvars
    e[i] = k
    return tuple(e)


def _as_univariate(p, var, nvars):
    out = {}
    for e, c in p.terms.items():
        if any(e[i] for i in range(nvars) if i != var):
            return None
        out[e[var]] = c
    if not out:
        return UPoly.zero()
    coeffs = [Fraction(0)] * (max(out) + 1)
    for k, c in out.items():
        coeffs[k] = c
    return UPoly(coeffs)


def separating_representation(gens, order=LEX):
    """Univariate representation of the zero-dimensional variety of ``gens``.

    Sweeps j = 0, 1, 2, ... (smallest winner is returned): substitute
    x = A(j)^-1 y, take the radical of the transformed ideal, and test shape
    position.  The sweep is capped just past the (n-1) d (d-1)/2 guarantee for
    the separating linear form, d being the number of complex solutions."""
    gens = [g for g in gens if g]
    if not gens:
        raise PositiveDimensionalError("the zero ideal is not zero-dimensional")
    n = gens[0].nvars

    G0 = buchberger(gens, order)
    if not is_zero_dimensional(G0):
        raise PositiveDimensionalError(
            "the ideal is not zero-dimensional; no univariate representation")
    R0 = radical_zero_dim(G0)
    delta = len(quotient_basis(R0))
    bound = (n - 1) * delta * (delta - 1) // 2

    for j in range(bound + 1):
        if j == 0:
            R = R0
        else:
            cov = ChangeOfVariables.build(j, n)
            moved = [substitute_linear(g, cov.Ainv) for g in gens]
            Gj = buchberger(moved, order)
            if not is_zero_dimensional(Gj):
                raise InternalInvariantError(
                    "linear change of variables broke zero-dimensionality")
            R = radical_zero_dim(Gj)
        sp = is_shape_position(R)
        if sp is not None:
            w, v = sp
            rep = UnivariateRep(ChangeOfVariables.build(j, n), w.monic(),
                                [vi % w if vi.degree() >= w.degree() else vi
                                 for vi in v])
            rep.certify(gens)
            return rep
    raise InternalInvariantError(
        f"no separating j found within the bound {bound}")
