"""Univariate real-root isolation and exact sign determination.

Sturm-sequence bisection over exact rationals: one signed-remainder machinery
serves isolation, root counting and sign queries at algebraic numbers.  All
interval endpoints are dyadic (integer starting bounds, midpoint halving), so
endpoint growth stays tame.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels as K
from .arith import UPoly
from .errors import PreconditionError


def squarefree_part(p):
    """p / gcd(p, p'), monic."""
    if not p:
        raise ZeroDivisionError("squarefree part of the zero polynomial")
    a = p.primitive_integer_coeffs()
    if len(a) == 1:
        return UPoly.one()
    g = K.zz_gcd(a, K.zz_diff(a))
    if len(g) == 1:
        return p.monic()
    return UPoly(K.zz_div_exact(a, g)).monic()


def is_squarefree(p):
    a = p.primitive_integer_coeffs()
    return len(a) == 1 or len(K.zz_gcd(a, K.zz_diff(a))) == 1


def _sign_at_rational(zz, x):
    v = K.zz_eval_scaled(zz, x.numerator, x.denominator)
    return (v > 0) - (v < 0)


def cauchy_root_bound(p):
    """Integer B with every complex root of p strictly inside (-B, B)."""
    cs = p.primitive_integer_coeffs()
    lead = cs[-1]
    m = max(abs(c) for c in cs[:-1]) if len(cs) > 1 else 0
    b = Fraction(m, abs(lead)) + 1
    n = b.numerator // b.denominator
    return n + 1  # strictly larger than the Cauchy bound


@dataclass
class Interval:
    lo: Fraction
    hi: Fraction

    def width(self):
        return self.hi - self.lo

    def mid(self):
        return (self.lo + self.hi) / 2


class AlgebraicNumber:
    """Real root of a squarefree rational polynomial, held as the defining
    polynomial plus an isolating interval whose endpoints are not roots."""

    __slots__ = ("defpoly", "_zz", "lo", "hi", "_sign_lo")

    def __init__(self, defpoly, lo, hi, _zz=None, _sign_lo=None):
        self.defpoly = defpoly
        self._zz = _zz if _zz is not None else defpoly.primitive_integer_coeffs()
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._sign_lo = (_sign_lo if _sign_lo is not None
                         else _sign_at_rational(self._zz, self.lo))

    @property
    def iv(self):
        return Interval(self.lo, self.hi)

    def copy(self):
        return AlgebraicNumber(self.defpoly, self.lo, self.hi,
                               _zz=self._zz, _sign_lo=self._sign_lo)

    def width(self):
        return self.hi - self.lo

    def mid(self):
        return (self.lo + self.hi) / 2

    def _bisect_once(self):
        m = (self.lo + self.hi) / 2
        s = _sign_at_rational(self._zz, m)
        if s == 0:
            # the root is exactly m; shrink to a punctured neighbourhood
            delta = (self.hi - self.lo) / 4
            while (_sign_at_rational(self._zz, m - delta) == 0
                   or _sign_at_rational(self._zz, m + delta) == 0):
                delta /= 2
            self.lo, self.hi = m - delta, m + delta
            self._sign_lo = _sign_at_rational(self._zz, self.lo)
        elif s == self._sign_lo:
            self.lo = m
        else:
            self.hi = m

    def refine_to(self, width):
        width = Fraction(width)
        while self.hi - self.lo > width:
            self._bisect_once()
        return self

    def to_float(self):
        self.refine_to(Fraction(1, 10 ** 17) * (1 + abs(self.mid())))
        return float(self.mid())

    def as_rational(self):
        """The exact Fraction this number equals, or None if irrational.

        Rational-root candidates of the defining polynomial are checked
        against the isolating interval."""
        zz = self._zz
        while zz and zz[0] == 0:
            if self.lo < 0 < self.hi:
                return Fraction(0)
            zz = zz[1:]  # deflate the root at the origin
        c0 = zz[0]
        lead = zz[-1]
        for p in _divisors(abs(c0)):
            for q in _divisors(abs(lead)):
                for s in (1, -1):
                    cand = Fraction(s * p, q)
                    if self.lo < cand < self.hi and \
                            K.zz_eval_scaled(zz, cand.numerator, cand.denominator) == 0:
                        return cand
        return None

    def __lt__(self, other):
        """Order against another root with a disjoint interval, or a rational."""
        if isinstance(other, AlgebraicNumber):
            while not (self.hi <= other.lo or other.hi <= self.lo):
                self._bisect_once()
                other._bisect_once()
            return self.hi <= other.lo
        x = Fraction(other)
        s = _sign_at_rational(self._zz, x)
        if s == 0:
            return False
        while self.lo < x < self.hi:
            self._bisect_once()
        return self.hi <= x

    def __repr__(self):
        return f"AlgebraicNumber({float(self.mid()):.6g} in ({self.lo}, {self.hi}))"


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    out.sort()
    return out


def sturm_root_count(p, lo=None, hi=None):
    """Number of distinct real roots of p in (lo, hi]; the whole line when
    both bounds are omitted."""
    zz = p.primitive_integer_coeffs()
    if len(zz) <= 1:
        return 0
    chain = K.zz_sturm_chain(zz)
    va = (K.sturm_var_neg_inf(chain) if lo is None
          else K.sturm_var_at(chain, Fraction(lo).numerator, Fraction(lo).denominator))
    vb = (K.sturm_var_pos_inf(chain) if hi is None
          else K.sturm_var_at(chain, Fraction(hi).numerator, Fraction(hi).denominator))
    return va - vb


def isolate_real_roots(w):
    """Disjoint isolating intervals for every real root of squarefree w,
    sorted ascending."""
    if not w:
        raise PreconditionError("cannot isolate roots of the zero polynomial")
    if not is_squarefree(w):
        raise PreconditionError("isolation requires a squarefree polynomial")
    zz = w.primitive_integer_coeffs()
    if len(zz) == 1:
        return []
    wm = w.monic()
    chain = K.zz_sturm_chain(zz)

    def var_at(x):
        return K.sturm_var_at(chain, x.numerator, x.denominator)

    B = cauchy_root_bound(w)
    lo, hi = Fraction(-B), Fraction(B)
    total = var_at(lo) - var_at(hi)
    out = []
    stack = [(lo, var_at(lo), hi, var_at(hi), total)]
    while stack:
        a, va, b, vb, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            out.append(AlgebraicNumber(wm, a, b, _zz=zz))
            continue
        m = (a + b) / 2
        if _sign_at_rational(zz, m) == 0:
            delta = (b - a) / 4
            while (_sign_at_rational(zz, m - delta) == 0
                   or _sign_at_rational(zz, m + delta) == 0
                   or var_at(m - delta) - var_at(m + delta) != 1):
                delta /= 2
            out.append(AlgebraicNumber(wm, m - delta, m + delta, _zz=zz))
            vl, vr = var_at(m - delta), var_at(m + delta)
            stack.append((a, va, m - delta, vl, va - vl))
            stack.append((m + delta, vr, b, vb, vr - vb))
        else:
            vm = var_at(m)
            stack.append((a, va, m, vm, va - vm))
            stack.append((m, vm, b, vb, vm - vb))
    out.sort(key=lambda r: r.lo)
    return out


def refine(a, width):
    """Same root, interval width at most ``width`` (pure: returns a copy)."""
    return a.copy().refine_to(width)


def interval_eval(g, lo, hi):
    """Interval-arithmetic enclosure of g over [lo, hi] (Horner)."""
    vlo = vhi = Fraction(0)
    for c in reversed(g.coeffs):
        ps = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
        vlo, vhi = min(ps) + c, max(ps) + c
    return vlo, vhi


def sign_at(g, a):
    """Exact sign of g at the algebraic number a.

    Zero test first: g vanishes at a exactly when gcd(defpoly, g) has a root
    inside the isolating interval.  Otherwise the interval is bisected until
    interval evaluation of g has one sign."""
    if not g:
        return 0
    gzz = g.primitive_integer_coeffs()
    if len(gzz) > 1:
        d = K.zz_gcd(a._zz, gzz)
        if len(d) > 1 and sturm_root_count(UPoly(d), a.lo, a.hi) > 0:
            return 0
    elif len(gzz) == 1:
        return 1 if g.coeffs[0] > 0 else -1
    work = a.copy()
    while True:
        vlo, vhi = interval_eval(g, work.lo, work.hi)
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1
        work._bisect_once()
