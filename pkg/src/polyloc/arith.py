"""Exact polynomial arithmetic over the rationals.

Sparse multivariate polynomials (:class:`MPoly`), dense univariate ones
(:class:`UPoly`), small exact matrices (:class:`QMatrix`), the calculus
operators the solvers need, and the text syntax shared with the CLI.

Coefficients are :class:`fractions.Fraction` throughout: always in lowest
terms with a positive denominator, so every value has one canonical form.
"""

from fractions import Fraction
from math import gcd, lcm

from . import _kernels as K
from .errors import DimensionError, ParseError

NEG_INF = float("-inf")  # degree of the zero polynomial; comparisons stay total


def _fr(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


class MPoly:
    """Sparse multivariate polynomial: {exponent tuple: nonzero Fraction}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = _fr(c)
                if len(e) != nvars:
                    raise DimensionError(
                        f"monomial {e} has {len(e)} exponents, expected {nvars}")
                if c:
                    clean[tuple(e)] = c
        self.nvars = nvars
        self.terms = clean

    # -- constructors

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def constant(cls, c, nvars):
        c = _fr(c)
        if not c:
            return cls(nvars, {})
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i, nvars):
        if not 0 <= i < nvars:
            raise DimensionError(f"variable index {i} out of range for {nvars} vars")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    # -- basic queries

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def variables_used(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return used

    # -- ring operations

    def _check(self, other):
        if self.nvars != other.nvars:
            raise DimensionError(
                f"operands have {self.nvars} and {other.nvars} variables")

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MPoly.constant(other, self.nvars).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self.nvars)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Fraction(0)) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MPoly.__new__(MPoly)
        r.nvars = self.nvars
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e, Fraction(0)) + ca * cb
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    __rmul__ = __mul__

    def scale(self, c):
        c = _fr(c)
        r = MPoly.__new__(MPoly)
        r.nvars = self.nvars
        r.terms = {e: c * v for e, v in self.terms.items()} if c else {}
        return r

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- calculus and evaluation

    def diff(self, i):
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = list(e)
                e2[i] = k - 1
                e2 = tuple(e2)
                v = out.get(e2, Fraction(0)) + c * k
                if v:
                    out[e2] = v
                elif e2 in out:
                    del out[e2]
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    def eval(self, point):
        if len(point) != self.nvars:
            raise DimensionError("evaluation point has wrong length")
        point = [_fr(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def eval_float(self, point):
        total = 0.0
        for e, c in self.terms.items():
            v = float(c)
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def exact_div(self, other):
        """Quotient of an exact division (raises if the division is inexact)."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.terms)
        key = _grlex_key
        lead = max(other.terms, key=key)
        lc = other.terms[lead]
        out = {}
        while rem:
            e = max(rem, key=key)
            q = tuple(a - b for a, b in zip(e, lead))
            if any(x < 0 for x in q):
                raise ArithmeticError("inexact polynomial division")
            cq = rem[e] / lc
            out[q] = cq
            for eo, co in other.terms.items():
                ee = tuple(a + b for a, b in zip(q, eo))
                v = rem.get(ee, Fraction(0)) - cq * co
                if v:
                    rem[ee] = v
                elif ee in rem:
                    del rem[ee]
        r = MPoly.__new__(MPoly)
        r.nvars, r.terms = self.nvars, out
        return r

    def embed(self, nvars, offset=0):
        """Same polynomial viewed in a larger variable space."""
        if offset < 0 or self.nvars + offset > nvars:
            raise DimensionError("embedding does not fit")
        pad = (0,) * (nvars - self.nvars - offset)
        pre = (0,) * offset
        r = MPoly.__new__(MPoly)
        r.nvars = nvars
        r.terms = {pre + e + pad: c for e, c in self.terms.items()}
        return r

    def __repr__(self):
        return f"MPoly({self.nvars}, {format_mpoly(self)!r})"


def _grlex_key(e):
    return (sum(e), e)


def gradient(f):
    """All first partial derivatives of f, as a list."""
    return [f.diff(i) for i in range(f.nvars)]


def hessian(f, var_indices=None):
    """Matrix of second partials of f over the selected variables.

    ``var_indices`` defaults to all variables; passing a subrange supports
    Hessians with respect to the primal block only (multiplier columns
    excluded)."""
    idx = list(range(f.nvars)) if var_indices is None else list(var_indices)
    n = len(idx)
    firsts = [f.diff(i) for i in idx]
    entries = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            d = firsts[a].diff(idx[b])
            entries[a][b] = d
            entries[b][a] = d
    return QMatrix(n, n, [entries[a][b] for a in range(n) for b in range(n)])


def substitute_linear(f, M):
    """g with g(y) = f(M y) for a square rational matrix M of size nvars."""
    n = f.nvars
    if M.rows != n or M.cols != n:
        raise DimensionError("matrix size does not match the variable count")
    lin = []
    for i in range(n):
        row = {}
        for j in range(n):
            c = _fr(M[i, j])
            if c:
                e = [0] * n
                e[j] = 1
                row[tuple(e)] = c
        lin.append(MPoly(n, row))
    maxexp = [0] * n
    for e in f.terms:
        for i, k in enumerate(e):
            if k > maxexp[i]:
                maxexp[i] = k
    pows = []
    for i in range(n):
        pi = [MPoly.constant(1, n)]
        for _ in range(maxexp[i]):
            pi.append(pi[-1] * lin[i])
        pows.append(pi)
    total = MPoly.zero(n)
    for e, c in f.terms.items():
        term = MPoly.constant(c, n)
        for i, k in enumerate(e):
            if k:
                term = term * pows[i][k]
        total = total + term
    return total


# ---------------------------------------------------------------------------
# dense univariate polynomials


class UPoly:
    """Dense univariate polynomial; coeffs[k] multiplies t**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_fr(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def t(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def scale(self, c):
        c = _fr(c)
        if not c:
            return UPoly(())
        return UPoly([c * x for x in self.coeffs])

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = UPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def monic(self):
        if not self.coeffs:
            return self
        c = self.coeffs[-1]
        if c == 1:
            return self
        return UPoly([x / c for x in self.coeffs])

    def derivative(self):
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        x = _fr(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def shift_compose(self, other, modulus=None):
        """self(other(t)), optionally reduced modulo ``modulus`` throughout."""
        acc = UPoly(())
        for c in reversed(self.coeffs):
            acc = acc * other + c
            if modulus is not None:
                acc = acc % modulus
        return acc

    def __mod__(self, other):
        return univ_divmod(self, other)[1]

    def __floordiv__(self, other):
        return univ_divmod(self, other)[0]

    def exact_div(self, other):
        q, r = univ_divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def primitive_integer_coeffs(self):
        """Integer-primitive rescaling with a positive leading coefficient.

        Returns the coefficient list of the unique integer polynomial that is
        a positive rational multiple of self, has coprime coefficients and a
        positive leading one."""
        if not self.coeffs:
            return []
        den = lcm(*[c.denominator for c in self.coeffs])
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return ints

    def __repr__(self):
        return f"UPoly({format_upoly(self)!r})"


def univ_divmod(p, w):
    """Exact division with remainder: p = q*w + r, deg r < deg w."""
    if not w.coeffs:
        raise ZeroDivisionError("division by zero polynomial")
    dw = len(w.coeffs) - 1
    rem = list(p.coeffs)
    if len(rem) - 1 < dw:
        return UPoly(()), p
    lw = w.coeffs[-1]
    q = [Fraction(0)] * (len(rem) - dw)
    for k in range(len(rem) - 1 - dw, -1, -1):
        c = rem[dw + k]
        if c:
            cq = c / lw
            q[k] = cq
            for i in range(dw + 1):
                rem[k + i] -= cq * w.coeffs[i]
    return UPoly(q), UPoly(rem)


def upoly_gcd(a, b):
    """Monic gcd over Q (integer primitive-PRS kernel underneath)."""
    g = K.zz_gcd(a.primitive_integer_coeffs(), b.primitive_integer_coeffs())
    return UPoly(g).monic()


def compose_mod(f, coords, w):
    """f(coords[0](t), ..., coords[n-1](t)) reduced modulo w.

    Reduction is applied after every product, so intermediate degrees stay
    below deg w."""
    if len(coords) != f.nvars:
        raise DimensionError("coordinate vector has wrong length")
    maxexp = [0] * f.nvars
    for e in f.terms:
        for i, k in enumerate(e):
            if k > maxexp[i]:
                maxexp[i] = k
    pows = []
    for i in range(f.nvars):
        pi = [UPoly.one()]
        for _ in range(maxexp[i]):
            pi.append((pi[-1] * coords[i]) % w)
        pows.append(pi)
    total = UPoly(())
    for e, c in f.terms.items():
        term = UPoly((c,))
        for i, k in enumerate(e):
            if k:
                term = (term * pows[i][k]) % w
        total = total + term
    return total % w


# ---------------------------------------------------------------------------
# small exact matrices


class QMatrix:
    """Row-major matrix over an exact ring (Fraction, MPoly or UPoly)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise DimensionError("entry list does not match the shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, n, one=None, zero=None):
        one = Fraction(1) if one is None else one
        zero = Fraction(0) if zero is None else zero
        return cls(n, n, [one if i == j else zero
                          for i in range(n) for j in range(n)])

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            self.entries == other.entries

    def transpose(self):
        return QMatrix(self.cols, self.rows,
                       [self[i, j] for j in range(self.cols)
                        for i in range(self.rows)])

    def matmul(self, other):
        if self.cols != other.rows:
            raise DimensionError("matrix shapes do not chain")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = self[i, 0] * other[0, j]
                for k in range(1, self.cols):
                    acc = acc + self[i, k] * other[k, j]
                out.append(acc)
        return QMatrix(self.rows, other.cols, out)

    def submatrix(self, row_idx, col_idx):
        return QMatrix(len(row_idx), len(col_idx),
                       [self[i, j] for i in row_idx for j in col_idx])

    def map(self, fn):
        return QMatrix(self.rows, self.cols, [fn(x) for x in self.entries])

    def __repr__(self):
        return f"QMatrix({self.rows}x{self.cols})"


def _ring_div(a, b):
    if isinstance(a, (MPoly, UPoly)):
        return a.exact_div(b)
    return a / b


def determinant(M):
    """Exact determinant: cofactor expansion for n <= 4, fraction-free
    Bareiss elimination (with row pivoting) above that."""
    if M.rows != M.cols:
        raise DimensionError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    if n <= 4:
        return _det_cofactor(M.to_rows())
    return _det_bareiss(M.to_rows())


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        minor = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
        term = a * _det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0] - rows[0][0]  # a zero of the right ring
    return total


def _det_bareiss(rows):
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return rows[0][0] - rows[0][0]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else _ring_div(num, prev)
            m[i][k] = None
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


# ---------------------------------------------------------------------------
# text syntax: variables x1..xn / z1..zm / lambda1..lambdam / t,
# operators + - * ^, integer, p/q and decimal literals, no implicit products


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    line, col = 1, 1
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/":
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError("expected denominator digits", line, col)
                val = Fraction(int(text[i:j]), int(text[j + 1:k]))
                j = k
            elif j < n and (text[j] == "." or text[j] in "eE"):
                k = j
                if text[k] == ".":
                    k += 1
                    while k < n and text[k].isdigit():
                        k += 1
                if k < n and text[k] in "eE":
                    k += 1
                    if k < n and text[k] in "+-":
                        k += 1
                    if k >= n or not text[k].isdigit():
                        raise ParseError("malformed exponent", line, col)
                    while k < n and text[k].isdigit():
                        k += 1
                val = Fraction(text[i:k])
                j = k
            else:
                val = Fraction(int(text[i:j]))
            toks.append(("num", val, line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in "+-*^()":
            toks.append((ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(("end", None, line, col))
    return toks


class _Parser:
    def __init__(self, toks, names, nvars):
        self.toks = toks
        self.pos = 0
        self.index = {name: i for i, name in enumerate(names)}
        self.nvars = nvars

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], tok[3])

    def parse(self):
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                p = p * self.factor()
            elif kind in ("num", "name", "("):
                self.error("implicit multiplication is not allowed; use '*'")
            else:
                return p

    def factor(self):
        sign = 1
        while self.peek()[0] in "+-":
            if self.take()[0] == "-":
                sign = -sign
        p = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num" or tok[1].denominator != 1 or tok[1] < 0:
                self.error("exponent must be a non-negative integer", tok)
            p = p ** int(tok[1])
        return p if sign > 0 else -p

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            return MPoly.constant(tok[1], self.nvars)
        if tok[0] == "name":
            idx = self.index.get(tok[1])
            if idx is None:
                self.error(f"unknown variable {tok[1]!r}", tok)
            return MPoly.variable(idx, self.nvars)
        if tok[0] == "(":
            p = self.expr()
            closing = self.take()
            if closing[0] != ")":
                self.error("expected ')'", closing)
            return p
        self.error("expected a number, variable or '('", tok)


def parse_mpoly(text, names):
    """Parse ``text`` into an MPoly over the given variable names."""
    return _Parser(_tokenize(text), list(names), len(names)).parse()


def parse_upoly(text, var="t"):
    p = parse_mpoly(text, [var])
    out = [Fraction(0)] * (int(p.degree()) + 1 if p else 0)
    for e, c in p.terms.items():
        out[e[0]] = c
    return UPoly(out)


def _fmt_coeff(c):
    return str(c)


def format_mpoly(f, names=None):
    """Canonical text form: graded-then-lex descending term order."""
    if not f.terms:
        return "0"
    names = names or [f"x{i + 1}" for i in range(f.nvars)]
    items = sorted(f.terms.items(),
                   key=lambda ec: (sum(ec[0]), tuple(reversed(ec[0]))),
                   reverse=True)
    parts = []
    for e, c in items:
        factors = []
        for i, k in enumerate(e):
            if k == 1:
                factors.append(names[i])
            elif k:
                factors.append(f"{names[i]}^{k}")
        mag = abs(c)
        if factors:
            body = "*".join(factors)
            if mag != 1:
                body = f"{_fmt_coeff(mag)}*{body}"
        else:
            body = _fmt_coeff(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def format_upoly(p, var="t"):
    if not p.coeffs:
        return "0"
    f = MPoly(1, {(k,): c for k, c in enumerate(p.coeffs)})
    return format_mpoly(f, [var])
