"""Buchberger's algorithm, reduced lex bases, quotient-ring linear algebra
and radicals of zero-dimensional ideals.

All basis computation runs fraction-free over ZZ through the kernel layer;
rational coefficients only reappear at the API boundary, where generators are
normalized monic.
"""

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from . import _kernels as K
from .arith import MPoly, UPoly
from .errors import DimensionError, PositiveDimensionalError


@dataclass(frozen=True)
class MonomialOrder:
    """Lexicographic order given by a variable ranking (position ``r`` of
    ``ranking`` holds the index of the rank-``r`` variable; default ranking is
    x1 < x2 < ... < xn)."""

    kind: str = "lex"
    ranking: tuple = None

    def key_fn(self, nvars):
        if self.kind != "lex":
            raise ValueError(f"unsupported order {self.kind!r}")
        if self.ranking is None:
            return lambda e: tuple(reversed(e))
        ranks = list(self.ranking)
        if sorted(ranks) != list(range(nvars)):
            raise DimensionError("ranking is not a permutation of the variables")
        order = list(reversed(ranks))
        return lambda e: tuple(e[i] for i in order)

    def unkey_fn(self, nvars):
        key_of = self.key_fn(nvars)
        positions = [0] * nvars
        probe = list(range(nvars))
        for spot, var in enumerate(key_of(tuple(probe))):
            positions[var] = spot
        return lambda k: tuple(k[positions[i]] for i in range(nvars))


LEX = MonomialOrder()


def _to_keypoly(f, key_of):
    """MPoly -> primitive integer key-dict with positive leading coefficient."""
    if not f.terms:
        return {}
    den = lcm(*[c.denominator for c in f.terms.values()])
    d = {key_of(e): int(c * den) for e, c in f.terms.items()}
    g = 0
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        d = {k: v // g for k, v in d.items()}
    if d[max(d)] < 0:
        d = {k: -v for k, v in d.items()}
    return d


def _from_keypoly(d, nvars, unkey):
    """Integer key-dict -> monic MPoly."""
    if not d:
        return MPoly.zero(nvars)
    lc = d[max(d)]
    return MPoly(nvars, {unkey(k): Fraction(v, lc) for k, v in d.items()})


def _reducer_form(polys):
    out = []
    for d in polys:
        lm = max(d)
        tail = tuple((k, c) for k, c in d.items() if k != lm)
        out.append((lm, d[lm], tail))
    return out


def _normalize(d):
    g = K.mp_content(d)
    if g > 1:
        d = {k: v // g for k, v in d.items()}
    if d[max(d)] < 0:
        d = {k: -v for k, v in d.items()}
    return d


def _spoly(f, lmf, g, lmg):
    l = K.key_lcm(lmf, lmg)
    cf, cg = f[lmf], g[lmg]
    h = gcd(cf, cg)
    mf, mg = cg // h, cf // h
    sf = K.key_sub(l, lmf)
    sg = K.key_sub(l, lmg)
    out = {}
    for k, c in f.items():
        out[K.key_add(k, sf)] = c * mf
    for k, c in g.items():
        kk = K.key_add(k, sg)
        v = out.get(kk, 0) - c * mg
        if v:
            out[kk] = v
        elif kk in out:
            del out[kk]
    return out


def _buchberger_keys(gens):
    """Reduced Groebner basis of integer key-dict generators.

    Normal selection strategy (minimal lcm, by total degree then key) with the
    product and chain criteria for pair elimination."""
    basis = []
    lms = []
    reducers = []

    def nf(p):
        rem, _ = K.mp_nf(p, reducers)
        return rem

    pending = set()
    heap = []

    def push_pairs(j):
        lmj = lms[j]
        for i in range(j):
            l = K.key_lcm(lms[i], lmj)
            if l == K.key_add(lms[i], lmj):
                continue  # product criterion: coprime leading monomials
            heapq.heappush(heap, (sum(l), l, i, j))
            pending.add((i, j))

    def add(p):
        p = _normalize(p)
        basis.append(p)
        lms.append(max(p))
        reducers.append((lms[-1], p[lms[-1]],
                         tuple((k, c) for k, c in p.items() if k != lms[-1])))
        push_pairs(len(basis) - 1)

    for g in sorted(gens, key=max):
        r = nf(g)
        if r:
            add(r)

    while heap:
        _, l, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if K.key_divides(lms[k], l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = nf(_spoly(basis[i], lms[i], basis[j], lms[j]))
        if r:
            add(r)

    # minimalize: drop generators whose leading monomial another one divides
    keep = []
    for i in sorted(range(len(basis)), key=lambda i: lms[i]):
        if not any(K.key_divides(lms[j], lms[i]) for j in keep):
            keep.append(i)
    # tail-reduce each survivor against the others
    reduced = []
    for i in keep:
        others = _reducer_form([basis[j] for j in keep if j != i])
        rem, _ = K.mp_nf(basis[i], others)
        reduced.append(_normalize(rem))
    reduced.sort(key=max)
    return reduced


@dataclass(frozen=True)
class ReducedGB:
    """Reduced Groebner basis: monic generators sorted by leading monomial."""

    generators: tuple
    order: MonomialOrder
    nvars: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def is_trivial(self):
        """True for the unit ideal (basis [1])."""
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def key_fn(self):
        return self.order.key_fn(self.nvars)

    def leading_keys(self):
        if "lks" not in self._cache:
            key_of = self.key_fn()
            self._cache["lks"] = tuple(max(map(key_of, g.terms))
                                       for g in self.generators)
        return self._cache["lks"]

    def _reducers(self):
        if "red" not in self._cache:
            key_of = self.key_fn()
            self._cache["red"] = _reducer_form(
                [_to_keypoly(g, key_of) for g in self.generators])
        return self._cache["red"]

    def leading_monomials(self):
        unkey = self.order.unkey_fn(self.nvars)
        return [unkey(k) for k in self.leading_keys()]


def buchberger(gens, order=LEX):
    """Unique reduced Groebner basis of the ideal the generators span."""
    gens = [g for g in gens if g]
    if not gens:
        return ReducedGB((), order, 0 if not gens else gens[0].nvars)
    nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise DimensionError("generators disagree on the variable count")
    key_of = order.key_fn(nvars)
    unkey = order.unkey_fn(nvars)
    out = _buchberger_keys([_to_keypoly(g, key_of) for g in gens])
    basis = tuple(_from_keypoly(d, nvars, unkey) for d in out)
    return ReducedGB(basis, order, nvars)


def normal_form(p, G):
    """Remainder of p modulo G; zero exactly when p lies in the ideal."""
    if G.nvars and p.nvars != G.nvars:
        raise DimensionError("polynomial and basis disagree on variables")
    if not G.generators:
        return p
    if not p.terms:
        return p
    key_of = G.key_fn()
    unkey = G.order.unkey_fn(G.nvars)
    den = lcm(*[c.denominator for c in p.terms.values()])
    d = {key_of(e): int(c * den) for e, c in p.terms.items()}
    rem, mult = K.mp_nf(d, G._reducers())
    scale = Fraction(1, den * mult)
    return MPoly(G.nvars, {unkey(k): scale * v for k, v in rem.items()})


def is_zero_dimensional(G):
    """Finiteness test: every variable shows up as a pure power among the
    leading monomials (the unit ideal counts; the zero ideal does not)."""
    if not G.generators:
        return False
    if G.is_trivial:
        return True
    seen = [False] * G.nvars
    for lm in G.leading_monomials():
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            seen[nz[0]] = True
    return all(seen)


def quotient_basis(G):
    """Monomials under the staircase (exponent tuples, sorted by the order)."""
    if not is_zero_dimensional(G):
        raise PositiveDimensionalError(
            "quotient basis is infinite: the ideal is not zero-dimensional")
    if G.is_trivial:
        return []
    lms = G.leading_monomials()
    caps = [None] * G.nvars
    for lm in lms:
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            i = nz[0]
            if caps[i] is None or lm[i] < caps[i]:
                caps[i] = lm[i]
    out = []
    stack = [(0, [])]
    while stack:
        i, prefix = stack.pop()
        if i == G.nvars:
            e = tuple(prefix)
            if not any(K.key_divides(lm, e) for lm in lms):
                out.append(e)
            continue
        for k in range(caps[i]):
            stack.append((i + 1, prefix + [k]))
    key_of = G.key_fn()
    out.sort(key=key_of)
    return out


def minimal_polynomial(G, var):
    """Monic least-degree univariate m with m(x_var) in the ideal.

    Linear algebra on the normal forms of successive powers of ``x_var`` over
    the quotient basis.  ``var`` is a 0-based index (0 is x1)."""
    qb = quotient_basis(G)
    if not qb:
        return UPoly.one()  # unit ideal: 1 vanishes on the empty variety
    delta = len(qb)
    x = MPoly.variable(var, G.nvars)
    # pivots: monomial -> (vector, combination)  with vector[pivot] == 1
    pivots = {}
    power = MPoly.constant(1, G.nvars)
    power_nf = normal_form(power, G)
    for k in range(delta + 1):
        vec = dict(power_nf.terms)
        comb = [Fraction(0)] * (k + 1)
        comb[k] = Fraction(1)
        while vec:
            e = max(vec, key=lambda m: tuple(reversed(m)))
            hit = pivots.get(e)
            if hit is None:
                c = vec[e]
                nvec = {m: v / c for m, v in vec.items()}
                ncomb = [v / c for v in comb]
                pivots[e] = (nvec, ncomb)
                break
            c = vec[e]
            pvec, pcomb = hit
            for m, v in pvec.items():
                nv = vec.get(m, Fraction(0)) - c * v
                if nv:
                    vec[m] = nv
                elif m in vec:
                    del vec[m]
            if len(pcomb) > len(comb):
                comb.extend([Fraction(0)] * (len(pcomb) - len(comb)))
            for i, v in enumerate(pcomb):
                comb[i] -= c * v
        else:
            return UPoly(comb).monic()
        power_nf = normal_form(power_nf * x, G)
    raise AssertionError("no dependency within the quotient dimension")


def radical_zero_dim(G):
    """Radical of a zero-dimensional ideal (Seidenberg): adjoin the squarefree
    part of every per-variable minimal polynomial, then recompute the basis."""
    if not is_zero_dimensional(G):
        raise PositiveDimensionalError(
            "radical construction requires a zero-dimensional ideal")
    if G.is_trivial:
        return G
    from .realroots import squarefree_part

    extra = []
    for i in range(G.nvars):
        m = minimal_polynomial(G, i)
        g = squarefree_part(m)
        if g.degree() < m.degree():
            extra.append(MPoly(G.nvars,
                               {_exp_single(i, k, G.nvars): c
                                for k, c in enumerate(g.coeffs) if c}))
    if not extra:
        return G
    return buchberger(list(G.generators) + extra, G.order)


def _exp_single(i, k, nvars):
    e = [0] * nvars
    e[i] = k
    return tuple(e)
