"""Hot computational kernels, pure-Python backend.

The compiled twin ``polyloc._kernels._core`` mirrors this module function by
function; ``polyloc._kernels`` picks one at import time.  Everything works on
plain Python data so the two backends are interchangeable:

* univariate polynomials over ZZ: dense ``list[int]`` of coefficients in
  ascending power order, no trailing zeros, ``[]`` is the zero polynomial;
* multivariate polynomials over ZZ: ``dict`` mapping exponent keys to nonzero
  ints.  Keys are tuples pre-arranged by the caller so that native tuple
  comparison realizes the monomial order (larger key = larger monomial).
"""

from math import gcd

# ---------------------------------------------------------------------------
# dense univariate integer polynomials


def zz_trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def zz_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return zz_trim(out)


def zz_sub(a, b):
    out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i, x in enumerate(b):
        out[i] -= x
    return zz_trim(out)


def zz_neg(a):
    return [-x for x in a]


def zz_scale(a, k):
    if not k:
        return []
    return [x * k for x in a]


def zz_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return zz_trim(out)


def zz_diff(a):
    return [i * a[i] for i in range(1, len(a))]


def zz_content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def zz_primitive(a):
    """Strip the positive content; the sign of the poly is preserved."""
    if not a:
        return 0, []
    g = zz_content(a)
    if g == 1:
        return 1, list(a)
    return g, [x // g for x in a]


def zz_eval_scaled(a, num, den):
    """den**deg(a) * a(num/den) as an exact int; den > 0 keeps the sign."""
    if not a:
        return 0
    acc = a[-1]
    dp = 1
    for k in range(len(a) - 2, -1, -1):
        dp *= den
        acc = acc * num + a[k] * dp
    return acc


def zz_srem(a, b):
    """Scaled remainder: returns (r, s) with r = lc(b)**N * (a mod b) for some
    N >= 0 and s = sign(lc(b)**N).  b must be nonzero."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    zz_trim(r)
    nmul = 0
    while len(r) - 1 >= db and r:
        lead = r.pop()
        off = len(r) - db
        nmul += 1
        for i in range(len(r)):
            r[i] *= lb
        for i in range(db):
            r[off + i] -= lead * b[i]
        zz_trim(r)
    s = -1 if (lb < 0 and nmul % 2) else 1
    return r, s


def zz_gcd(a, b):
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    _, a = zz_primitive(a)
    _, b = zz_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r, _ = zz_srem(a, b)
        _, r = zz_primitive(r)
        a, b = b, r
    if a and a[-1] < 0:
        a = zz_neg(a)
    return a


def zz_div_exact(a, b):
    """Quotient of an exact division a = q*b over ZZ (raises if inexact)."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        raise ArithmeticError("inexact polynomial division")
    lb = b[-1]
    rc = list(a)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = rc[db + k]
        if c:
            if c % lb:
                raise ArithmeticError("inexact polynomial division")
            qc = c // lb
            q[k] = qc
            for i in range(db + 1):
                rc[k + i] -= qc * b[i]
    if any(rc):
        raise ArithmeticError("inexact polynomial division")
    return zz_trim(q)


def zz_sturm_chain(p):
    """Sturm chain of p: each member is a positive multiple of the classical
    remainder-sequence member, so sign variation counts are unchanged."""
    _, a = zz_primitive(p)
    chain = [a]
    d = zz_diff(a)
    if not d:
        return chain
    _, d = zz_primitive(d)
    chain.append(d)
    while True:
        r, s = zz_srem(chain[-2], chain[-1])
        if not r:
            return chain
        if s > 0:
            r = zz_neg(r)
        _, r = zz_primitive(r)
        chain.append(r)


def zz_sign_variations(vals):
    n = 0
    prev = 0
    for v in vals:
        if v:
            s = 1 if v > 0 else -1
            if prev and s != prev:
                n += 1
            prev = s
    return n


def sturm_var_at(chain, num, den):
    return zz_sign_variations([zz_eval_scaled(p, num, den) for p in chain])


def sturm_var_neg_inf(chain):
    vals = []
    for p in chain:
        v = p[-1]
        if (len(p) - 1) % 2:
            v = -v
        vals.append(v)
    return zz_sign_variations(vals)


def sturm_var_pos_inf(chain):
    return zz_sign_variations([p[-1] for p in chain])


# ---------------------------------------------------------------------------
# sparse multivariate integer polynomials (exponent-key dicts)


def key_divides(d, k):
    for a, b in zip(d, k):
        if a > b:
            return False
    return True


def key_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def key_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def key_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mp_content(terms):
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def mp_mul(a, b):
    out = {}
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            c = out.get(k, 0) + ca * cb
            if c:
                out[k] = c
            elif k in out:
                del out[k]
    return out


def mp_nf(p, reducers):
    """Fraction-free normal form of an integer key-dict polynomial.

    ``reducers`` is a sequence of ``(lmkey, lc, tail)`` triples with ``lc > 0``
    and ``tail`` a tuple of ``(key, coeff)`` pairs for the non-leading terms.
    The first reducer (in the given order) whose leading key divides the
    current leading key is applied, so the caller's ordering fixes the result.

    Returns ``(rem, mult)`` with ``rem / mult`` the exact remainder of
    ``p / 1`` modulo the reducers; ``mult`` is a positive integer.
    """
    work = dict(p)
    rem = {}
    mult = 1
    scalings = 0
    while work:
        lm = max(work)
        c = work.pop(lm)
        hit = False
        for glm, gc, gtail in reducers:
            ok = True
            for a, b in zip(glm, lm):
                if a > b:
                    ok = False
                    break
            if not ok:
                continue
            hit = True
            shift = tuple(x - y for x, y in zip(lm, glm))
            if gc != 1:
                for k in work:
                    work[k] *= gc
                for k in rem:
                    rem[k] *= gc
                mult *= gc
                scalings += 1
            for k, gcoef in gtail:
                kk = tuple(x + y for x, y in zip(k, shift))
                v = work.get(kk, 0) - c * gcoef
                if v:
                    work[kk] = v
                elif kk in work:
                    del work[kk]
            break
        if not hit:
            rem[lm] = c
        if scalings >= 16:
            scalings = 0
            g = mult
            for v in work.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g != 1:
                for v in rem.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
            if g > 1:
                mult //= g
                for k in work:
                    work[k] //= g
                for k in rem:
                    rem[k] //= g
    return rem, mult
