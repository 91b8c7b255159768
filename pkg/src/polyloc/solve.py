"""End-to-end minimizer enumeration.

Four drivers share one skeleton: univariate representation of the critical
system, exact real-root isolation of the eliminant, then per-root exact
certification.  Local drivers apply the second-order test; global drivers
instead compare the objective's values across the critical roots exactly,
via the characteristic polynomial of the multiplication-by-r operator on
Q[t]/(w).  Inequalities enter through squared slack variables, and a linear
perturbation restores zero-dimensionality for degenerate instances.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (MPoly, UPoly, QMatrix, gradient, hessian, determinant,
                    compose_mod)
from .certify import (DIRECT, hessian_curve, jacobian_curve, is_pd_at,
                      is_pd_on_nullspace_at, constraint_rank_permutation,
                      det_nonvanishing_on_critical)
from .errors import (DimensionError, EmptyCriticalSetError,
                     InternalInvariantError, PositiveDimensionalError,
                     PreconditionError)
from .realroots import (AlgebraicNumber, interval_eval, isolate_real_roots,
                        sign_at, squarefree_part)
from .shape import separating_representation

OK = "ok"
PRECONDITION_FAILED = "precondition_failed"
POSITIVE_DIMENSIONAL = "positive_dimensional"


# ---------------------------------------------------------------------------
# problem containers


@dataclass(frozen=True)
class Problem:
    objective: MPoly
    equalities: tuple = ()
    inequalities: tuple = ()
    nvars: int = None

    def __post_init__(self):
        n = self.objective.nvars
        object.__setattr__(self, "equalities", tuple(self.equalities))
        object.__setattr__(self, "inequalities", tuple(self.inequalities))
        object.__setattr__(self, "nvars", n)
        for p in self.equalities + self.inequalities:
            if p.nvars != n:
                raise DimensionError("constraints disagree with the objective "
                                     "on the variable count")
        if len(self.equalities) >= n:
            raise DimensionError(
                f"{len(self.equalities)} equality constraints in {n} variables: "
                "the Lagrangian system is not well-posed (need m < n)")


@dataclass(frozen=True)
class Lagrangian:
    """L(x, lambda) = f + sum_j lambda_j h_j, in n + m variables."""

    L: MPoly
    n: int
    m: int


def build_lagrangian(f, h):
    h = tuple(h)
    n, m = f.nvars, len(h)
    if m == 0:
        raise DimensionError("no equality constraints: use the unconstrained "
                             "driver instead")
    if m >= n:
        raise DimensionError(f"m = {m} constraints need m < n = {n} variables")
    N = n + m
    L = f.embed(N)
    for j, hj in enumerate(h):
        L = L + MPoly.variable(n + j, N) * hj.embed(N)
    return Lagrangian(L, n, m)


# ---------------------------------------------------------------------------
# exact value comparison across the roots of w


def _mult_matrix(r, w):
    """Multiplication-by-r operator on Q[t]/(w) in the power basis."""
    d = int(w.degree())
    wc = w.coeffs
    cur = list(r.coeffs) + [Fraction(0)] * (d - len(r.coeffs))
    cols = [cur[:]]
    for _ in range(d - 1):
        nxt = [Fraction(0)] + cur
        top = nxt.pop()
        if top:
            for i in range(d):
                nxt[i] -= top * wc[i]
        cols.append(nxt)
        cur = nxt
    return [[cols[k][i] for k in range(d)] for i in range(d)]


def _charpoly(M):
    """det(s I - M) by the Faddeev-LeVerrier recurrence (exact over Q)."""
    d = len(M)
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    Ak = [row[:] for row in M]
    c = -sum(Ak[i][i] for i in range(d))
    coeffs[d - 1] = c
    for k in range(2, d + 1):
        for i in range(d):
            Ak[i][i] += c
        Ak = [[sum(M[i][l] * Ak[l][j] for l in range(d)) for j in range(d)]
              for i in range(d)]
        c = -sum(Ak[i][i] for i in range(d)) / k
        coeffs[d - k] = c
    return UPoly(coeffs)


def classify_values(poly, roots, w):
    """Identify poly(alpha) for each root exactly.

    Returns (value_roots, assignment): value_roots isolate the distinct real
    numbers poly takes on the critical roots (as roots of the squarefree part
    of char(mult-by-poly)), sorted ascending; assignment[i] indexes the value
    of roots[i].  Ties get the same index, so exact argmin sets fall out."""
    if not roots:
        return [], []
    poly = poly % w
    g = squarefree_part(_charpoly(_mult_matrix(poly, w)))
    vroots = isolate_real_roots(g)
    assignment = []
    for a in roots:
        work = a.copy()
        while True:
            vlo, vhi = interval_eval(poly, work.lo, work.hi)
            cands = [k for k, vr in enumerate(vroots)
                     if not (vhi <= vr.lo or vr.hi <= vlo)]
            if len(cands) == 1:
                assignment.append(cands[0])
                break
            work._bisect_once()
    return vroots, assignment


# ---------------------------------------------------------------------------
# report types


@dataclass
class Diagnostics:
    j: int = None
    deg_w: int = None
    n_real_roots: int = None
    quotient_dim: int = None
    zero_dimensional: bool = None
    det_condition: bool = None
    det_signs: list = None
    det_values: list = None
    constraint_rank_ok: list = None
    pd_flags: list = None
    residual_norms: list = None
    notes: list = field(default_factory=list)
    timings_ms: dict = field(default_factory=dict)


@dataclass
class ValueInfo:
    """Exact critical value: float rendering plus exact carrier."""

    value: float
    exact_rational: Fraction = None
    defpoly: UPoly = None
    interval: tuple = None
    attained_asserted: bool = False

    @property
    def interpretation(self):
        return ("global minimum (attainment asserted)" if self.attained_asserted
                else "minimum over critical values")


class Minimizer:
    """One certified point: exact coordinates as polynomial images of a shared
    algebraic number, float renderings refined to the requested precision."""

    def __init__(self, root, coord_polys, value_poly, digits,
                 multiplier_polys=None):
        self.root = root
        self.coord_polys = tuple(coord_polys)
        self.multiplier_polys = (tuple(multiplier_polys)
                                 if multiplier_polys is not None else None)
        self.value_poly = value_poly
        self.digits = digits
        width = Fraction(1, 10 ** (digits + 2))
        self.coord_intervals = tuple(
            _value_enclosure(p, root, width) for p in self.coord_polys)
        self.coords = tuple(float((lo + hi) / 2) for lo, hi in self.coord_intervals)
        if self.multiplier_polys is not None:
            self.multipliers = tuple(
                float(sum(_value_enclosure(p, root, width)) / 2)
                for p in self.multiplier_polys)
        else:
            self.multipliers = None
        vlo, vhi = _value_enclosure(value_poly, root, width)
        self.value_interval = (vlo, vhi)
        self.value = float((vlo + vhi) / 2)

    def coord_sign(self, k, q):
        """Exact sign of (k-th coordinate - q)."""
        return sign_at(self.coord_polys[k] - Fraction(q), self.root)

    def coords_equal(self, point):
        """Exact test against a rational point."""
        return all(self.coord_sign(k, q) == 0 for k, q in enumerate(point))

    def __repr__(self):
        cs = ", ".join(f"{c:.10g}" for c in self.coords)
        return f"Minimizer(({cs}), f={self.value:.10g})"


def _value_enclosure(poly, root, width):
    while True:
        vlo, vhi = interval_eval(poly, root.lo, root.hi)
        if vhi - vlo <= width:
            return vlo, vhi
        root._bisect_once()


@dataclass
class SolveReport:
    status: str
    mode: str
    minimizers: list = field(default_factory=list)
    rep: object = None
    f_min: ValueInfo = None
    diagnostics: Diagnostics = field(default_factory=Diagnostics)

    @property
    def ok(self):
        return self.status == OK


# ---------------------------------------------------------------------------
# shared pipeline pieces


def _now():
    return time.perf_counter()


def _rep_for(gens, diag):
    t0 = _now()
    rep = separating_representation(gens)
    diag.timings_ms["representation"] = round((_now() - t0) * 1000, 3)
    diag.j = rep.cov.j
    diag.deg_w = int(rep.w.degree())
    diag.quotient_dim = int(rep.w.degree())
    diag.zero_dimensional = True
    return rep


def _roots_for(rep, diag):
    t0 = _now()
    roots = isolate_real_roots(rep.w) if rep.w.degree() >= 1 else []
    diag.timings_ms["isolation"] = round((_now() - t0) * 1000, 3)
    diag.n_real_roots = len(roots)
    return roots


def _det_check(det_mpoly, rep, roots, diag, digits):
    detP = compose_mod(det_mpoly, rep.coordinate_polys(), rep.w)
    signs = [sign_at(detP, a) for a in roots]
    diag.det_signs = signs
    width = Fraction(1, 10 ** (digits + 2))
    diag.det_values = [float(sum(_value_enclosure(detP, a, width)) / 2)
                       for a in roots]
    ok = det_nonvanishing_on_critical(detP, roots)
    diag.det_condition = ok
    return ok


def _map_roots(fn, roots, threads):
    if threads and threads > 1 and len(roots) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, roots))
    return [fn(a) for a in roots]


def _float_residuals(gens, minimizers):
    norms = []
    for mn in minimizers:
        point = list(mn.coords) + list(mn.multipliers or ())
        norms.append(max((abs(g.eval_float(point)) for g in gens), default=0.0))
    return norms


def _bezout_guard(f, rep):
    d = f.degree()
    if d >= 2 and rep.w.degree() > (int(d) - 1) ** f.nvars:
        raise InternalInvariantError(
            "deg w exceeds the Bezout bound (d-1)^n")


# ---------------------------------------------------------------------------
# unconstrained drivers


def grulom(f, digits=10, hessian_convention=DIRECT, threads=1):
    """All local minimizers of f over R^n.

    Requires a zero-dimensional gradient ideal and a Hessian determinant
    without zeros on the real critical set; both are verified exactly and
    reported."""
    diag = Diagnostics()
    t_all = _now()
    try:
        rep = _rep_for(gradient(f), diag)
    except PositiveDimensionalError as exc:
        diag.zero_dimensional = False
        diag.notes.append(f"{exc}; a linear perturbation (perturb_solve) can "
                          "restore zero-dimensionality")
        return SolveReport(POSITIVE_DIMENSIONAL, "local", diagnostics=diag)
    _bezout_guard(f, rep)
    roots = _roots_for(rep, diag)
    if not _det_check(determinant(hessian(f)), rep, roots, diag, digits):
        diag.notes.append("det(Hessian) vanishes at a real critical point; "
                          "strict second-order classification is unavailable")
        return SolveReport(PRECONDITION_FAILED, "local", rep=rep, diagnostics=diag)
    Hc = hessian_curve(f, rep, convention=hessian_convention)
    t0 = _now()
    flags = _map_roots(lambda a: is_pd_at(Hc, a), roots, threads)
    diag.timings_ms["certification"] = round((_now() - t0) * 1000, 3)
    diag.pd_flags = flags
    r = compose_mod(f, rep.coordinate_polys(), rep.w)
    mins = [Minimizer(a, rep.coordinate_polys(), r, digits)
            for a, good in zip(roots, flags) if good]
    diag.residual_norms = _float_residuals(gradient(f), mins)
    diag.timings_ms["total"] = round((_now() - t_all) * 1000, 3)
    return SolveReport(OK, "local", mins, rep, diagnostics=diag)


def grulom_plus(f, digits=10, assume_attained=False, threads=1):
    """Global minimum and global minimizers of f over R^n, assuming the
    infimum is attained (the caller's assertion; without it the result is
    labeled a minimum over critical values)."""
    diag = Diagnostics()
    t_all = _now()
    try:
        rep = _rep_for(gradient(f), diag)
    except PositiveDimensionalError as exc:
        diag.zero_dimensional = False
        diag.notes.append(str(exc))
        return SolveReport(POSITIVE_DIMENSIONAL, "global", diagnostics=diag)
    _bezout_guard(f, rep)
    roots = _roots_for(rep, diag)
    if not roots:
        raise EmptyCriticalSetError(
            "w has no real roots: the critical set is empty, so the infimum "
            "is not attained")
    r = compose_mod(f, rep.coordinate_polys(), rep.w)
    if r.degree() >= rep.w.degree():
        raise InternalInvariantError("deg r >= deg w after reduction")
    t0 = _now()
    vroots, assign = classify_values(r, roots, rep.w)
    diag.timings_ms["argmin"] = round((_now() - t0) * 1000, 3)
    best = min(assign)
    glo = [Minimizer(a, rep.coordinate_polys(), r, digits)
           for a, k in zip(roots, assign) if k == best]
    fmin = _value_info(vroots[best], digits, assume_attained)
    diag.residual_norms = _float_residuals(gradient(f), glo)
    diag.timings_ms["total"] = round((_now() - t_all) * 1000, 3)
    return SolveReport(OK, "global", glo, rep, f_min=fmin, diagnostics=diag)


def _value_info(vroot, digits, attained):
    width = Fraction(1, 10 ** (digits + 2))
    vroot.refine_to(width)
    q = vroot.as_rational()
    return ValueInfo(value=float(q) if q is not None else float(vroot.mid()),
                     exact_rational=q,
                     defpoly=vroot.defpoly,
                     interval=(vroot.lo, vroot.hi),
                     attained_asserted=attained)


def check_preconditions_unconstrained(f, digits=10):
    """Pure report of the two unconstrained hypotheses: zero-dimensionality
    of the gradient ideal and the Hessian determinant having no zeros on the
    real critical set."""
    diag = Diagnostics()
    try:
        rep = _rep_for(gradient(f), diag)
    except PositiveDimensionalError:
        diag.zero_dimensional = False
        return diag
    roots = _roots_for(rep, diag)
    _det_check(determinant(hessian(f)), rep, roots, diag, digits)
    return diag


# ---------------------------------------------------------------------------
# equality-constrained drivers


def gralom(f, h, digits=10, hessian_convention=DIRECT, threads=1):
    """All local minimizers of f over the real algebraic set {h = 0}.

    The constraint-Jacobian full-rank hypothesis is verified exactly at every
    computed real critical point (not over the whole variety); the Hessian
    determinant condition likewise."""
    h = tuple(h)
    if not h:
        return grulom(f, digits=digits, hessian_convention=hessian_convention,
                      threads=threads)
    lag = build_lagrangian(f, h)
    diag = Diagnostics()
    diag.notes.append("constraint rank verified at computed critical points "
                      "only, not over the whole variety")
    t_all = _now()
    try:
        rep = _rep_for(gradient(lag.L), diag)
    except PositiveDimensionalError as exc:
        diag.zero_dimensional = False
        diag.notes.append(f"{exc}; a linear perturbation (perturb_solve) can "
                          "restore zero-dimensionality")
        return SolveReport(POSITIVE_DIMENSIONAL, "local", diagnostics=diag)
    roots = _roots_for(rep, diag)
    Cc = jacobian_curve(h, rep, convention=hessian_convention)
    rank_ok = [constraint_rank_permutation(Cc, a) is not None for a in roots]
    diag.constraint_rank_ok = rank_ok
    if not all(rank_ok):
        diag.notes.append("constraint Jacobian rank-deficient at a critical "
                          "point: constraint qualification fails there")
        return SolveReport(PRECONDITION_FAILED, "local", rep=rep, diagnostics=diag)
    if not _det_check(determinant(hessian(lag.L, range(lag.n))), rep, roots,
                      diag, digits):
        diag.notes.append("det of the primal Hessian of L vanishes at a real "
                          "critical point")
        return SolveReport(PRECONDITION_FAILED, "local", rep=rep, diagnostics=diag)
    Hc = hessian_curve(lag.L, rep, n_x=lag.n, convention=hessian_convention)
    t0 = _now()
    flags = _map_roots(lambda a: is_pd_on_nullspace_at(Hc, Cc, a), roots, threads)
    diag.timings_ms["certification"] = round((_now() - t0) * 1000, 3)
    diag.pd_flags = flags
    coords = rep.coordinate_polys()
    r = compose_mod(f, coords[:lag.n], rep.w)
    mins = [Minimizer(a, coords[:lag.n], r, digits,
                      multiplier_polys=coords[lag.n:])
            for a, good in zip(roots, flags) if good]
    diag.residual_norms = _float_residuals(gradient(lag.L), mins)
    diag.timings_ms["total"] = round((_now() - t_all) * 1000, 3)
    return SolveReport(OK, "local", mins, rep, diagnostics=diag)


def gralom_plus(f, h, digits=10, assume_attained=False, threads=1):
    """Global minimum of f over {h = 0} (attainment is the caller's
    assertion, as in the unconstrained case)."""
    h = tuple(h)
    if not h:
        return grulom_plus(f, digits=digits, assume_attained=assume_attained,
                           threads=threads)
    lag = build_lagrangian(f, h)
    diag = Diagnostics()
    t_all = _now()
    try:
        rep = _rep_for(gradient(lag.L), diag)
    except PositiveDimensionalError as exc:
        diag.zero_dimensional = False
        diag.notes.append(str(exc))
        return SolveReport(POSITIVE_DIMENSIONAL, "global", diagnostics=diag)
    roots = _roots_for(rep, diag)
    if not roots:
        raise EmptyCriticalSetError(
            "w has no real roots: no critical points on the constraint set")
    Cc = jacobian_curve(h, rep)
    rank_ok = [constraint_rank_permutation(Cc, a) is not None for a in roots]
    diag.constraint_rank_ok = rank_ok
    if not all(rank_ok):
        diag.notes.append("constraint Jacobian rank-deficient at a critical "
                          "point")
        return SolveReport(PRECONDITION_FAILED, "global", rep=rep, diagnostics=diag)
    coords = rep.coordinate_polys()
    r = compose_mod(f, coords[:lag.n], rep.w)
    if r.degree() >= rep.w.degree():
        raise InternalInvariantError("deg r >= deg w after reduction")
    t0 = _now()
    vroots, assign = classify_values(r, roots, rep.w)
    diag.timings_ms["argmin"] = round((_now() - t0) * 1000, 3)
    best = min(assign)
    glo = [Minimizer(a, coords[:lag.n], r, digits,
                     multiplier_polys=coords[lag.n:])
           for a, k in zip(roots, assign) if k == best]
    fmin = _value_info(vroots[best], digits, assume_attained)
    diag.residual_norms = _float_residuals(gradient(lag.L), glo)
    diag.timings_ms["total"] = round((_now() - t_all) * 1000, 3)
    return SolveReport(OK, "global", glo, rep, f_min=fmin, diagnostics=diag)


# ---------------------------------------------------------------------------
# inequalities via squared slacks


def slack_transform(f, g, h=()):
    """Inequalities g >= 0 become equalities g_j - z_j^2 = 0 in n + m
    variables; equalities pass through; the objective ignores the slacks."""
    g = tuple(g)
    h = tuple(h)
    if not g:
        raise DimensionError("no inequality constraints to transform")
    n = f.nvars
    N = n + len(g)
    eqs = [hj.embed(N) for hj in h]
    for j, gj in enumerate(g):
        z = MPoly.variable(n + j, N)
        eqs.append(gj.embed(N) - z * z)
    return Problem(objective=f.embed(N), equalities=tuple(eqs))


def solve_inequalities(f, g, h=(), digits=10, hessian_convention=DIRECT,
                       threads=1):
    """Local minimizers of f subject to g >= 0 (and h = 0): solve the
    slack-variable reformulation, project out the slacks, and deduplicate the
    +-z mirror images exactly."""
    n = f.nvars
    prob = slack_transform(f, g, h)
    rpt = gralom(prob.objective, prob.equalities, digits=digits,
                 hessian_convention=hessian_convention, threads=threads)
    rpt.mode = "inequality"
    if not rpt.ok or not rpt.minimizers:
        return rpt
    rpt.minimizers = _project_dedupe(rpt.minimizers, n, rpt.rep, digits)
    return rpt


def _project_dedupe(mins, n, rep, digits):
    """Slice coordinates to the first n and merge minimizers whose projected
    exact coordinates coincide (checked through exact value identification,
    never through float proximity)."""
    coords = rep.coordinate_polys()[:n]
    roots = [mn.root for mn in mins]
    signatures = [[] for _ in roots]
    for k in range(n):
        _, assign = classify_values(coords[k], roots, rep.w)
        for i, a in enumerate(assign):
            signatures[i].append(a)
    seen = {}
    out = []
    for mn, sig in zip(mins, signatures):
        key = tuple(sig)
        if key in seen:
            continue
        seen[key] = True
        out.append(Minimizer(mn.root, coords, mn.value_poly, digits,
                             multiplier_polys=mn.multiplier_polys))
    return out


# ---------------------------------------------------------------------------
# perturbation driver for degenerate instances


@dataclass
class PerturbEntry:
    eps: tuple
    report: SolveReport


def perturb_solve(f, h, eps_schedule, digits=10, threads=1):
    """Run the constrained global driver on f + eps.x for each eps in the
    schedule; per-eps failures are recorded, never fatal.

    For a compact constraint set and generic eps the perturbed problem has a
    unique global minimizer converging to a global minimizer of f."""
    n = f.nvars
    out = []
    for eps in eps_schedule:
        eps = tuple(Fraction(e) for e in eps)
        if len(eps) != n:
            raise DimensionError("eps vector length does not match nvars")
        fe = f
        for i, e in enumerate(eps):
            if e:
                fe = fe + MPoly.variable(i, n).scale(e)
        try:
            rpt = gralom_plus(fe, h, digits=digits, assume_attained=True,
                              threads=threads)
        except PreconditionError as exc:
            rpt = SolveReport(PRECONDITION_FAILED, "global",
                              diagnostics=Diagnostics(notes=[str(exc)]))
        out.append(PerturbEntry(eps, rpt))
    return out
