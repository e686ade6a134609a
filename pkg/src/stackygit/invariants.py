"""The classical invariant-ring catalog and the transvectant engine.

Families: binary quartics (free ring on degrees 2, 3), binary quintics
(degrees 4, 8, 12, 18 with one relation), binary sextics (2, 4, 6, 10, 15),
plane cubic curves (free, 4 and 6), and cubic surfaces (8, 16, 24, 32, 40,
100).  The quintic relation polynomial is the explicit six-term expression
in the degree-4, 8, 12 generators; the sextic one is twice a symmetric 3x3
determinant, with one entry repaired for homogeneity (see SEXTIC_REPAIR_NOTE).
The cubic-surface relation polynomial is not classically printed, so a
symbolic degree-200 placeholder stands in; the stack decomposition only
needs the weights.

Transvectants use the classical normalization
((d-r)! (e-r)! / (d! e!)) * sum_i (-1)^i C(r, i) f_{x^{r-i} y^i} g_{x^i y^{r-i}},
and the calibration harness matches transvectant-built invariants against a
catalog relation by per-degree scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .cyclotomic import QQ, CyclotomicNumber, as_cyclotomic
from .errors import (
    NonStableError,
    OrderTooLargeError,
    UnderDeterminedError,
    UnknownFamilyError,
    WrongDegreeError,
)
from .graded import GradedRingPresentation
from .polynomials import BinaryForm, MultiPoly, WeightedGrading

FAMILIES = ("quartic", "quintic", "sextic", "cubic-curve", "cubic-surface")

SEXTIC_REPAIR_NOTE = (
    "entry a33: first term taken as (1/2)*I4*I10 (degree 14); the printed "
    "(1/2)*I6*I10 has degree 16 and would make the determinant inhomogeneous "
    "(32 against 30); this is the unique single-symbol repair restoring "
    "homogeneity of every determinant term"
)

CUBIC_SURFACE_NOTE = (
    "the degree-200 relation polynomial is a symbolic placeholder (I40^5); "
    "only the generator weights enter the decomposition"
)


@dataclass(frozen=True)
class InvariantCatalogEntry:
    family: str
    ring: "GradedRingPresentation"
    F: MultiPoly | None
    source: str
    notes: tuple = ()


@dataclass(frozen=True)
class QuarticInvariants:
    I2: CyclotomicNumber
    I3: CyclotomicNumber


def quintic_F() -> MultiPoly:
    """The quintic relation polynomial F(I4, I8, I12), 324*F having the
    six integer terms; weighted-homogeneous of degree 36 for (4, 8, 12)."""
    v = ("I4", "I8", "I12")
    f324 = MultiPoly(v, {
        (1, 4, 0): -9,
        (0, 3, 1): -24,
        (2, 2, 1): 6,
        (1, 1, 2): 72,
        (0, 0, 3): 144,
        (3, 0, 2): -1,
    })
    return f324 * QQ(1, 324)


def _sextic_matrix():
    v = ("I2", "I4", "I6", "I10")
    p = lambda terms: MultiPoly(v, terms)
    i2, i4, i6, i10 = (MultiPoly.variable(v, n) for n in v)
    b = i4 * i4 + i2 * i6                      # I4^2 + I2*I6, degree 8
    a11 = 2 * i6 + QQ(1, 3) * i2 * i4
    a12 = QQ(2, 3) * b
    a13 = i10
    a22 = i10
    a23 = QQ(1, 3) * i4 * b + QQ(1, 3) * i6 * a11
    a33 = QQ(1, 2) * i4 * i10 + QQ(2, 9) * i6 * b   # repaired, see note
    return ((a11, a12, a13), (a12, a22, a23), (a13, a23, a33))


def sextic_F() -> MultiPoly:
    """Twice the determinant of the symmetric 3x3 matrix of the sextic
    catalog; weighted-homogeneous of degree 30 for (2, 4, 6, 10) after the
    a33 repair."""
    m = _sextic_matrix()
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return 2 * det


@lru_cache(maxsize=None)
def catalog_ring(family: str) -> InvariantCatalogEntry:
    """The invariant-ring presentation of a catalog family."""
    if family == "quartic":
        ring = GradedRingPresentation(("I2", "I3"), (2, 3))
        return InvariantCatalogEntry(family, ring, None,
                                     "invariants of binary quartics")
    if family == "cubic-curve":
        ring = GradedRingPresentation(("I4", "I6"), (4, 6))
        return InvariantCatalogEntry(family, ring, None,
                                     "invariants of plane cubic curves")
    if family == "quintic":
        F = quintic_F()
        gens = ("I4", "I8", "I12", "I18")
        rel = MultiPoly(gens, {(0, 0, 0, 2): 1}) - F.lifted(gens)
        ring = GradedRingPresentation(gens, (4, 8, 12, 18), rel)
        return InvariantCatalogEntry(family, ring, F,
                                     "invariants of binary quintics")
    if family == "sextic":
        F = sextic_F()
        gens = ("I2", "I4", "I6", "I10", "I15")
        rel = MultiPoly(gens, {(0, 0, 0, 0, 2): 1}) - F.lifted(gens)
        ring = GradedRingPresentation(gens, (2, 4, 6, 10, 15), rel)
        return InvariantCatalogEntry(family, ring, F,
                                     "invariants of binary sextics",
                                     notes=(SEXTIC_REPAIR_NOTE,))
    if family == "cubic-surface":
        gens = ("I8", "I16", "I24", "I32", "I40", "I100")
        F = MultiPoly(gens[:-1], {(0, 0, 0, 0, 5): 1})  # placeholder, degree 200
        rel = MultiPoly(gens, {(0, 0, 0, 0, 0, 2): 1}) - F.lifted(gens)
        ring = GradedRingPresentation(gens, (8, 16, 24, 32, 40, 100), rel)
        return InvariantCatalogEntry(family, ring, F,
                                     "invariants of cubic surfaces",
                                     notes=(CUBIC_SURFACE_NOTE,))
    raise UnknownFamilyError(
        f"unknown family {family!r}; known: {', '.join(FAMILIES)}")


# -- quartic invariants -----------------------------------------------------------


def quartic_invariants(f: BinaryForm) -> QuarticInvariants:
    """The degree-2 and degree-3 invariants of a binary quartic.

    The classical formulas I2 = a0 a4 - 4 a1 a3 + 3 a2^2 and
    I3 = a0 a2 a4 - a0 a3^2 + 2 a1 a2 a3 - a1^2 a4 - a2^3 apply to the
    binomial-weighted coefficients b_i = a_i / C(4, i); under the plain
    reading I2 would not be SL(2)-invariant.
    """
    if f.degree != 4:
        raise WrongDegreeError(f"need a quartic, got degree {f.degree}")
    b = [f.a(i) * QQ(1, comb(4, i)) for i in range(5)]
    i2 = b[0] * b[4] - 4 * b[1] * b[3] + 3 * b[2] * b[2]
    i3 = (b[0] * b[2] * b[4] - b[0] * b[3] * b[3] + 2 * b[1] * b[2] * b[3]
          - b[1] * b[1] * b[4] - b[2] ** 3)
    return QuarticInvariants(i2, i3)


def quartic_point(f: BinaryForm):
    """The value point (I2 : I3) of a stable quartic in P(2, 3).

    The representative is normalized inside the coefficient field: (1:0)
    and (0:1) at the special quartics, and the scaling-canonical form
    (c : c) with c = I2^3/I3^2 when both coordinates are nonzero (a first
    coordinate of exactly 1 would need a square root of I2).
    """
    from .locus import PointW

    if not _squarefree(f):
        raise NonStableError("the value point is taken on stable quartics")
    inv = quartic_invariants(f)
    weights = WeightedGrading((2, 3))
    if not inv.I2 and not inv.I3:
        raise NonStableError("I2 = I3 = 0 cannot happen for a stable quartic")
    if not inv.I3:
        return PointW((1, 0), weights)
    if not inv.I2:
        return PointW((0, 1), weights)
    c = inv.I2 ** 3 / inv.I3 ** 2
    return PointW((c, c), weights)


def _squarefree(f: BinaryForm) -> bool:
    return all(m == 1 for m in f.multiplicity_profile())


# -- transvectants -----------------------------------------------------------------


def _derivative_row(f: BinaryForm, r: int):
    """Mixed partials d^r f / dx^(r-i) dy^i for i = 0..r."""
    row = [f]
    for _ in range(r):
        row = [g.partial_x() for g in row] + [row[-1].partial_y()]
    return row


def transvectant(f: BinaryForm, g: BinaryForm, r: int) -> BinaryForm:
    """The r-th transvectant of two forms, degree d + e - 2r."""
    d, e = f.degree, g.degree
    if r > min(d, e):
        raise OrderTooLargeError(
            f"transvectant order {r} exceeds min(deg) = {min(d, e)}")
    df = _derivative_row(f, r)
    dg = _derivative_row(g, r)
    total = None
    for i in range(r + 1):
        term = df[i] * dg[r - i] * ((-1) ** i * comb(r, i))
        total = term if total is None else total + term
    scale = QQ(factorial(d - r) * factorial(e - r), factorial(d) * factorial(e))
    return total * scale


def resultant(f: BinaryForm, g: BinaryForm) -> CyclotomicNumber:
    """Resultant of two binary forms at their formal degrees (Sylvester)."""
    d, e = f.degree, g.degree
    size = d + e
    rows = []
    for k in range(e):
        rows.append([as_cyclotomic(0)] * k + list(f.coeffs)
                    + [as_cyclotomic(0)] * (e - 1 - k))
    for k in range(d):
        rows.append([as_cyclotomic(0)] * k + list(g.coeffs)
                    + [as_cyclotomic(0)] * (d - 1 - k))
    return _det(rows, size)


def _det(rows, size) -> CyclotomicNumber:
    # Gaussian elimination with exact division; pivot by first nonzero.
    det = as_cyclotomic(1)
    for col in range(size):
        pivot = None
        for k in range(col, size):
            if rows[k][col]:
                pivot = k
                break
        if pivot is None:
            return as_cyclotomic(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        inv = p.inverse()
        for k in range(col + 1, size):
            factor = rows[k][col] * inv
            if factor:
                rows[k] = [a - factor * b for a, b in zip(rows[k], rows[col])]
    return det


# -- calibration --------------------------------------------------------------------


@dataclass(frozen=True)
class RecipeStep:
    """One construction step: kind is 'trans', 'mul', 'pow' or 'lin'.

    'trans': transvectant(args[0], args[1], order)
    'mul':   product of the named covariants in args
    'pow':   args[0] raised to the power 'order'
    'lin':   sum of coefficient * named covariant over 'combo'
    'res':   resultant(args[0], args[1]) as a degree-0 form
    """

    name: str
    kind: str
    args: tuple = ()
    order: int = 0
    combo: tuple = ()


@dataclass(frozen=True)
class CalibrationResult:
    family: str
    scalars: dict | None
    residuals: tuple = ()
    detail: str = ""

    @property
    def succeeded(self) -> bool:
        return self.scalars is not None


def evaluate_recipe(recipe, f: BinaryForm) -> dict:
    """Run recipe steps on the source form; returns name -> covariant."""
    env = {"f": f}
    for step in recipe:
        if step.kind == "trans":
            value = transvectant(env[step.args[0]], env[step.args[1]], step.order)
        elif step.kind == "mul":
            value = env[step.args[0]]
            for other in step.args[1:]:
                value = value * env[other]
        elif step.kind == "pow":
            value = env[step.args[0]] ** step.order
        elif step.kind == "lin":
            value = None
            for coeff, name in step.combo:
                term = env[name] * as_cyclotomic(coeff)
                value = term if value is None else value + term
        elif step.kind == "res":
            value = BinaryForm([resultant(env[step.args[0]], env[step.args[1]])])
        else:
            raise ValueError(f"unknown recipe step kind {step.kind!r}")
        env[step.name] = value
    return env


def _invariant_value(form: BinaryForm) -> CyclotomicNumber:
    if form.degree != 0:
        raise UnderDeterminedError(
            f"recipe output has order {form.degree}, expected an invariant")
    return form.a(0)


def _rational_root(value, k: int):
    """Exact rational k-th root of a rational CyclotomicNumber, or None."""
    if not value.is_rational():
        return None
    q = value.rational_value()
    if q == 0:
        return None
    sign = 1
    if q < 0:
        if k % 2 == 0:
            return None
        sign, q = -1, -q
    num = round(q.numerator ** (1 / k))
    den = round(q.denominator ** (1 / k))
    for dn in (num - 1, num, num + 1):
        for dd in (den - 1, den, den + 1):
            if dn > 0 and dd > 0 and QQ(dn, dd) ** k == q:
                return QQ(sign * dn, dd)
    return None


DEFAULT_SEED = 7

#: Classical covariant chain for the quintic: the quadratic covariant
#: i = (f,f)^4, the cubic alpha = (f,i)^2 and its square-transvectant
#: tau = (alpha,alpha)^2 yield invariants in degrees 4, 8, 12; the
#: degree-18 invariant is the resultant of f with alpha (the degree-18
#: invariant space is one-dimensional, so any nonzero choice is
#: proportional to the catalog generator).
QUINTIC_RECIPE = (
    RecipeStep("i", "trans", ("f", "f"), 4),
    RecipeStep("alpha", "trans", ("f", "i"), 2),
    RecipeStep("tau", "trans", ("alpha", "alpha"), 2),
    RecipeStep("I4", "trans", ("i", "i"), 2),
    RecipeStep("I8", "trans", ("i", "tau"), 2),
    RecipeStep("I12", "trans", ("tau", "tau"), 2),
    RecipeStep("I18", "res", ("f", "alpha")),
)

#: Transvectant chain for the sextic in degrees 2, 4, 6, 10, 15.  The raw
#: transvectants J6 and J10 differ from the determinant convention of the
#: catalog relation by lower-filtration terms; the 'lin' steps apply the
#: exact corrections (solved once against the relation, then frozen), after
#: which per-degree scalars suffice.  The degree-15 invariant is the
#: sixth transvectant of two order-6 covariant products (the degree-15
#: space is one-dimensional).
SEXTIC_RECIPE = (
    RecipeStep("h", "trans", ("f", "f"), 4),
    RecipeStep("ell", "trans", ("f", "h"), 4),
    RecipeStep("y", "trans", ("f", "ell"), 2),
    RecipeStep("m", "trans", ("h", "ell"), 1),
    RecipeStep("I2", "trans", ("f", "f"), 6),
    RecipeStep("I4", "trans", ("h", "h"), 4),
    RecipeStep("J6", "trans", ("ell", "ell"), 2),
    RecipeStep("ell3", "pow", ("ell",), 3),
    RecipeStep("J10", "trans", ("f", "ell3"), 6),
    RecipeStep("elly", "mul", ("ell", "y")),
    RecipeStep("ellm", "mul", ("ell", "m")),
    RecipeStep("I15", "trans", ("elly", "ellm"), 6),
    RecipeStep("p24", "mul", ("I2", "I4")),
    RecipeStep("I6", "lin", combo=((QQ(1, 2), "J6"), (QQ(-1, 6), "p24"))),
    RecipeStep("p46", "mul", ("I4", "J6")),
    RecipeStep("i2sq", "pow", ("I2",), 2),
    RecipeStep("i2cu", "pow", ("I2",), 3),
    RecipeStep("i4sq", "pow", ("I4",), 2),
    RecipeStep("p224", "mul", ("i2cu", "I4")),
    RecipeStep("p144", "mul", ("I2", "i4sq")),
    RecipeStep("p226", "mul", ("i2sq", "J6")),
    RecipeStep("I10", "lin", combo=(
        (QQ(1, 2), "J10"), (QQ(1, 3), "p46"), (QQ(1, 54), "p224"),
        (QQ(-1, 9), "p144"), (QQ(-1, 18), "p226"))),
)


def random_form(rng, degree: int, span: int = 9) -> BinaryForm:
    coeffs = [rng.randint(-span, span) for _ in range(degree + 1)]
    if not any(coeffs):
        coeffs[0] = 1
    return BinaryForm(coeffs)


def calibrate_invariants(family: str, recipe, generator_names=None,
                         seed: int = DEFAULT_SEED, samples: int = 25) -> CalibrationResult:
    """Find per-degree scalars matching recipe invariants to the catalog
    relation, verified exactly at random forms.

    For the quintic: scalars (c4, c8, c12, c18) with (c18*J18)^2 =
    F(c4*J4, c8*J8, c12*J12) at ``samples`` random quintics; c18 is
    normalized to 1.  The sextic relation is handled the same way with five
    scalars.  Failure returns a report with the nonzero residuals.
    """
    import random

    entry = catalog_ring(family)
    if entry.F is None:
        raise UnknownFamilyError(f"family {family!r} has no relation to calibrate")
    base_vars = entry.F.variables
    top_name = entry.ring.generators[-1]
    names = tuple(generator_names) if generator_names else base_vars + (top_name,)
    if len(names) != len(base_vars) + 1:
        raise UnderDeterminedError(
            f"recipe must name {len(base_vars) + 1} invariants")
    degree = {"quintic": 5, "sextic": 6}[family]
    weights = entry.ring.weights
    rng = random.Random(seed)

    def values_at(f):
        env = evaluate_recipe(recipe, f)
        return [_invariant_value(env[n]) for n in names]

    # enough probes to pin every coefficient of the degree-2w(top) space
    mono_count = len(_weighted_monomials(weights[:-1], 2 * weights[-1]))
    probe = [random_form(rng, degree) for _ in range(max(samples, mono_count + 8))]
    probe_values = [values_at(f) for f in probe]
    for j, name in enumerate(names):
        if all(not v[j] for v in probe_values):
            raise UnderDeterminedError(
                f"recipe invariant {name} vanishes identically on the samples")

    scalars = _solve_scalars(entry, names, weights, probe_values)
    if scalars is None:
        return CalibrationResult(family, None, detail=(
            "no per-degree scalars match the relation; the recipe "
            "invariants differ from the catalog generators by more than scale"))

    residuals = []
    for f, vals in zip(probe, probe_values):
        scaled = [c * v for c, v in zip(scalars, vals)]
        lhs = scaled[-1] ** 2
        rhs = entry.F.evaluate(scaled[:-1])
        if lhs != rhs:
            residuals.append((str(f), str(lhs - rhs)))
    if residuals:
        return CalibrationResult(family, None, tuple(residuals),
                                 "scalars fitted on coefficients but residuals remain")
    return CalibrationResult(
        family, dict(zip(names, scalars)),
        detail=f"relation verified exactly at {len(probe)} random forms (seed {seed})")


def _solve_scalars(entry, names, weights, probe_values):
    """Solve for the per-generator scalars from the relation coefficients.

    Writes J_top^2 as an exact linear combination of the monomials in the
    base invariants (a linear solve over the samples), then matches that
    combination against the relation's coefficient pattern.  The scalar
    vector is only determined up to the weighted rescaling freedom; the
    first base scalar is normalized to 1.
    """
    base_count = len(names) - 1
    target_degree = 2 * weights[-1]
    monos = _weighted_monomials(weights[:base_count], target_degree)
    rows, rhs = [], []
    for vals in probe_values:
        rows.append([_mono_value(vals, m) for m in monos])
        rhs.append(vals[-1] ** 2)
    solution = _solve_linear(rows, rhs)
    if solution is None:
        return None
    lam = dict(zip(monos, solution))
    rel = {m: entry.F.terms.get(m, None) for m in monos}
    return _match_pattern(lam, rel, base_count)


def _weighted_monomials(weights, degree):
    out = []

    def rec(i, left, current):
        if i == len(weights):
            if left == 0:
                out.append(tuple(current))
            return
        top = left // weights[i]
        for k in range(top + 1):
            rec(i + 1, left - k * weights[i], current + [k])

    rec(0, degree, [])
    return sorted(out)


def _mono_value(vals, mono):
    v = as_cyclotomic(1)
    for x, k in zip(vals, mono):
        if k:
            v = v * x ** k
    return v


def _solve_linear(rows, rhs):
    """Exact solve of an overdetermined consistent system; None if none."""
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(n):
        pivot = None
        for k in range(row, len(aug)):
            if aug[k][col]:
                pivot = k
                break
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [a * inv for a in aug[row]]
        for k in range(len(aug)):
            if k != row and aug[k][col]:
                factor = aug[k][col]
                aug[k] = [a - factor * b for a, b in zip(aug[k], aug[row])]
        pivots.append(col)
        row += 1
        if row == len(aug):
            break
    # inconsistency or underdetermination
    for k in range(row, len(aug)):
        if aug[k][n]:
            return None
    if len(pivots) < n:
        return None
    solution = [as_cyclotomic(0)] * n
    for r, col in enumerate(pivots):
        solution[col] = aug[r][n]
    return solution


def _match_pattern(lam, rel, base_count):
    """Solve lambda_m * s_top^2 = c_m * prod s_i^{m_i} for the scalars.

    Multiplicative linear algebra: integer row reduction on the exponent
    vectors (m, -2) with the values prod s_i^{m_i} * s_top^-2 = lam_m/c_m
    carried along multiplicatively, then back-substitution with exact
    roots.  The weighted rescaling freedom appears as a pivotless column
    and is fixed by setting that scalar to 1; a final verification guards
    the root-sign choices.
    """
    for m, c in rel.items():
        if (c is None) != (not lam[m]):
            return None
    nonzero = sorted(m for m, c in rel.items() if c is not None)
    if not nonzero:
        return None
    ncols = base_count + 1
    # Column order: top scalar first, first base scalar last, so that the
    # rescaling freedom lands on the first base generator (normalized to 1).
    perm = [ncols - 1] + list(range(1, base_count)) + [0]
    rows = [[(list(m) + [-2])[p] for p in perm] for m in nonzero]
    vals = [lam[m] / rel[m] for m in nonzero]
    pivots = []
    r = 0
    for col in range(ncols):
        while True:
            live = [k for k in range(r, len(rows)) if rows[k][col]]
            if not live:
                break
            k0 = min(live, key=lambda k: abs(rows[k][col]))
            rows[r], rows[k0] = rows[k0], rows[r]
            vals[r], vals[k0] = vals[k0], vals[r]
            clean = True
            for k in range(r + 1, len(rows)):
                if rows[k][col]:
                    q = rows[k][col] // rows[r][col]
                    if q:
                        rows[k] = [a - q * b for a, b in zip(rows[k], rows[r])]
                        vals[k] = vals[k] / vals[r] ** q
                    if rows[k][col]:
                        clean = False
            if clean:
                break
        if r < len(rows) and rows[r][col]:
            pivots.append((r, col))
            r += 1
        if r == len(rows):
            break
    for k in range(r, len(rows)):
        if not any(rows[k]) and vals[k] != 1:
            return None
    permuted = [None] * ncols
    for ri, col in reversed(pivots):
        value = vals[ri]
        for j in range(col + 1, ncols):
            if rows[ri][j]:
                if permuted[j] is None:
                    permuted[j] = as_cyclotomic(1)
                value = value / permuted[j] ** rows[ri][j]
        root = _kth_root(value, rows[ri][col])
        if root is None:
            return None
        permuted[col] = root
    permuted = [as_cyclotomic(1) if s is None else s for s in permuted]
    scalars = [None] * ncols
    for where, p in enumerate(perm):
        scalars[p] = permuted[where]
    # verification (also guards even-root sign choices)
    top_sq = scalars[-1] ** 2
    for m in nonzero:
        if _mono_value(scalars[:-1], m) != (lam[m] / rel[m]) * top_sq:
            return None
    return scalars


def _kth_root(value, k: int):
    if k < 0:
        value, k = value.inverse(), -k
    if k == 1:
        return value
    if k == 2 and value.is_rational():
        from .cyclotomic import rational_sqrt

        return rational_sqrt(value.rational_value())
    root = _rational_root(value, k)
    return None if root is None else as_cyclotomic(root)
