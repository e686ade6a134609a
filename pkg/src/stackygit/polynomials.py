"""Sparse exact polynomials over cyclotomic fields.

:class:`MultiPoly` is a sparse multivariate polynomial (exponent vector ->
coefficient) used for graded-ring relations and divisor equations.
:class:`BinaryForm` is the dense two-variable case ``f = a_0 x^d +
a_1 x^{d-1} y + ... + a_d y^d`` with the substitution action of SL(2) and
root-multiplicity analysis.

Root multiplicities are computed by iterated gcds of the dehomogenization
with its derivative (so everything stays in exact arithmetic, with no root
extraction); the gcd itself uses a fraction-free subresultant remainder
sequence to limit coefficient growth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CyclotomicNumber, as_cyclotomic
from .errors import ArityError, VariableMismatchError, ZeroFormError

_ZERO = as_cyclotomic(0)
_ONE = as_cyclotomic(1)


@dataclass(frozen=True)
class WeightedGrading:
    """Positive integer weights, one per variable."""

    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


class MultiPoly:
    """Sparse multivariate polynomial with CyclotomicNumber coefficients.

    ``variables`` is an ordered tuple of names; ``terms`` maps exponent
    tuples (one entry per variable) to nonzero coefficients.  Instances are
    treated as immutable.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ArityError(
                    f"exponent vector {exps} does not match {len(variables)} variables")
            if any(e < 0 for e in exps):
                raise ValueError("exponents must be nonnegative")
            c = as_cyclotomic(c)
            if c:
                prev = clean.get(exps)
                c = prev + c if prev is not None else c
                if c:
                    clean[exps] = c
                elif exps in clean:
                    del clean[exps]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(variables):
        return MultiPoly(variables)

    @staticmethod
    def constant(variables, c):
        variables = tuple(variables)
        return MultiPoly(variables, {(0,) * len(variables): c})

    @staticmethod
    def variable(variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return MultiPoly(variables, {exps: 1})

    @staticmethod
    def monomial(variables, exps, c=1):
        return MultiPoly(variables, {tuple(exps): c})

    # -- predicates -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), _ZERO)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise VariableMismatchError(
                    f"variables {other.variables} != {self.variables}")
            return other
        return MultiPoly.constant(self.variables, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, _ZERO) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_cyclotomic(other)
            if not c:
                return MultiPoly.zero(self.variables)
            return MultiPoly(self.variables,
                             {e: x * c for e, x in self.terms.items()})
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = terms.get(e)
                s = p if s is None else s + p
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if self.is_constant():
                return self.constant_term() == as_cyclotomic(other)
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    __hash__ = None

    # -- structure ------------------------------------------------------------

    def weighted_degree(self, grading: WeightedGrading):
        """Common weighted degree of all terms, or None if inhomogeneous.

        The zero polynomial and constants have degree 0.
        """
        if len(grading) != len(self.variables):
            raise VariableMismatchError(
                f"{len(grading)} weights for {len(self.variables)} variables")
        degree = None
        for e in self.terms:
            d = sum(w * k for w, k in zip(grading, e))
            if degree is None:
                degree = d
            elif d != degree:
                return None
        return 0 if degree is None else degree

    def is_homogeneous(self, grading: WeightedGrading):
        return self.weighted_degree(grading) is not None

    def partial(self, i: int) -> "MultiPoly":
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                s = terms.get(e2, _ZERO) + c * e[i]
                if s:
                    terms[e2] = s
                elif e2 in terms:
                    del terms[e2]
        return MultiPoly(self.variables, terms)

    def partials(self):
        """Partial derivatives in variable order."""
        return tuple(self.partial(i) for i in range(len(self.variables)))

    def evaluate(self, point) -> CyclotomicNumber:
        point = [as_cyclotomic(p) for p in point]
        if len(point) != len(self.variables):
            raise ArityError(
                f"{len(point)} coordinates for {len(self.variables)} variables")
        total = _ZERO
        for e, c in self.terms.items():
            v = c
            for p, k in zip(point, e):
                if k:
                    v = v * p ** k
            total = total + v
        return total

    def renamed(self, mapping) -> "MultiPoly":
        """Rename variables via {old: new}; order is preserved."""
        vs = tuple(mapping.get(v, v) for v in self.variables)
        return MultiPoly(vs, dict(self.terms))

    def permuted(self, new_variables) -> "MultiPoly":
        """Express over ``new_variables`` (a permutation of self.variables)."""
        new_variables = tuple(new_variables)
        if sorted(new_variables) != sorted(self.variables):
            raise VariableMismatchError(
                f"{new_variables} is not a permutation of {self.variables}")
        pos = [self.variables.index(v) for v in new_variables]
        terms = {tuple(e[p] for p in pos): c for e, c in self.terms.items()}
        return MultiPoly(new_variables, terms)

    def lifted(self, new_variables) -> "MultiPoly":
        """Embed into a ring with extra variables (superset, any order)."""
        new_variables = tuple(new_variables)
        pos = {v: new_variables.index(v) for v in self.variables}
        n = len(new_variables)
        terms = {}
        for e, c in self.terms.items():
            e2 = [0] * n
            for v, k in zip(self.variables, e):
                e2[pos[v]] = k
            terms[tuple(e2)] = c
        return MultiPoly(new_variables, terms)

    def restricted(self, new_variables) -> "MultiPoly":
        """Drop variables that occur in no term."""
        new_variables = tuple(new_variables)
        keep = [self.variables.index(v) for v in new_variables]
        drop = [i for i in range(len(self.variables)) if i not in keep]
        terms = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                raise VariableMismatchError(
                    f"term {e} uses a variable outside {new_variables}")
            terms[tuple(e[i] for i in keep)] = c
        return MultiPoly(new_variables, terms)

    def proportional_to(self, other):
        """Scalar c with self == c*other, or None."""
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return None
        if set(self.terms) != set(other.terms):
            return None
        e0 = next(iter(self.terms))
        c = self.terms[e0] / other.terms[e0]
        for e, x in self.terms.items():
            if x != c * other.terms[e]:
                return None
        return c

    # -- display ---------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(self.variables, e) if k)
            if not mono:
                body, neg = _coeff_text(c, force=True)
            else:
                body, neg = _coeff_text(c)
                body = f"{body}*{mono}" if body else mono
            parts.append(("- " if neg else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"MultiPoly({self.variables}, '{self}')"


def _coeff_text(c: CyclotomicNumber, force=False):
    """Render a coefficient for use as a factor; returns (text, negated)."""
    if c.is_rational():
        q = c.rational_value()
        neg, q = q < 0, abs(q)
        if q == 1 and not force:
            return "", neg
        return (str(q.numerator) if q.denominator == 1
                else f"{q.numerator}/{q.denominator}"), neg
    s = str(c)
    if s.startswith("-"):
        body = s[1:]
        if "+" in body or "- " in body:
            return f"({s})", False
        return body if _is_single_factor(body) else f"({body})", True
    if "+" in s or " - " in s:
        return f"({s})", False
    return s if _is_single_factor(s) else f"({s})", False


def _is_single_factor(s: str) -> bool:
    return "*" not in s or s.count("*") == s.count("*zeta")


class BinaryForm:
    """A binary form ``a_0 x^d + a_1 x^{d-1} y + ... + a_d y^d``.

    The formal degree is explicit: leading coefficients may vanish (the root
    at infinity).  Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(as_cyclotomic(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("BinaryForm is immutable")

    @staticmethod
    def from_dict(degree: int, entries) -> "BinaryForm":
        """Build from {i: a_i} where a_i multiplies x^(d-i) y^i."""
        coeffs = [0] * (degree + 1)
        for i, c in entries.items():
            coeffs[i] = c
        return BinaryForm(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def a(self, i: int) -> CyclotomicNumber:
        return self.coeffs[i]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        if self.degree != other.degree:
            raise ArityError("cannot add forms of different degrees")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if self.degree != other.degree:
            raise ArityError("cannot subtract forms of different degrees")
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm([-a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            c = as_cyclotomic(other)
            return BinaryForm([a * c for a in self.coeffs])
        out = [_ZERO] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return BinaryForm(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a form")
        result = BinaryForm([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    __hash__ = None

    def proportional_to(self, other):
        """Scalar c with self == c*other (same degree), or None."""
        if self.degree != other.degree or self.is_zero() or other.is_zero():
            return None
        c = None
        for a, b in zip(self.coeffs, other.coeffs):
            if bool(a) != bool(b):
                return None
            if a and c is None:
                c = a / b
        for a, b in zip(self.coeffs, other.coeffs):
            if a != c * b:
                return None
        return c

    # -- calculus and substitution ------------------------------------------------

    def partial_x(self) -> "BinaryForm":
        d = self.degree
        if d == 0:
            return BinaryForm([0])
        return BinaryForm([self.coeffs[i] * (d - i) for i in range(d)])

    def partial_y(self) -> "BinaryForm":
        d = self.degree
        if d == 0:
            return BinaryForm([0])
        return BinaryForm([self.coeffs[j + 1] * (j + 1) for j in range(d)])

    def evaluate(self, xv, yv) -> CyclotomicNumber:
        xv, yv = as_cyclotomic(xv), as_cyclotomic(yv)
        d = self.degree
        total = _ZERO
        xp = [as_cyclotomic(1)]
        yp = [as_cyclotomic(1)]
        for _ in range(d):
            xp.append(xp[-1] * xv)
            yp.append(yp[-1] * yv)
        for i, a in enumerate(self.coeffs):
            if a:
                total = total + a * xp[d - i] * yp[i]
        return total

    def substitute(self, m) -> "BinaryForm":
        """The form f(a x + b y, c x + d y) for the matrix [[a, b], [c, d]].

        The substitution is the right action used throughout: f.substitute(M
        N) == f.substitute(M).substitute(N).
        """
        a, b, c, d = m.a, m.b, m.c, m.d
        deg = self.degree
        if deg == 0:
            return self
        # Horner in X = a x + b y with precomputed powers of Y = c x + d y.
        ypows = [[as_cyclotomic(1)]]
        for _ in range(deg):
            ypows.append(_mul_linear(ypows[-1], c, d))
        acc = [self.coeffs[0]]
        for i in range(1, deg + 1):
            acc = _mul_linear(acc, a, b)
            ai = self.coeffs[i]
            if ai:
                yp = ypows[i]
                acc = [u + ai * v for u, v in zip(acc, yp)]
        return BinaryForm(acc)

    # -- roots ----------------------------------------------------------------------

    def dehomogenized(self):
        """Coefficients of f(t, 1), ascending in t."""
        return [self.coeffs[self.degree - j] for j in range(self.degree + 1)]

    def multiplicity_profile(self):
        """Sorted multiplicities of the roots in P^1 over the closure.

        The root at infinity (1:0) is read off the leading zero
        coefficients; finite roots are counted through the gcd chain of the
        dehomogenization with its successive derivatives.
        """
        if self.is_zero():
            raise ZeroFormError("the zero form has no root profile")
        at_infinity = 0
        while not self.coeffs[at_infinity]:
            at_infinity += 1
        profile = [at_infinity] if at_infinity else []
        p = _cp_trim(self.dehomogenized())
        degrees = [len(p) - 1]
        while len(p) > 1:
            p = _cp_gcd(p, _cp_deriv(p))
            degrees.append(len(p) - 1)
        degrees.append(0)
        # degrees[k-1] - degrees[k] roots have multiplicity >= k
        for k in range(1, len(degrees) - 1):
            exactly_k = (degrees[k - 1] - degrees[k]) - (degrees[k] - degrees[k + 1])
            profile.extend([k] * exactly_k)
        return tuple(sorted(profile))

    def distinct_root_count(self) -> int:
        return len(self.multiplicity_profile())

    # -- display ----------------------------------------------------------------------

    def to_multipoly(self, variables=("x", "y")) -> MultiPoly:
        d = self.degree
        return MultiPoly(variables,
                         {(d - i, i): c for i, c in enumerate(self.coeffs) if c})

    def __str__(self):
        return str(self.to_multipoly())

    def __repr__(self):
        return f"BinaryForm('{self}')"


def _mul_linear(coeffs, p, q):
    # (sum c_j x^{k-j} y^j) * (p x + q y), dense in descending x-degree
    out = [_ZERO] * (len(coeffs) + 1)
    for j, c in enumerate(coeffs):
        if c:
            out[j] = out[j] + c * p
            out[j + 1] = out[j + 1] + c * q
    return out


# -- dense univariate polynomials over the cyclotomic field (ascending) -------

def _cp_trim(c):
    while c and c[-1].is_zero():
        c.pop()
    return c


def _cp_deriv(c):
    return [c[k] * k for k in range(1, len(c))]


def _cp_monic(c):
    inv = c[-1].inverse()
    return [x * inv for x in c]


def _cp_prem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    a = list(a)
    lb = b[-1]
    steps = len(a) - len(b) + 1
    while len(a) >= len(b):
        la = a.pop()
        a = [x * lb for x in a]
        if la:
            k = len(a) - len(b) + 1
            for j, y in enumerate(b[:-1]):
                a[k + j] = a[k + j] - la * y
        _cp_trim(a)
        steps -= 1
    if steps > 0:
        f = lb ** steps
        a = [x * f for x in a]
    return a


def _cp_gcd(a, b):
    """Monic gcd via the subresultant pseudo-remainder sequence."""
    a, b = _cp_trim(list(a)), _cp_trim(list(b))
    if not a:
        return _cp_monic(b) if b else []
    if not b:
        return _cp_monic(a)
    if len(a) < len(b):
        a, b = b, a
    g = _ONE
    h = _ONE
    while True:
        delta = len(a) - len(b)
        r = _cp_prem(a, b)
        if not r:
            return _cp_monic(b) if len(b) > 1 else [_ONE]
        if len(r) == 1:
            return [_ONE]
        scale = (g * h ** delta).inverse()
        a, b = b, [x * scale for x in r]
        g = a[-1]
        h = h ** (1 - delta) * g ** delta
