"""Symmetry of binary forms under the finite subgroups of SL(2).

A form is semi-invariant under a group when every generator carries it to
an exact scalar multiple of itself; the scalars extend multiplicatively to
a character.  Klein's generative description produces all semi-invariants
of a group from its ground forms, and the classification of quartics,
quintics and sextics with extra symmetry is exposed as a catalog of normal
forms keyed by the traditional Roman numerals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cyclotomic import CyclotomicNumber, as_cyclotomic
from .errors import (
    InfiniteStabilizerError,
    NoGroundFormsError,
    UnknownCaseError,
    ZeroFormError,
    ZeroParameterError,
)
from .exprparse import form
from .groups import GroupSpec, SL2Matrix, group_contains, group_generators
from .polynomials import BinaryForm


@dataclass(frozen=True)
class SemiInvarianceCertificate:
    """Exact scalars lambda_g with f o g = lambda_g * f per generator."""

    group: GroupSpec
    scalars: tuple

    def scalar_for_word(self, indices) -> CyclotomicNumber:
        """The character value on a word in the generators."""
        value = as_cyclotomic(1)
        for i in indices:
            value = value * self.scalars[i]
        return value


@dataclass(frozen=True)
class GroundFormSet:
    group: GroupSpec
    forms: tuple  # (F1, F2, F3)
    nu: tuple     # nu_i = |G| / (2 deg F_i)


def semi_invariance(f: BinaryForm, spec: GroupSpec):
    """Certificate with one exact scalar per generator, or None."""
    if f.is_zero():
        raise ZeroFormError("the zero form is semi-invariant under everything")
    scalars = []
    for g in group_generators(spec):
        lam = f.substitute(g).proportional_to(f)
        if lam is None:
            return None
        scalars.append(lam)
    return SemiInvarianceCertificate(spec, tuple(scalars))


def is_stable(f: BinaryForm) -> bool:
    """Every root has multiplicity strictly below degree/2."""
    if f.is_zero():
        raise ZeroFormError("stability is undefined for the zero form")
    return 2 * max(f.multiplicity_profile()) < f.degree


def has_finite_stabilizer(f: BinaryForm) -> bool:
    """At least three distinct roots force a finite stabilizer."""
    if f.is_zero():
        raise ZeroFormError("the zero form has no stabilizer dichotomy")
    return f.distinct_root_count() >= 3


def catalog_stabilizer(f: BinaryForm, n_max: int | None = None):
    """Maximal catalog groups under which f is semi-invariant.

    Candidates are C_n and D_n for n <= n_max (default: deg f) plus T, O,
    I; maximality is with respect to literal containment of the standard
    matrix groups.  Conjugate copies are out of scope: the catalog's normal
    forms realize their stabilizers in the standard embeddings.
    """
    if f.distinct_root_count() <= 2:
        raise InfiniteStabilizerError(
            "forms with at most two distinct roots have infinite stabilizer")
    if n_max is None:
        n_max = max(f.degree, 1)
    candidates = [GroupSpec("C", n) for n in range(1, n_max + 1)]
    candidates += [GroupSpec("D", n) for n in range(1, n_max + 1)]
    candidates += [GroupSpec("T"), GroupSpec("O"), GroupSpec("I")]
    passing = [s for s in candidates if semi_invariance(f, s) is not None]
    maximal = [
        s for s in passing
        if not any(t != s and group_contains(t, s) for t in passing)
    ]
    return sorted(maximal, key=lambda s: (s.order, s.label))


@lru_cache(maxsize=None)
def ground_forms(spec: GroupSpec) -> GroundFormSet:
    """The three forms cutting the sub-generic orbits, with nu_i.

    For D_n: x^n + y^n, x^n - y^n, xy.  The tetrahedral, octahedral and
    icosahedral triples are the classical ones over Q(i), Q, and Q(zeta_5).
    """
    if spec.kind == "C":
        raise NoGroundFormsError("cyclic groups have no ground-form triple")
    if spec.kind == "D":
        n = spec.n
        forms = (
            BinaryForm.from_dict(n, {0: 1, n: 1}),
            BinaryForm.from_dict(n, {0: 1, n: -1}),
            form("x*y"),
        )
    elif spec.kind == "T":
        forms = (
            form("x^4 + 2*sqrtm3*x^2*y^2 + y^4"),
            form("x^4 - 2*sqrtm3*x^2*y^2 + y^4"),
            form("x*y*(x^4 - y^4)"),
        )
    elif spec.kind == "O":
        forms = (
            form("x*y*(x^4 - y^4)"),
            form("x^8 + 14*x^4*y^4 + y^8"),
            form("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12"),
        )
    else:
        forms = (
            form("x*y*(x^10 + 11*x^5*y^5 - y^10)"),
            form("-(x^20 + y^20) + 228*(x^15*y^5 - x^5*y^15) - 494*x^10*y^10"),
            form("(x^30 + y^30) + 522*(x^25*y^5 - x^5*y^25)"
                 " - 10005*(x^20*y^10 + x^10*y^20)"),
        )
    nu = tuple(spec.order // (2 * g.degree) for g in forms)
    return GroundFormSet(spec, forms, nu)


def klein_generate(spec: GroupSpec, alpha: int, beta: int, gamma: int, params=()) -> BinaryForm:
    """The general semi-invariant of the group, expanded.

    Cyclic groups: x^alpha y^beta prod_i (lambda_i x^n + mu_i y^n), with
    gamma ignored.  Other groups: F1^alpha F2^beta F3^gamma
    prod_i (lambda_i F1^nu1 + mu_i F2^nu2).
    """
    for lam, mu in params:
        if not as_cyclotomic(lam) and not as_cyclotomic(mu):
            raise ZeroParameterError("(0, 0) is not a point of P^1")
    if spec.kind == "C":
        n = spec.n
        result = BinaryForm.from_dict(alpha + beta, {beta: 1})
        for lam, mu in params:
            result = result * BinaryForm.from_dict(n, {0: lam, n: mu})
        return result
    gf = ground_forms(spec)
    f1, f2, f3 = gf.forms
    result = f1 ** alpha * f2 ** beta * f3 ** gamma
    for lam, mu in params:
        result = result * (lam * f1 ** gf.nu[0] + mu * f2 ** gf.nu[1])
    return result


# -- the normal-form catalog ---------------------------------------------------


@dataclass(frozen=True)
class CatalogCase:
    """A normal form with extra symmetry, possibly with (lambda:mu) parameters.

    ``genericity`` documents the open condition under which the listed
    stabilizer is exact; parameter defaults satisfy it.
    """

    case: str
    group: GroupSpec
    builder: object
    param_count: int = 0
    default_params: tuple = ()
    genericity: str = ""

    def build(self, params=None) -> BinaryForm:
        if self.param_count == 0:
            return self.builder()
        params = tuple(params) if params is not None else self.default_params
        if len(params) != self.param_count:
            raise ZeroParameterError(
                f"case {self.case} takes {self.param_count} (lambda:mu) pairs")
        for lam, mu in params:
            if not as_cyclotomic(lam) and not as_cyclotomic(mu):
                raise ZeroParameterError("(0, 0) is not a point of P^1")
        return self.builder(*params)


def _pair_form(text):
    return lambda: form(text)


def _quartic_generic(p):
    lam, mu = p
    return lam * form("(x^2 + y^2)^2") + mu * form("(x^2 - y^2)^2")


def _quintic_i(p):
    lam, mu = p
    return form("x*(x^2 + y^2)") * BinaryForm.from_dict(2, {0: lam, 2: mu})


def _sextic_i(p1, p2):
    f = form("x^2 + y^2")
    for lam, mu in (p1, p2):
        f = f * BinaryForm.from_dict(2, {0: lam, 2: mu})
    return f


def _sextic_iii(p):
    lam, mu = p
    return form("x*y") * (lam * form("(x^2 + y^2)^2") + mu * form("(x^2 - y^2)^2"))


def _sextic_iv(p):
    lam, mu = p
    return lam * form("(x^3 + y^3)^2") + mu * form("(x^3 - y^3)^2")


CATALOG = (
    CatalogCase("quartic.generic", GroupSpec("D", 2), _quartic_generic, 1, ((2, 3),),
                "lambda*mu*(lambda^2 - mu^2) != 0 and (lambda - mu)^2 != -3*(lambda + mu)^2"),
    CatalogCase("quartic.I", GroupSpec("D", 4), _pair_form("x^4 + y^4")),
    CatalogCase("quartic.II", GroupSpec("T"),
                _pair_form("x^4 + 2*sqrtm3*x^2*y^2 + y^4")),
    CatalogCase("quintic.I", GroupSpec("C", 2), _quintic_i, 1, ((2, 3),),
                "lambda*mu*(lambda - mu) != 0"),
    CatalogCase("quintic.II", GroupSpec("C", 3), _pair_form("x^2*(x^3 + y^3)")),
    CatalogCase("quintic.III", GroupSpec("C", 4), _pair_form("x*(x^4 + y^4)")),
    CatalogCase("quintic.IV", GroupSpec("D", 3), _pair_form("x*y*(x^3 + y^3)")),
    CatalogCase("quintic.V", GroupSpec("D", 5), _pair_form("x^5 + y^5")),
    CatalogCase("sextic.I", GroupSpec("C", 2), _sextic_i, 2, ((2, 3), (5, 7)),
                "the three quadratic factors are pairwise distinct in P^1"),
    CatalogCase("sextic.II", GroupSpec("C", 5), _pair_form("x*(x^5 + y^5)")),
    CatalogCase("sextic.III", GroupSpec("D", 2), _sextic_iii, 1, ((2, 3),),
                "lambda*mu*(lambda^2 - mu^2) != 0 and (lambda - mu)^2 != -3*(lambda + mu)^2"),
    CatalogCase("sextic.IV", GroupSpec("D", 3), _sextic_iv, 1, ((2, 3),),
                "lambda*mu*(lambda^2 - mu^2) != 0"),
    CatalogCase("sextic.V", GroupSpec("D", 6), _pair_form("x^6 + y^6")),
    CatalogCase("sextic.VI", GroupSpec("O"), _pair_form("x*y*(x^4 - y^4)")),
    CatalogCase("sextic.VII", GroupSpec("C", 3), _pair_form("x^2*y*(x^3 + y^3)")),
    CatalogCase("sextic.VIII", GroupSpec("C", 4), _pair_form("x^2*(x^4 + y^4)")),
)

#: The fifteen numbered normal forms (the generic quartic family is extra).
NUMBERED_CASES = tuple(c for c in CATALOG if c.case != "quartic.generic")

_BY_CASE = {c.case: c for c in CATALOG}


def special_form(case: str, params=None) -> BinaryForm:
    """The catalog normal form; parameterized cases accept (lambda:mu) pairs."""
    try:
        entry = _BY_CASE[case]
    except KeyError:
        raise UnknownCaseError(
            f"unknown case {case!r}; known: {', '.join(sorted(_BY_CASE))}") from None
    return entry.build(params)


def catalog_case(case: str) -> CatalogCase:
    try:
        return _BY_CASE[case]
    except KeyError:
        raise UnknownCaseError(f"unknown case {case!r}") from None
