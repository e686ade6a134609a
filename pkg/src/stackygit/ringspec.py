"""The ring-spec text format.

One generator per line as ``name : weight``; an optional ``relation:``
line with a polynomial expression over the generators; an optional
``field: zeta(m)`` line choosing the coefficient field.  Blank lines and
``#`` comments are ignored.  The writer clears denominators in the
relation (a relation is only meaningful up to a nonzero scalar), so
emitted files stay inside the expression grammar.
"""

from __future__ import annotations

import re
from math import gcd

from .cyclotomic import QQ
from .errors import RingSpecError
from .exprparse import lower_to_multipoly, parse_poly
from .graded import GradedRingPresentation
from .polynomials import MultiPoly

_GEN_LINE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)\s*:\s*(\d+)$")
_FIELD_LINE = re.compile(r"^field\s*:\s*zeta\((\d+)\)$")


def loads(text: str) -> GradedRingPresentation:
    generators, weights = [], []
    relation_text = None
    field_order = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("relation"):
            _, _, rhs = line.partition(":")
            if relation_text is not None:
                raise RingSpecError(f"line {lineno}: second relation line")
            relation_text = rhs.strip()
            if not relation_text:
                raise RingSpecError(f"line {lineno}: empty relation")
            continue
        m = _FIELD_LINE.match(line)
        if m:
            field_order = int(m.group(1))
            continue
        m = _GEN_LINE.match(line)
        if m:
            generators.append(m.group(1))
            weights.append(int(m.group(2)))
            continue
        raise RingSpecError(f"line {lineno}: cannot parse {raw.strip()!r}")
    if not generators:
        raise RingSpecError("no generators")
    relation = None
    if relation_text is not None:
        relation = lower_to_multipoly(parse_poly(relation_text), tuple(generators))
    return GradedRingPresentation(
        tuple(generators), tuple(weights), relation, field_order)


def load(path) -> GradedRingPresentation:
    with open(path, encoding="utf-8") as handle:
        return loads(handle.read())


def dumps(ring: GradedRingPresentation) -> str:
    lines = [f"{g} : {w}" for g, w in zip(ring.generators, ring.weights)]
    if ring.field_order > 1:
        lines.append(f"field: zeta({ring.field_order})")
    if ring.relation is not None:
        lines.append(f"relation: {_integral(ring.relation)}")
    return "\n".join(lines) + "\n"


def dump(ring: GradedRingPresentation, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(ring))


def _integral(poly: MultiPoly) -> MultiPoly:
    """Scale a relation so every coefficient coordinate is an integer."""
    lcm = 1
    for c in poly.terms.values():
        for q in c.coeffs:
            d = int(q.denominator)
            lcm = lcm * d // gcd(lcm, d)
    return poly * QQ(lcm) if lcm > 1 else poly
