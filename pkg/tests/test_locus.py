import random

import pytest

from stackygit.cyclotomic import QQ, zeta
from stackygit.errors import InhomogeneousError, WeightMismatchError
from stackygit.invariants import quintic_F, sextic_F
from stackygit.locus import (
    PointW,
    is_singular_at,
    on_divisor,
    quintic_locus_report,
    sextic_locus_report,
)
from stackygit.polynomials import MultiPoly, WeightedGrading

W123 = WeightedGrading((1, 2, 3))


class TestPointW:
    def test_weighted_rescaling_equality(self):
        p = PointW((-3, 3, 3), W123)
        rng = random.Random(61)
        for _ in range(20):
            t = QQ(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice([1, -1])
            assert p.rescaled(t) == p

    def test_cyclotomic_rescaling(self):
        p = PointW((1, 1, 1), W123)
        assert p.rescaled(zeta(8)) == p

    def test_distinct_points(self):
        assert PointW((0, 1, 0), W123) != PointW((0, 0, 1), W123)
        assert PointW((1, 1, 1), W123) != PointW((1, 1, 2), W123)

    def test_torsion_twist_equality(self):
        # (1, 1) and (1, -1) in P(2, 3) ARE equal: t = -1 fixes the first
        # coordinate and flips the second.  With weights (2, 4) they are
        # not: t^2 = 1 forces t^4 = 1.
        w23 = WeightedGrading((2, 3))
        assert PointW((1, 1), w23) == PointW((1, -1), w23)
        w24 = WeightedGrading((2, 4))
        assert PointW((1, 1), w24) != PointW((1, -1), w24)

    def test_not_all_zero(self):
        with pytest.raises(ValueError):
            PointW((0, 0, 0), W123)


class TestDivisorChecks:
    def test_on_divisor_values(self):
        F = quintic_F()
        assert on_divisor(F, W123, PointW((0, 1, 0), W123))
        assert not on_divisor(F, W123, PointW((0, 0, 1), W123))
        assert on_divisor(F, W123, PointW((-3, 3, 3), W123))

    def test_divisor_membership_is_rescaling_invariant(self):
        F = quintic_F()
        rng = random.Random(67)
        for coords in ((1, 0, 0), (0, 1, 0), (-3, 3, 3), (1, 1, 1)):
            p = PointW(coords, W123)
            base = on_divisor(F, W123, p)
            sing = is_singular_at(F, W123, p)
            for _ in range(20):
                t = QQ(rng.randint(1, 7), rng.randint(1, 7))
                q = p.rescaled(t)
                assert on_divisor(F, W123, q) == base
                assert is_singular_at(F, W123, q) == sing

    def test_singularities(self):
        F = quintic_F()
        assert is_singular_at(F, W123, PointW((1, 0, 0), W123))
        assert is_singular_at(F, W123, PointW((-3, 3, 3), W123))
        assert not is_singular_at(F, W123, PointW((0, 1, 0), W123))

    def test_inhomogeneous_rejected(self):
        bad = MultiPoly(("a", "b", "c"), {(1, 0, 0): 1, (0, 0, 1): 1})
        with pytest.raises(InhomogeneousError):
            on_divisor(bad, W123, PointW((1, 0, 0), W123))

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatchError):
            on_divisor(quintic_F(), W123,
                       PointW((1, 0, 0), WeightedGrading((1, 2, 4))))


class TestEulerRelation:
    @pytest.mark.parametrize("F, weights, degree", [
        (quintic_F(), (1, 2, 3), 9),
        (sextic_F(), (2, 4, 6, 10), 30),
    ])
    def test_euler(self, F, weights, degree):
        total = MultiPoly.zero(F.variables)
        for i, d in enumerate(F.partials()):
            total = total + MultiPoly.variable(F.variables, F.variables[i]) \
                * d * weights[i]
        assert total == F * degree


class TestReports:
    def test_quintic_report_all_verified(self):
        report = quintic_locus_report()
        assert report.all_sound()
        assert report.verdict_counts() == \
            {"verified": 4, "refuted": 0, "out-of-scope": 0}

    def test_quintic_claim_labels(self):
        labels = [c.label for c in quintic_locus_report().claims]
        assert labels == [
            "divisor-is-extra-involution-locus",
            "ambient-singular-points",
            "divisor-singular-points",
            "divisor-through-one-ambient-singularity",
        ]

    def test_quintic_numbering_note_recorded(self):
        report = quintic_locus_report()
        claim = {c.label: c for c in report.claims}["divisor-singular-points"]
        assert "typo" in claim.note

    def test_sextic_report(self):
        report = sextic_locus_report()
        assert report.all_sound()
        assert report.verdict_counts() == \
            {"verified": 3, "refuted": 0, "out-of-scope": 4}

    def test_sextic_claim_labels(self):
        labels = [c.label for c in sextic_locus_report().claims]
        assert labels == [
            "divisor-is-extra-involution-locus",
            "ambient-singular-points",
            "singular-locus-two-curves",
            "curve-III-singular-point",
            "curve-IV-singular-point",
            "curves-intersection",
            "divisor-at-ambient-singularities",
        ]

    def test_labels_unique(self):
        for report in (quintic_locus_report(), sextic_locus_report()):
            labels = [c.label for c in report.claims]
            assert len(labels) == len(set(labels))

    def test_json_round_trip(self):
        import json

        payload = sextic_locus_report().as_dict()
        again = json.loads(json.dumps(payload))
        assert again["family"] == "sextic"
        assert len(again["claims"]) == 7
