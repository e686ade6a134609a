import random

import pytest

from stackygit.cyclotomic import QQ, sqrt_minus3, zeta
from stackygit.errors import (
    NonStableError,
    OrderTooLargeError,
    UnderDeterminedError,
    UnknownFamilyError,
    WrongDegreeError,
)
from stackygit.exprparse import form
from stackygit.groups import SL2Matrix
from stackygit.invariants import (
    QUINTIC_RECIPE,
    SEXTIC_RECIPE,
    RecipeStep,
    calibrate_invariants,
    catalog_ring,
    evaluate_recipe,
    quartic_invariants,
    quartic_point,
    quintic_F,
    resultant,
    sextic_F,
    transvectant,
)
from stackygit.locus import PointW
from stackygit.polynomials import BinaryForm, MultiPoly, WeightedGrading


def _random_sl2(rng):
    while True:
        a = QQ(rng.randint(-5, 5), rng.randint(1, 3))
        if a:
            break
    b = QQ(rng.randint(-5, 5), rng.randint(1, 3))
    c = QQ(rng.randint(-5, 5), rng.randint(1, 3))
    return SL2Matrix(a, b, c, (1 + b * c) / a)


class TestCatalogRing:
    def test_quartic_free(self):
        entry = catalog_ring("quartic")
        assert entry.ring.weights == (2, 3) and entry.ring.relation is None

    def test_quintic(self):
        entry = catalog_ring("quintic")
        assert entry.ring.weights == (4, 8, 12, 18)
        assert entry.F.weighted_degree(WeightedGrading((4, 8, 12))) == 36

    def test_cubic_surface_placeholder(self):
        entry = catalog_ring("cubic-surface")
        assert entry.ring.weights == (8, 16, 24, 32, 40, 100)
        w = WeightedGrading((8, 16, 24, 32, 40))
        assert entry.F.weighted_degree(w) == 200
        assert entry.notes  # placeholder is flagged

    def test_unknown_family(self):
        with pytest.raises(UnknownFamilyError):
            catalog_ring("octic")


class TestQuarticInvariants:
    def test_power_sum_quartic(self):
        inv = quartic_invariants(form("x^4 + y^4"))
        assert inv.I2 == 1 and inv.I3 == 0

    def test_tetrahedral_quartic(self):
        inv = quartic_invariants(form("x^4 + 2*sqrtm3*x^2*y^2 + y^4"))
        # binomial weighting puts sqrt(-3)/3 in the middle; hand value 4/9 sqrt(-3)
        assert inv.I2 == 0
        assert inv.I3 == QQ(4, 9) * sqrt_minus3()

    def test_invariance(self):
        rng = random.Random(29)
        f = form("x^4 - 2*x^3*y + 5*x*y^3 - y^4")
        base = quartic_invariants(f)
        for _ in range(100):
            m = _random_sl2(rng)
            after = quartic_invariants(f.substitute(m))
            assert after.I2 == base.I2 and after.I3 == base.I3

    def test_wrong_degree(self):
        with pytest.raises(WrongDegreeError):
            quartic_invariants(form("x^3 + y^3"))

    def test_points(self):
        w = WeightedGrading((2, 3))
        assert quartic_point(form("x^4 + y^4")) == PointW((1, 0), w)
        assert quartic_point(
            form("x^4 + 2*sqrtm3*x^2*y^2 + y^4")) == PointW((0, 1), w)

    def test_generic_point_has_no_zero(self):
        f = 2 * form("(x^2 + y^2)^2") + 3 * form("(x^2 - y^2)^2")
        p = quartic_point(f)
        assert all(p.coordinates)

    def test_point_needs_stability(self):
        with pytest.raises(NonStableError):
            quartic_point(form("x^2*(x^2 + y^2)"))

    def test_discriminant_combination(self):
        rng = random.Random(43)
        for _ in range(20):
            a = rng.randint(-4, 4)
            rest = BinaryForm([rng.randint(-4, 4) for _ in range(3)])
            if not rest:
                continue
            f = BinaryForm([1, -2 * a, a * a]) * rest
            inv = quartic_invariants(f)
            assert inv.I2 ** 3 - 27 * inv.I3 ** 2 == 0


class TestTransvectant:
    def test_zeroth_is_product(self):
        f, g = form("x^3 + y^3"), form("x^2 - 3*y^2")
        assert transvectant(f, g, 0) == f * g

    def test_odd_self_transvectants_vanish(self):
        f = form("x^4 + 2*x*y^3 - y^4")
        assert transvectant(f, f, 1).is_zero()
        assert transvectant(f, f, 3).is_zero()

    def test_order_too_large(self):
        with pytest.raises(OrderTooLargeError):
            transvectant(form("x^2"), form("x^3"), 3)

    def test_fourth_transvectant_calibrates_to_I2(self):
        # two-point calibration: compute the constant at x^4 + y^4, then
        # verify it on ten more quartics
        f0 = form("x^4 + y^4")
        c = transvectant(f0, f0, 4).a(0) / quartic_invariants(f0).I2
        rng = random.Random(47)
        for _ in range(10):
            f = BinaryForm([rng.randint(-5, 5) for _ in range(5)])
            if not f:
                continue
            assert transvectant(f, f, 4).a(0) == c * quartic_invariants(f).I2

    def test_second_chain_calibrates_to_I3(self):
        def j3(f):
            return transvectant(f, transvectant(f, f, 2), 4).a(0)

        f0 = form("x^4 + x^3*y + y^4")
        c = j3(f0) / quartic_invariants(f0).I3
        rng = random.Random(53)
        for _ in range(10):
            f = BinaryForm([rng.randint(-5, 5) for _ in range(5)])
            if not f or not quartic_invariants(f).I3:
                continue
            assert j3(f) == c * quartic_invariants(f).I3

    def test_equivariance(self):
        rng = random.Random(59)
        for _ in range(50):
            d, e = rng.randint(2, 4), rng.randint(2, 4)
            r = rng.randint(0, 2)
            f = BinaryForm([rng.randint(-4, 4) for _ in range(d + 1)])
            g = BinaryForm([rng.randint(-4, 4) for _ in range(e + 1)])
            if not f or not g:
                continue
            m = _random_sl2(rng)
            left = transvectant(f.substitute(m), g.substitute(m), r)
            right = transvectant(f, g, r).substitute(m)
            assert left == right

    def test_resultant_of_common_factor_vanishes(self):
        common = form("x - 2*y")
        f = common * form("x + y")
        g = common * form("x^2 + y^2")
        assert not resultant(f, g)
        assert resultant(form("x"), form("y")) == 1


class TestRelationPolynomials:
    def test_quintic_values(self):
        F = quintic_F()
        assert F.weighted_degree(WeightedGrading((4, 8, 12))) == 36
        assert (F * 324).evaluate((0, 0, 1)) == 144
        assert (F * 324).evaluate((1, 0, 0)) == 0

    def test_sextic_degree_and_entry(self):
        F = sextic_F()
        wd = WeightedGrading((2, 4, 6, 10))
        assert F.weighted_degree(wd) == 30
        # every single term is of degree 30
        assert all(
            sum(w * k for w, k in zip(wd, e)) == 30 for e in F.terms)

    def test_sextic_a12_entry(self):
        from stackygit.invariants import _sextic_matrix

        m = _sextic_matrix()
        v = ("I2", "I4", "I6", "I10")
        expected = QQ(2, 3) * (MultiPoly.variable(v, "I4") ** 2
                               + MultiPoly.variable(v, "I2")
                               * MultiPoly.variable(v, "I6"))
        assert m[0][1] == expected
        assert m[0][1].weighted_degree(WeightedGrading((2, 4, 6, 10))) == 8

    def test_sextic_coordinate_pattern(self):
        F = sextic_F()
        values = [F.evaluate(p) for p in
                  ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))]
        assert sum(1 for v in values if not v) == 1
        zero_index = next(i for i, v in enumerate(values) if not v)
        point = [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)][zero_index]
        assert any(d.evaluate(point) for d in F.partials())


class TestCalibration:
    def test_quintic_succeeds(self):
        result = calibrate_invariants("quintic", QUINTIC_RECIPE)
        assert result.succeeded
        assert result.scalars["I4"] == 1
        assert result.scalars["I8"] == QQ(1, 2)
        assert result.scalars["I12"] == QQ(-1, 4)
        # the top scalar squares to 2/3^12
        assert result.scalars["I18"] ** 2 == QQ(2, 531441)

    def test_sextic_succeeds(self):
        result = calibrate_invariants("sextic", SEXTIC_RECIPE)
        assert result.succeeded
        assert result.scalars["I15"] ** 2 == 25

    def test_zero_invariant_is_under_determined(self):
        bad = QUINTIC_RECIPE[:-1] + (
            RecipeStep("I18", "trans", ("i", "i"), 1),)  # (i, i)^1 = 0
        with pytest.raises(UnderDeterminedError):
            calibrate_invariants("quintic", bad)

    def test_wrong_recipe_reports_failure(self):
        # swap the degree-8 construction for a degenerate square
        steps = []
        for step in QUINTIC_RECIPE:
            if step.name == "I8":
                steps.append(RecipeStep("i2", "pow", ("i",), 2))
                steps.append(RecipeStep("I8", "trans", ("i2", "i2"), 4))
            else:
                steps.append(step)
        result = calibrate_invariants("quintic", tuple(steps))
        assert not result.succeeded
        assert result.detail

    def test_quartic_family_has_no_relation(self):
        with pytest.raises(UnknownFamilyError):
            calibrate_invariants("quartic", QUINTIC_RECIPE)

    def test_recipe_evaluation_names(self):
        env = evaluate_recipe(QUINTIC_RECIPE, form("x^5 + x*y^4 + y^5"))
        assert {"I4", "I8", "I12", "I18"} <= set(env)
        assert env["I18"].degree == 0
