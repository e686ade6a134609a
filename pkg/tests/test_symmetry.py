import random

import pytest

from stackygit.errors import (
    InfiniteStabilizerError,
    NoGroundFormsError,
    UnknownCaseError,
    ZeroParameterError,
)
from stackygit.exprparse import form
from stackygit.groups import GroupSpec, group_elements, group_generators
from stackygit.symmetry import (
    CATALOG,
    NUMBERED_CASES,
    catalog_case,
    catalog_stabilizer,
    ground_forms,
    has_finite_stabilizer,
    is_stable,
    klein_generate,
    semi_invariance,
    special_form,
)


class TestSemiInvariance:
    def test_quartic_case_one(self):
        assert semi_invariance(form("x^4 + y^4"), GroupSpec("D", 4)) is not None

    def test_quartic_fails_tetrahedral(self):
        assert semi_invariance(form("x^4 + y^4"), GroupSpec("T")) is None

    def test_octahedral_ground_form(self):
        assert semi_invariance(form("x*y*(x^4 - y^4)"), GroupSpec("O")) is not None

    def test_character_is_multiplicative(self):
        rng = random.Random(31)
        for case_id, label in [("quintic.V", "D5"), ("sextic.VI", "O"),
                               ("quartic.II", "T")]:
            f = special_form(case_id)
            spec = GroupSpec.parse(label)
            cert = semi_invariance(f, spec)
            gens = group_generators(spec)
            for _ in range(20):
                word = [rng.randrange(len(gens)) for _ in range(rng.randint(1, 5))]
                matrix = gens[word[0]]
                for k in word[1:]:
                    matrix = matrix * gens[k]
                lam = cert.scalar_for_word(word)
                assert f.substitute(matrix) == lam * f


class TestGroundForms:
    @pytest.mark.parametrize("label, nu", [
        ("D3", (2, 2, 3)), ("D5", (2, 2, 5)),
        ("T", (3, 3, 2)), ("O", (4, 3, 2)), ("I", (5, 3, 2)),
    ])
    def test_nu_values(self, label, nu):
        gf = ground_forms(GroupSpec.parse(label))
        assert gf.nu == nu
        # integrality: |G| divisible by 2 deg F_i
        for g in gf.forms:
            assert gf.group.order % (2 * g.degree) == 0

    @pytest.mark.parametrize("label", ["D2", "D4", "D6", "T", "O", "I"])
    def test_ground_forms_semi_invariant(self, label):
        spec = GroupSpec.parse(label)
        for g in ground_forms(spec).forms:
            assert semi_invariance(g, spec) is not None

    def test_cyclic_groups_have_none(self):
        with pytest.raises(NoGroundFormsError):
            ground_forms(GroupSpec("C", 4))


class TestKlein:
    def test_cyclic_shape(self):
        f = klein_generate(GroupSpec("C", 2), 1, 0, 0, [(1, 1), (2, 3)])
        # x (x^2 + y^2)(2 x^2 + 3 y^2), expanded
        assert f == form("x*(x^2 + y^2)*(2*x^2 + 3*y^2)")

    def test_dihedral_sextic_shape(self):
        f = klein_generate(GroupSpec("D", 3), 0, 0, 0, [(2, 3)])
        assert f == form("2*(x^3 + y^3)^2 + 3*(x^3 - y^3)^2")

    def test_empty_product_is_one(self):
        f = klein_generate(GroupSpec("T"), 0, 0, 0, [])
        assert f.degree == 0 and f.a(0) == 1

    def test_zero_parameter_rejected(self):
        with pytest.raises(ZeroParameterError):
            klein_generate(GroupSpec("D", 3), 0, 0, 0, [(0, 0)])

    @pytest.mark.parametrize("label", ["C2", "C5", "D3", "D6", "T", "O", "I"])
    def test_outputs_semi_invariant(self, label):
        # quick spot suite; the acceptance criterion runs 100 draws per group
        spec = GroupSpec.parse(label)
        rng = random.Random(37)
        for _ in range(10):
            cap = 1 if spec.kind in ("O", "I") else 2
            alpha, beta = rng.randint(0, cap), rng.randint(0, cap)
            gamma = rng.randint(0, cap)
            params = [(rng.randint(1, 4), rng.randint(1, 4))
                      for _ in range(rng.randint(0, 1))]
            if not (alpha or beta or gamma or params):
                alpha = 1
            f = klein_generate(spec, alpha, beta, gamma, params)
            assert semi_invariance(f, spec) is not None
            if spec.kind == "C":
                expected = alpha + beta + len(params) * spec.n
            else:
                degs = [g.degree for g in ground_forms(spec).forms]
                expected = (alpha * degs[0] + beta * degs[1] + gamma * degs[2]
                            + len(params) * spec.order // 2)
            assert f.degree == expected


class TestStability:
    def test_triple_root_quintic_not_stable(self):
        assert not is_stable(form("x^3*(x^2 + y^2)"))

    def test_six_simple_roots_stable(self):
        assert is_stable(form("x^6 + y^6"))

    def test_triple_root_sextic_not_stable(self):
        assert not is_stable(form("x^3*y^3"))

    def test_double_root_quintic_stable(self):
        assert is_stable(form("x^2*(x^3 + y^3)"))

    def test_finite_stabilizer_dichotomy(self):
        assert not has_finite_stabilizer(form("x^3*y^2"))
        assert has_finite_stabilizer(form("x^5 + y^5"))
        assert has_finite_stabilizer(form("x^2*y^2*(x + y)"))


class TestCatalog:
    @pytest.mark.parametrize("case", [c.case for c in CATALOG])
    def test_stabilizers_match(self, case):
        entry = catalog_case(case)
        f = entry.build()
        assert [s.label for s in catalog_stabilizer(f)] == [entry.group.label]

    def test_quintic_examples(self):
        assert [s.label for s in catalog_stabilizer(form("x^5 + y^5"))] == ["D5"]
        assert [s.label for s in catalog_stabilizer(form("x^6 + y^6"))] == ["D6"]
        assert [s.label for s in
                catalog_stabilizer(form("x^2*(x^3 + y^3)"))] == ["C3"]

    def test_fifteen_numbered_cases(self):
        assert len(NUMBERED_CASES) == 15

    def test_infinite_stabilizer_rejected(self):
        with pytest.raises(InfiniteStabilizerError):
            catalog_stabilizer(form("x^3*y^4"))

    def test_unknown_case(self):
        with pytest.raises(UnknownCaseError):
            special_form("septic.I")

    def test_parameterized_cases_at_second_values(self):
        f = special_form("quintic.I", ((5, 7),))
        assert [s.label for s in catalog_stabilizer(f)] == ["C2"]
        g = special_form("sextic.IV", ((1, 6),))
        assert [s.label for s in catalog_stabilizer(g)] == ["D3"]
