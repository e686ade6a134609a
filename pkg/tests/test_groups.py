import pytest

from stackygit.cyclotomic import zeta
from stackygit.errors import ClosureBoundExceededError
from stackygit.groups import (
    GroupSpec,
    SL2Matrix,
    group_contains,
    group_elements,
    group_generators,
)


def test_c1_generator_is_minus_identity():
    (g,) = group_generators(GroupSpec("C", 1))
    assert g == SL2Matrix(-1, 0, 0, -1)


def test_octahedral_fourth_generator():
    gens = group_generators(GroupSpec("O"))
    assert len(gens) == 4
    # (1/sqrt2) diag(1+i, 1-i) reduces to diag(zeta_8, zeta_8^-1)
    assert gens[3] == SL2Matrix.diagonal(zeta(8), zeta(8) ** 7)


def test_icosahedral_generators_over_fifth_roots():
    gens = group_generators(GroupSpec("I"))
    assert len(gens) == 2
    assert gens[0] == SL2Matrix.diagonal(zeta(5) ** 3, zeta(5) ** 2)
    assert all(g.det() == 1 for g in gens)


@pytest.mark.parametrize("label, order", [
    ("C1", 2), ("C3", 6), ("C6", 12),
    ("D1", 4), ("D3", 12), ("D5", 20), ("D6", 24),
    ("T", 24), ("O", 48), ("I", 120),
])
def test_group_orders(label, order):
    spec = GroupSpec.parse(label)
    elements = group_elements(spec)
    assert len(elements) == order == spec.order
    assert all(m.det() == 1 for m in elements)


def test_closure_is_deterministic():
    a = group_elements(GroupSpec("T"))
    b = group_elements(GroupSpec("T"))
    assert list(a) == list(b)


def test_standard_containments():
    assert group_contains(GroupSpec("O"), GroupSpec("T"))
    assert group_contains(GroupSpec("T"), GroupSpec("D", 2))
    assert group_contains(GroupSpec("O"), GroupSpec("D", 4))
    assert group_contains(GroupSpec("I"), GroupSpec("C", 5))
    assert group_contains(GroupSpec("D", 6), GroupSpec("D", 3))
    assert group_contains(GroupSpec("C", 12), GroupSpec("C", 4))
    assert not group_contains(GroupSpec("T"), GroupSpec("C", 3))
    assert not group_contains(GroupSpec("I"), GroupSpec("D", 5))
    assert not group_contains(GroupSpec("D", 5), GroupSpec("D", 3))


def test_closure_bound(monkeypatch):
    import stackygit.groups as groups
    monkeypatch.setattr(groups, "CLOSURE_BOUND", 10)
    group_elements.cache_clear()
    with pytest.raises(ClosureBoundExceededError):
        group_elements(GroupSpec("T"))
    group_elements.cache_clear()


def test_matrix_inverse():
    m = SL2Matrix(1, 2, 1, 3)
    assert m * m.inverse() == SL2Matrix.identity()


def test_spec_parse_errors():
    with pytest.raises(ValueError):
        GroupSpec.parse("Q8")
    with pytest.raises(ValueError):
        GroupSpec("C", 0)
    with pytest.raises(ValueError):
        GroupSpec("T", 3)
