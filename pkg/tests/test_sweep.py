from nakatau.algebra import validate_algebra
from nakatau.sweep import connected_algebras, cyclic_kupisch, linear_kupisch, product_algebras, sweep_algebras


def test_family_sizes():
    assert len(connected_algebras()) == 163
    assert len(product_algebras()) == 301
    assert len(sweep_algebras()) == 464
    assert len(linear_kupisch(4)) == 5
    assert len(connected_algebras(up_to_rotation=True)) < 163


def test_members_are_valid():
    for A in sweep_algebras():
        assert validate_algebra(A.to_dict()) == A
        assert 1 <= A.rank <= 4
        assert all(max(c.kupisch) <= c.n + 2 for c in A.components)


def test_cyclic_series_respect_growth():
    for kup in cyclic_kupisch(3, 5):
        assert all(kup[i] <= kup[i - 1] + 1 for i in range(3))
