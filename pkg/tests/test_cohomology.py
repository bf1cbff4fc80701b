import pytest
from gmpy2 import mpq

from orbigw import (DomainError, ValidationError, admissible_basis, enumerate_sectors,
                    enumerate_special_cycles, pairing, resolve_extension, sector,
                    validate_target)
from orbigw.cohomology import cycle_class_in_basis, make_class

X7 = validate_target((1, 1, 1, 1, 3), (7,))
X17 = validate_target((2, 2, 3, 3, 7), (17,))
X24 = validate_target((1, 4, 4, 6, 9), (24,))


@pytest.mark.parametrize("weights, degrees, message", [
    ((1, 1, 1, 1, 3), (6,), "Calabi-Yau"),
    ((1, 1, 1, 1, 1), (2, 3), "equations"),
    ((2, 2, 2, 2, 2), (10,), "gcd"),
    ((0, 1, 1, 1, 1), (4,), "positive"),
])
def test_invalid_targets(weights, degrees, message):
    with pytest.raises(ValidationError, match=message):
        validate_target(weights, degrees)


def test_x7_sectors():
    secs = [(s.label, s.dimension, s.age) for s in enumerate_sectors(X7)]
    assert secs == [("0", 3, 0), ("1/3", 0, 1), ("2/3", 0, 2)]


def test_x17_sectors_and_extension_classes():
    secs = {s.label: (s.dimension, s.age) for s in enumerate_sectors(X17)}
    assert secs["1/2"] == (1, 1) and secs["1/3"] == (1, 1) and secs["1/7"] == (0, 1)
    _, phis = admissible_basis(X17)
    # canonical order: ascending alpha
    assert [c.label for c in phis] == ["1_{1/7}", "1_{1/3}", "1_{1/2}", "1_{4/7}",
                                       "1_{2/3}", "1_{5/7}"]


def test_x24_admissible_basis():
    full, phis = admissible_basis(X24)
    degrees = {c.label: c.cr_degree for c in full}
    printed = {"1": 0, "H": 2, "H^2": 4, "H^3": 6, "1_{1/9}": 2, "1_{2/9}": 4, "1_{4/9}": 4,
               "1_{5/9}": 2, "1_{7/9}": 2, "1_{8/9}": 4, "1_{1/4}": 2, "1_{1/2}": 2,
               "1_{3/4}": 4, "1_{1/3}": 2, "1_{2/3}": 4, "1_{1/3}[x3]": 2, "1_{2/3}[x3]": 4}
    for label, deg in printed.items():
        assert degrees[label] == deg
    # the sector 1/2 is a curve, so it also carries H*1_{1/2}
    assert set(degrees) - set(printed) == {"H*1_{1/2}"}
    assert len(phis) == 7


def test_x24_special_cycles_split_the_two_points():
    cycles = enumerate_special_cycles(X24, sector(X24, "1/3"))
    assert [(c.vanishing, c.open_mass) for c in cycles] == [((), mpq(1, 3)), ((3,), mpq(1, 9))]
    six = enumerate_special_cycles(X24, sector(X24, "1/4"))
    assert [(c.vanishing, c.open_mass) for c in six] == [((), mpq(3, 2))]


def test_special_cycles_need_points():
    with pytest.raises(DomainError):
        enumerate_special_cycles(X24, sector(X24, "1/2"))


def test_pairings():
    assert pairing(X7, make_class(X7, 0, 1), make_class(X7, 0, 2)) == mpq(7, 3)
    assert pairing(X7, make_class(X7, "1/3", 0, ()), make_class(X7, "2/3", 0, ())) == mpq(1, 3)
    assert pairing(X7, make_class(X7, "1/3", 0, ()), make_class(X7, "1/3", 0, ())) == 0
    assert pairing(X24, make_class(X24, "1/2"), make_class(X24, "1/2", 1)) == mpq(1, 4)
    g1 = make_class(X24, "1/3", 0, (3,))
    g2 = make_class(X24, "2/3", 0, (3,))
    assert pairing(X24, g1, g2) == mpq(1, 9)
    assert pairing(X24, make_class(X24, "1/3", 0, ()), g2) == mpq(1, 9)
    assert pairing(X24, make_class(X24, "1/3", 0, ()), make_class(X24, "2/3", 0, ())) == \
        mpq(4, 9)


def test_gerbe_order_normalization_scales_curve_sectors():
    c = make_class(X24, "1/2")
    assert pairing(X24, c, make_class(X24, "1/2", 1), "gerbe-order") == mpq(1, 2)


def test_cycle_class_in_basis():
    # the closed point stratum {x3 = 0} is gamma itself; the whole sector is 1
    assert cycle_class_in_basis(X24, "1/3", (3,)) == {(3,): 1}
    assert cycle_class_in_basis(X24, "1/3", ()) == {(): 1}


def test_resolve_extension():
    phis = resolve_extension(X24, [{"alpha": "1/3", "cycle": [3]}, {"alpha": "1/2"}])
    assert [c.label for c in phis] == ["1_{1/3}[x3]", "1_{1/2}"]
    assert resolve_extension(X7, "auto") == admissible_basis(X7)[1]


@pytest.mark.parametrize("descriptors, message", [
    ([{"alpha": "2/3"}], "degree-2"),
    ([{"alpha": "1/3"}, {"alpha": "1/3"}], "twice"),
    ([{"alpha": "1/5"}], "empty"),
    ([{"nope": 1}], "alpha"),
])
def test_resolve_extension_errors(descriptors, message):
    with pytest.raises(ValidationError, match=message):
        resolve_extension(X7, descriptors)


def test_cycle_on_curve_sector_rejected():
    with pytest.raises(ValidationError, match="dimension-0"):
        resolve_extension(X24, [{"alpha": "1/2", "cycle": [1]}])
