import pytest
from gmpy2 import mpq

import oracles
import reference_data as P
from orbigw import assemble_I, build_extended_git, resolve_extension, validate_target
from orbigw.cohomology import make_class
from orbigw.extended_git import curve_class
from orbigw.ifunction import CohomValue, class_contribution, components, dump_I, times_H

X7 = validate_target((1, 1, 1, 1, 3), (7,))
QUINTIC = validate_target((1, 1, 1, 1, 1), (5,))


def _git(target, ext="auto"):
    return build_extended_git(target, resolve_extension(target, ext))


def test_x7_untwisted_terms_match_the_product_formula():
    git = _git(X7)
    I = assemble_I(git, 6)
    comps = components(I)
    for d0 in range(7):
        for d1 in range(7 - d0):
            want = oracles.x7_untwisted_term(d0, d1)
            if want is None:
                continue
            for p in range(4):
                ser = comps.get((make_class(X7, 0, p), -p))
                got = ser.coefficient((d0, d1)) if ser is not None else 0
                assert got == want[p], (d0, d1, p)


def test_quintic_terms_match_the_product_formula():
    I = assemble_I(_git(QUINTIC), 4)
    comps = components(I)
    for d in range(5):
        want = oracles.quintic_term(d)
        for p in range(4):
            assert comps[(make_class(QUINTIC, 0, p), -p)].coefficient((d,)) == want[p]


@pytest.mark.parametrize("weights, degrees, ext", [
    ((1, 1, 1, 1, 3), (7,), "auto"),
    ((1, 1, 1, 1, 1, 3), (4, 4), "auto"),
    ((1, 4, 4, 6, 9), (24,), P.X24_EXTENSION),
    ((2, 2, 3, 3, 7), (17,), "auto"),
])
def test_every_term_is_homogeneous(weights, degrees, ext):
    # q variables have degree 0, so the class degree balances the z power
    target = validate_target(weights, degrees)
    for (cls, s), ser in components(assemble_I(_git(target, ext), 4)).items():
        assert cls.cr_degree == -2 * s, (cls.label, s)


def test_x7_first_twisted_terms():
    I = assemble_I(_git(X7), 3)
    comps = components(I)
    phi = make_class(X7, "1/3", 0, ())
    # q1 contributes phi/z exactly once
    assert dict(comps[(phi, -1)].items())[(0, 1)] == 1
    twisted = comps[(make_class(X7, "2/3", 0, ()), -2)]
    # (7/3)(4/3)(1/3) / (1/3)^4 on the point sector
    assert twisted.coefficient((1, 0)) == 84
    assert twisted.coefficient((0, 2)) == mpq(1, 2)


def test_truncation_zero_is_the_unit():
    I = assemble_I(_git(X7), 0)
    assert [d for d, _ in I.items()] == [(0, 0)]
    assert I.coefficient((0, 0)) == CohomValue.unit(X7)


def test_class_contribution_record():
    git = _git(X7)
    rec = class_contribution(git, curve_class(git, (0, 1)))
    assert rec.target_alpha == mpq(1, 3) and rec.vdeg == 0 and rec.scale == 1


def test_cohomology_value_arithmetic():
    one = CohomValue.unit(X7)
    H = CohomValue(X7, {(make_class(X7, 0, 1), -1): mpq(1)})
    assert (H * H).data == {(make_class(X7, 0, 2), -2): 1}
    assert not (H * H * H * H)
    assert (one + H - H) == one
    assert times_H(X7, make_class(X7, "1/3", 0, ()), 1) is None


def test_dump_is_stable():
    git = _git(X7)
    a = dump_I(assemble_I(git, 3))
    b = dump_I(assemble_I(git, 3))
    assert a == b
    assert a[0] == {"d": [0, 0], "alpha": "0", "class": "1", "power": 0, "z": 0, "value": "1"}
