"""Invariants checked on randomized inputs and on every known target."""

import pytest
from gmpy2 import mpq
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from conftest import TARGETS, run
from orbigw import (TruncatedSeries, assemble_I, build_extended_git, enumerate_sectors,
                    invert_triangular_map, pairing_matrix, resolve_extension, validate_target)
from orbigw.checks import age_duality, derivative_identity, mass_consistency
from orbigw.cohomology import admissible_basis, dual_alpha, sector
from orbigw.extended_git import curve_class, lattice_points, verify_calabi_yau
from orbigw.mirror import check_J_shape
from orbigw.series import Substitution, series_exp, series_log, series_reciprocal

# targets beyond the four reference ones: quintic, sextic, octic, dectic,
# two hypersurfaces with twisted curves or points, and complete intersections
EXTRA_TARGETS = [
    ((1, 1, 1, 1, 1), (5,)), ((1, 1, 1, 1, 2), (6,)), ((1, 1, 1, 1, 4), (8,)),
    ((1, 1, 1, 2, 5), (10,)), ((1, 1, 2, 2, 6), (12,)), ((1, 1, 1, 6, 9), (18,)),
    ((1, 1, 1, 1, 1, 1), (3, 3)), ((1, 1, 1, 1, 1, 1), (2, 4)),
    ((1, 1, 1, 1, 1, 1, 1), (2, 2, 3)), ((1, 1, 1, 1, 1, 2), (3, 4)),
    ((1, 2, 2, 3, 3, 5), (6, 10)),
]
ALL_TARGETS = [validate_target(w, d) for w, d in
               [(w, d) for w, d, _ in TARGETS.values()] + EXTRA_TARGETS]

SETTINGS = settings(max_examples=40, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])

small_rationals = st.builds(lambda p, q: mpq(p, q), st.integers(-9, 9), st.integers(1, 6))


@st.composite
def series_pair(draw, max_vars=8, max_D=6):
    n = draw(st.integers(1, max_vars))
    D = draw(st.integers(0, max_D))
    names = tuple("x%d" % i for i in range(n))

    def one():
        k = draw(st.integers(0, 8))
        terms = {}
        for _ in range(k):
            e = [0] * n
            for _ in range(draw(st.integers(0, D))):
                e[draw(st.integers(0, n - 1))] += 1
            terms[tuple(e)] = draw(small_rationals)
        return terms

    return names, D, one(), one(), one()


def _ser(names, D, terms):
    return TruncatedSeries(names, D, terms)


@SETTINGS
@given(series_pair())
def test_series_ring_axioms(data):
    names, D, a, b, c = data
    A, B, C = (_ser(names, D, t) for t in (a, b, c))
    assert A + B == B + A
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A + TruncatedSeries.zero(names, D) == A
    assert A * TruncatedSeries.one(names, D) == A
    assert A - A == TruncatedSeries.zero(names, D)
    assert dict((A * B).items()) == oracles.naive_mul(a and dict(A.items()), dict(B.items()), D)


@SETTINGS
@given(series_pair(), st.integers(1, 9))
def test_reciprocal_inverts(data, c0):
    names, D, a, _, _ = data
    a = dict(a)
    a[(0,) * len(names)] = mpq(c0)
    A = _ser(names, D, a)
    assert A * series_reciprocal(A) == TruncatedSeries.one(names, D)


@SETTINGS
@given(series_pair(max_vars=4, max_D=5))
def test_exp_log_inverse(data):
    names, D, a, _, _ = data
    a = {e: c for e, c in a.items() if sum(e) > 0}
    A = _ser(names, D, a)
    assert series_log(series_exp(A)) == A


@SETTINGS
@given(series_pair(max_vars=5, max_D=6))
def test_inversion_round_trip(data):
    names, D, a, b, _ = data
    # x_i -> x_i + (degree >= 2 part of a random series)
    hi = {e: c for e, c in list(a.items()) + list(b.items()) if sum(e) >= 2}
    images = {}
    for i, x in enumerate(names):
        shifted = {e: c * (i + 1) for e, c in hi.items()}
        images[x] = TruncatedSeries.variable(x, names, D) + _ser(names, D, shifted)
    ys = tuple("y%d" % i for i in range(len(names)))
    inverse = invert_triangular_map(images, ys)
    back = Substitution(names, inverse, ys)
    for x, y in zip(names, ys):
        assert back.apply(images[x]) == TruncatedSeries.variable(y, ys, D)


@SETTINGS
@given(series_pair(max_vars=4, max_D=6), st.data())
def test_truncation_monotone(data, draw):
    names, D, a, b, _ = data
    E = draw.draw(st.integers(0, D))
    A, B = _ser(names, D, a), _ser(names, D, b)
    assert (A * B).truncate(E) == A.truncate(E) * B.truncate(E)
    assert (A + B).truncate(E) == A.truncate(E) + B.truncate(E)
    one = {(0,) * len(names): mpq(1)}
    U = _ser(names, D, {**a, **one})
    assert series_reciprocal(U).truncate(E) == series_reciprocal(U.truncate(E))


@SETTINGS
@given(series_pair(max_vars=3, max_D=5), st.data())
def test_substitution_is_a_ring_map(data, draw):
    names, D, a, b, c = data
    images = {}
    for i, x in enumerate(names):
        src = draw.draw(st.sampled_from([a, b, c]))
        images[x] = _ser(names, D, {e: v * (i + 1) for e, v in src.items() if sum(e) >= 1})
    sub = Substitution(names, images)
    A, B = _ser(names, D, a), _ser(names, D, b)
    assert sub.apply(A * B) == sub.apply(A) * sub.apply(B)
    assert sub.apply(A + B) == sub.apply(A) + sub.apply(B)


def test_age_duality_every_target():
    for target in ALL_TARGETS:
        assert age_duality(target)["passed"], target.label


def test_mass_consistency_every_target():
    for target in ALL_TARGETS:
        assert mass_consistency(target)["passed"], target.label


@pytest.mark.parametrize("target", ALL_TARGETS, ids=lambda t: t.label)
def test_pairing_symmetric_and_nondegenerate(target):
    pm = pairing_matrix(target)
    n = len(pm.basis)
    for i in range(n):
        for j in range(n):
            assert pm.entries[i][j] == pm.entries[j][i]
            if pm.entries[i][j]:
                a, b = pm.basis[i], pm.basis[j]
                assert b.alpha == dual_alpha(a.alpha)
                assert a.cr_degree + b.cr_degree == 6
    pm.inverse()


@pytest.mark.parametrize("target", ALL_TARGETS, ids=lambda t: t.label)
def test_chen_ruan_degrees_are_symmetric(target):
    full, _ = admissible_basis(target)
    degrees = sorted(c.cr_degree for c in full)
    assert degrees == sorted(6 - d for d in degrees)
    for sec in enumerate_sectors(target):
        assert sec.dimension in (0, 1, 3)


@pytest.mark.parametrize("target", ALL_TARGETS, ids=lambda t: t.label)
def test_extended_git_is_calabi_yau(target):
    _, phis = admissible_basis(target)
    git = build_extended_git(target, phis)
    assert verify_calabi_yau(git.A, git.xi, raise_on_failure=False)


@pytest.mark.parametrize("target", ALL_TARGETS, ids=lambda t: t.label)
def test_lattice_point_round_trip(target):
    _, phis = admissible_basis(target)
    git = build_extended_git(target, phis)
    for d in lattice_points(git.m + 1, 3):
        cc = curve_class(git, d)
        back = [cc.e[0] * git.w + sum(a * e * git.w for a, e in zip(git.alphas, cc.e[1:]))]
        back += [int(e) for e in cc.e[1:]]
        assert tuple(back) == d
        assert cc.alpha == sector(target, -cc.e[0]).alpha


@pytest.mark.parametrize("target", ALL_TARGETS, ids=lambda t: t.label)
def test_derivative_identity_and_j_shape(target):
    from orbigw.mirror import build_mirror_map, extract_mu, invert_mirror_map, j_components
    _, phis = admissible_basis(target)
    git = build_extended_git(target, phis)
    D = 4 if git.m <= 3 else 3
    I = assemble_I(git, D)
    assert derivative_identity(I, git)["passed"]
    mu = extract_mu(I, git)
    J = j_components(I, mu, invert_mirror_map(build_mirror_map(mu, git)))
    check_J_shape(J, git)


@pytest.mark.parametrize("name", ["x7", "x44", "x24"])
def test_i_function_truncation_consistency(name):
    big = run(name, 5).I
    weights, degrees, ext = TARGETS[name]
    target = validate_target(weights, degrees)
    git = build_extended_git(target, resolve_extension(target, ext))
    for E in range(5):
        small = assemble_I(git, E)
        assert {d: v.data for d, v in small.items()} == \
            {d: v.data for d, v in big.items() if sum(d) <= E}
