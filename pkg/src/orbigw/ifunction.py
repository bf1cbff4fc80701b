"""The extended I-function as a power series in q_0..q_m.

For a lattice point d with curve class e the coefficient of q^d is

    1 / prod_a (e_a! z^{e_a})
      * prod_i  prod_{<k> = <beta.chi_i>, beta.chi_i < k <= 0} (w_i H + k z)
              / prod_{<k> = <beta.chi_i>, 0 < k <= beta.chi_i} (w_i H + k z)
      * prod_j  prod_{<k> = <beta.xi_j>, 0 < k <= beta.xi_j} (b_j H + k z)
              / prod_{<k> = <beta.xi_j>, beta.xi_j < k <= 0} (b_j H + k z)
      * 1_beta

on the sector alpha = <-e_0>.  Factors with k = 0 are collected into
H^vdeg times prod w_i / prod b_j.  On positive-dimensional sectors that
multiplies 1_alpha.  On points it cancels the normalisation of 1_beta,
leaving the class of the points of X_alpha where x_i = 0 for every i with
beta.chi_i a negative integer.
"""

from dataclasses import dataclass
from math import factorial

from .cohomology import cycle_class_in_basis, make_class, sector
from .errors import InternalConsistencyError
from .extended_git import enumerate_curve_classes
from .rational import ONE, ZERO, format_rational, is_integer, mpq
from .series import TruncatedSeries

__all__ = ["CohomValue", "ClassContribution", "target_sector", "vdeg", "unit_class",
           "hypergeometric_factor", "class_contribution", "assemble_I",
           "q_variables", "components", "dump_I", "times_H"]


class CohomValue:
    """A finite sum of c * (basis class) * z^s.

    ``data`` maps ``(BasisClass, s)`` to nonzero rationals.  Products are the
    module action of untwisted classes (polynomials in H) on the rest;
    anything else raises.
    """

    __slots__ = ("target", "data")

    def __init__(self, target, data=None):
        self.target = target
        self.data = {k: mpq(v) for k, v in (data or {}).items() if v}

    @classmethod
    def unit(cls, target):
        return cls(target, {(make_class(target, 0, 0), 0): ONE})

    def __bool__(self):
        return bool(self.data)

    def __eq__(self, other):
        if isinstance(other, CohomValue):
            return self.data == other.data
        if other == 0:
            return not self.data
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, CohomValue):
            if other == 0:
                return self
            return self + CohomValue.unit(self.target).scale(other)
        out = dict(self.data)
        for k, v in other.data.items():
            out[k] = out.get(k, ZERO) + v
        return CohomValue(self.target, out)

    __radd__ = __add__

    def __neg__(self):
        return CohomValue(self.target, {k: -v for k, v in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return CohomValue(self.target, {k: v * c for k, v in self.data.items()})

    def __mul__(self, other):
        if not isinstance(other, CohomValue):
            return self.scale(other)
        out = {}
        for (c1, s1), v1 in self.data.items():
            for (c2, s2), v2 in other.data.items():
                if c1.alpha != 0 and c2.alpha != 0:
                    raise InternalConsistencyError("product of two twisted classes is not modelled")
                h, t = (c1, c2) if c1.alpha == 0 else (c2, c1)
                cls = times_H(self.target, t, h.power)
                if cls is not None:
                    key = (cls, s1 + s2)
                    out[key] = out.get(key, ZERO) + v1 * v2
        return CohomValue(self.target, out)

    def __rmul__(self, other):
        return self.scale(other)

    def z_row(self, s):
        return {c: v for (c, t), v in self.data.items() if t == s}

    def __repr__(self):
        if not self.data:
            return "0"
        parts = []
        for (c, s), v in sorted(self.data.items(), key=lambda kv: (-kv[0][1], kv[0][0].key())):
            z = "" if s == 0 else ("*z" if s == 1 else "*z^%d" % s)
            parts.append("%s*%s%s" % (format_rational(v), c.label, z))
        return " + ".join(parts)


def times_H(target, cls, p):
    """H^p * cls, or None when it vanishes."""
    if p == 0:
        return cls
    if cls.cycle is not None:
        return None
    dim = sector(target, cls.alpha).dimension
    if cls.power + p > dim:
        return None
    return make_class(target, cls.alpha, cls.power + p)


def target_sector(cc):
    return cc.alpha


def vdeg(cc):
    return (sum(1 for v in cc.chi_pairings if v < 0 and is_integer(v))
            - sum(1 for v in cc.xi_pairings if v < 0 and is_integer(v)))


def _vanishing_set(cc):
    return tuple(i for i, v in enumerate(cc.chi_pairings) if v < 0 and is_integer(v))


def unit_class(git, cc):
    """({basis class: coeff}, scale) for H^0 * 1_beta with the k = 0 factors folded in."""
    target = git.target
    sec = sector(target, cc.alpha)
    if sec.dimension == 0:
        combo = cycle_class_in_basis(target, sec.alpha, _vanishing_set(cc))
        return {make_class(target, sec.alpha, 0, lam): c for lam, c in combo.items()}, ONE
    scale = ONE
    for i, v in enumerate(cc.chi_pairings):
        if v < 0 and is_integer(v):
            scale *= target.weights[i]
    for j, v in enumerate(cc.xi_pairings):
        if v < 0 and is_integer(v):
            scale /= target.degrees[j]
    return {make_class(target, sec.alpha, 0): ONE}, scale


def _mul_linear(poly, k, c):
    """poly * (k + c u), truncated to len(poly)."""
    for p in range(len(poly) - 1, 0, -1):
        poly[p] = k * poly[p] + c * poly[p - 1]
    poly[0] = k * poly[0]


def _div_linear(poly, k, c):
    """poly / (k + c u), truncated to len(poly); k != 0."""
    inv = ONE / k
    poly[0] = poly[0] * inv
    for p in range(1, len(poly)):
        poly[p] = (poly[p] - c * poly[p - 1]) * inv


def _k_values(v, numerator_side_negative):
    """Nonzero k with <k> = <v> in (v, 0] if the flag is set, else in (0, v]."""
    if numerator_side_negative:
        k = v + 1
        while k <= 0:
            if k:
                yield k
            k += 1
    else:
        k = v
        while k > 0:
            yield k
            k -= 1


def hypergeometric_factor(git, cc):
    """The q^d coefficient of the I-function as a CohomValue."""
    target = git.target
    sec = sector(target, cc.alpha)
    vd = vdeg(cc)
    if vd < 0:
        raise InternalConsistencyError("negative vdeg %d for d=%r on nonempty sector %s"
                                       % (vd, cc.d, sec.label))
    if vd > sec.dimension:
        return CohomValue(target)
    poly = [ONE] + [ZERO] * (sec.dimension - vd)
    zexp = 0
    pref = ONE
    for ea in cc.d[1:]:
        pref /= factorial(ea)
        zexp -= ea
    # the coordinate factors (w_i H + k z)
    for wi, v in zip(target.weights, cc.chi_pairings):
        if v < 0:
            for k in _k_values(v, True):
                _mul_linear(poly, k, wi)
                zexp += 1
        elif v > 0:
            for k in _k_values(v, False):
                _div_linear(poly, k, wi)
                zexp -= 1
    # the equation factors (b_j H + k z)
    for bj, v in zip(target.degrees, cc.xi_pairings):
        if v > 0:
            for k in _k_values(v, False):
                _mul_linear(poly, k, bj)
                zexp += 1
        elif v < 0:
            for k in _k_values(v, True):
                _div_linear(poly, k, bj)
                zexp -= 1
    if vd + sec.age + zexp != 0:
        raise InternalConsistencyError("I-function term for d=%r is not homogeneous" % (cc.d,))
    classes, scale = unit_class(git, cc)
    out = {}
    for p, c in enumerate(poly):
        if not c:
            continue
        for cls, coeff in classes.items():
            hc = times_H(target, cls, p + vd)
            if hc is not None:
                key = (hc, zexp - p)
                out[key] = out.get(key, ZERO) + c * coeff * scale * pref
    return CohomValue(target, out)


@dataclass(frozen=True)
class ClassContribution:
    curve_class: object
    target_alpha: object
    vdeg: int
    scale: object
    factor: CohomValue


def class_contribution(git, cc):
    _, scale = unit_class(git, cc)
    return ClassContribution(cc, cc.alpha, vdeg(cc), scale, hypergeometric_factor(git, cc))


def q_variables(m):
    return tuple("q%d" % i for i in range(m + 1))


def assemble_I(git, D, fixed_zero=()):
    """I(q, z) through total degree D as a TruncatedSeries over CohomValue."""
    terms = {}
    for cc in enumerate_curve_classes(git, D, fixed_zero):
        f = hypergeometric_factor(git, cc)
        if f:
            terms[cc.d] = f
    return TruncatedSeries(q_variables(git.m), D, terms)


def components(I):
    """Split a CohomValue series into {(class, z-exponent): scalar series}."""
    raw = {}
    for d, cv in I.items():
        for key, v in cv.data.items():
            raw.setdefault(key, {})[d] = v
    return {key: TruncatedSeries(I.variables, I.truncation, t) for key, t in raw.items()}


def dump_I(I):
    """Records {d, alpha, class, power, z, value} in a stable order."""
    out = []
    for d, cv in I.items():
        for (cls, s), v in sorted(cv.data.items(), key=lambda kv: (kv[0][0].key(), kv[0][1])):
            out.append({"d": list(d), "alpha": format_rational(cls.alpha), "class": cls.label,
                        "power": cls.power, "z": s, "value": format_rational(v)})
    return out
