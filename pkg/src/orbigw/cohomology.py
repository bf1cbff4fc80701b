"""Targets, inertia sectors, the admissible state space and its pairing.

A target is a Calabi-Yau threefold complete intersection of degrees
``b_1..b_{n-3}`` in the weighted projective stack ``P(w_0..w_n)``, with
general defining equations.  The sector ``X_alpha`` is the fixed locus of
``exp(2 pi i alpha)``: the complete intersection cut out by the equations
with ``alpha*b_j`` integral inside the coordinate substack spanned by the
coordinates with ``alpha*w_i`` integral.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd, prod

from .errors import DomainError, InternalConsistencyError, ValidationError
from .rational import ONE, ZERO, floor_q, format_rational, frac_part, is_integer, mpq
from . import linalg

__all__ = ["TargetSpec", "Sector", "SpecialCycle", "BasisClass", "PairingMatrix",
           "validate_target", "enumerate_sectors", "sector", "sector_age",
           "enumerate_special_cycles", "admissible_basis", "resolve_extension",
           "pairing", "pairing_matrix", "cycle_class_in_basis", "dual_alpha",
           "integral_H3", "NORMALIZATIONS"]


@dataclass(frozen=True)
class TargetSpec:
    weights: tuple
    degrees: tuple

    @property
    def n(self):
        return len(self.weights) - 1

    @property
    def label(self):
        degs = ",".join(str(b) for b in self.degrees)
        ws = ",".join(str(w) for w in self.weights)
        return "X_{%s} in P(%s)" % (degs, ws)


def validate_target(weights, degrees):
    weights = tuple(int(w) for w in weights)
    degrees = tuple(int(b) for b in degrees)
    if not weights or not degrees:
        raise ValidationError("weights and degrees must be non-empty")
    if min(weights) <= 0 or min(degrees) <= 0:
        raise ValidationError("weights and degrees must be positive integers")
    g = 0
    for w in weights:
        g = gcd(g, w)
    if g != 1:
        raise ValidationError("weights must have gcd 1, got gcd %d" % g)
    if len(degrees) != len(weights) - 4:
        raise ValidationError(
            "a threefold complete intersection in P^%d needs %d equations, got %d"
            % (len(weights) - 1, len(weights) - 4, len(degrees)))
    if sum(degrees) != sum(weights):
        raise ValidationError(
            "Calabi-Yau condition fails: sum of degrees %d != sum of weights %d"
            % (sum(degrees), sum(weights)))
    return TargetSpec(weights, degrees)


def dual_alpha(alpha):
    """<1 - alpha>, the sector paired with alpha."""
    return frac_part(1 - mpq(alpha))


@dataclass(frozen=True)
class Sector:
    alpha: object
    r: int
    fixed_coordinates: tuple
    fixed_equations: tuple
    dimension: int
    age: int

    @property
    def twisted(self):
        return self.alpha != 0

    @property
    def label(self):
        return format_rational(self.alpha)


def sector_age(target, alpha):
    alpha = mpq(alpha)
    return (sum(floor_q(alpha * b) for b in target.degrees)
            - sum(floor_q(alpha * w) for w in target.weights))


@lru_cache(maxsize=None)
def _sector(target, alpha):
    coords = tuple(i for i, w in enumerate(target.weights) if is_integer(alpha * w))
    eqs = tuple(j for j, b in enumerate(target.degrees) if is_integer(alpha * b))
    dim = len(coords) - 1 - len(eqs)
    return Sector(alpha, int(alpha.denominator), coords, eqs, dim, sector_age(target, alpha))


def sector(target, alpha):
    """Sector data for ``alpha`` (dimension < 0 means X_alpha is empty)."""
    return _sector(target, frac_part(mpq(alpha)))


@lru_cache(maxsize=None)
def enumerate_sectors(target):
    alphas = sorted({mpq(k, w) for w in target.weights for k in range(w)})
    out = []
    for a in alphas:
        s = _sector(target, a)
        if s.dimension < 0:
            continue
        if s.dimension == 2:
            raise InternalConsistencyError("sector %s has dimension 2" % s.label)
        if s.twisted and s.age < 0:
            raise InternalConsistencyError("sector %s has negative age" % s.label)
        out.append(s)
    return tuple(out)


def nonempty(target, alpha):
    return sector(target, alpha).dimension >= 0


@lru_cache(maxsize=None)
def _representable(b, weights):
    ok = [True] + [False] * b
    for v in range(1, b + 1):
        ok[v] = any(w <= v and ok[v - w] for w in weights)
    return ok[b]


def gamma_set(target, sec, lam):
    """Equations that vanish identically on the stratum {x_i = 0, i in lam}."""
    rest = tuple(sorted({target.weights[i] for i in sec.fixed_coordinates if i not in lam}))
    return tuple(j for j in sec.fixed_equations
                 if not _representable(target.degrees[j], rest))


@dataclass(frozen=True)
class SpecialCycle:
    vanishing: tuple          # Lambda, coordinate indices
    gamma: tuple
    open_mass: object
    closure_degree: object


def _closure_degree(target, sec, lam):
    rest = [i for i in sec.fixed_coordinates if i not in lam]
    gam = gamma_set(target, sec, lam)
    if not rest or len(gam) != len(lam):
        return ZERO, gam
    num = prod(target.degrees[j] for j in sec.fixed_equations if j not in gam)
    den = prod(target.weights[i] for i in rest)
    return mpq(num, den), gam


def _weight_disjoint(target, sec, lam):
    inside = {target.weights[i] for i in lam}
    outside = {target.weights[i] for i in sec.fixed_coordinates if i not in lam}
    return not (inside & outside)


@lru_cache(maxsize=None)
def _strata(target, alpha):
    """All coordinate strata of a dimension-0 sector with open masses."""
    sec = _sector(target, alpha)
    coords = sec.fixed_coordinates
    subsets = [tuple(c) for k in range(len(coords), -1, -1)
               for c in combinations(coords, k)]
    mass, closure, gammas = {}, {}, {}
    for lam in subsets:
        closure[lam], gammas[lam] = _closure_degree(target, sec, lam)
        mass[lam] = closure[lam] - sum(
            (mass[o] for o in mass if set(o) > set(lam)), ZERO)
        if mass[lam] < 0:
            raise InternalConsistencyError("negative open mass on stratum %r of sector %s"
                                           % (lam, sec.label))
    return mass, closure, gammas


def enumerate_special_cycles(target, sec):
    """Canonical special cycles of a dimension-0 sector, Lambda ascending."""
    if sec.dimension != 0:
        raise DomainError("special cycles are defined on dimension-0 sectors only "
                          "(sector %s has dimension %d)" % (sec.label, sec.dimension))
    mass, closure, gammas = _strata(target, sec.alpha)
    out = []
    for lam in sorted(mass, key=lambda l: (len(l), l)):
        if mass[lam] > 0 and len(lam) == len(gammas[lam]) and _weight_disjoint(target, sec, lam):
            out.append(SpecialCycle(lam, gammas[lam], mass[lam], closure[lam]))
    return out


def _check_strata_covered(target, sec):
    mass, _, _ = _strata(target, sec.alpha)
    emitted = {c.vanishing for c in enumerate_special_cycles(target, sec)}
    missed = [lam for lam, m in mass.items() if m > 0 and lam not in emitted]
    if missed:
        raise InternalConsistencyError("strata %r of sector %s carry points but are not "
                                       "canonical special cycles" % (missed, sec.label))


@dataclass(frozen=True, order=True)
class BasisClass:
    """H^power on sector alpha; on dimension-0 sectors, the class of the
    points of X_alpha with x_i = 0 for i in ``cycle``."""
    alpha: object
    power: int = 0
    cycle: tuple = None
    cr_degree: int = field(default=0, compare=False)

    @property
    def kind(self):
        if self.cycle is not None:
            return "specialCycle"
        if self.alpha == 0:
            return "untwistedPower"
        return "sectorHyperplane" if self.power else "sectorFundamental"

    @property
    def label(self):
        if self.alpha == 0:
            return "1" if self.power == 0 else ("H" if self.power == 1 else "H^%d" % self.power)
        a = format_rational(self.alpha)
        if self.cycle:
            return "1_{%s}[%s]" % (a, ",".join("x%d" % i for i in self.cycle))
        if self.power:
            return "H*1_{%s}" % a if self.power == 1 else "H^%d*1_{%s}" % (self.power, a)
        return "1_{%s}" % a

    def key(self):
        return (self.alpha, self.power, self.cycle)

    def __str__(self):
        return self.label


def make_class(target, alpha, power=0, cycle=None):
    sec = sector(target, alpha)
    return BasisClass(sec.alpha, power, None if cycle is None else tuple(sorted(cycle)),
                      2 * sec.age + 2 * power)


@lru_cache(maxsize=None)
def admissible_basis(target):
    """(full basis, canonical degree-2 twisted classes)."""
    full = []
    for sec in enumerate_sectors(target):
        if sec.dimension == 0:
            _check_strata_covered(target, sec)
            for c in enumerate_special_cycles(target, sec):
                full.append(make_class(target, sec.alpha, 0, c.vanishing))
        else:
            for p in range(sec.dimension + 1):
                full.append(make_class(target, sec.alpha, p))
    full = tuple(full)
    phis = tuple(c for c in full if c.alpha != 0 and c.cr_degree == 2)
    return full, phis


def resolve_extension(target, descriptors):
    """Turn ``[{"alpha": "1/3", "cycle": [3]}, ...]`` into basis classes.

    ``"auto"`` (or None) selects the canonical degree-2 twisted classes.
    A descriptor without ``cycle`` means the fundamental class of X_alpha.
    """
    full, phis = admissible_basis(target)
    if descriptors is None or descriptors == "auto":
        return phis
    out = []
    for d in descriptors:
        if isinstance(d, BasisClass):
            cls = d
        else:
            try:
                alpha = frac_part(mpq(d["alpha"]))
            except (KeyError, ValueError, TypeError):
                raise ValidationError("extension entry %r needs an 'alpha' like \"1/3\"" % (d,))
            sec = sector(target, alpha)
            if sec.dimension < 0:
                raise ValidationError("extension entry %r: sector %s is empty"
                                      % (d, format_rational(alpha)))
            cycle = d.get("cycle")
            if sec.dimension == 0:
                cycle = tuple(sorted(cycle or ()))
            elif cycle:
                raise ValidationError("extension entry %r: cycles are only allowed on "
                                      "dimension-0 sectors" % (d,))
            else:
                cycle = None
            cls = make_class(target, alpha, 0, cycle)
        if cls not in phis:
            raise ValidationError("extension class %s is not a degree-2 twisted admissible class"
                                  % cls.label)
        if cls in out:
            raise ValidationError("extension class %s listed twice" % cls.label)
        out.append(cls)
    return tuple(out)


def integral_H3(target):
    return mpq(prod(target.degrees), prod(target.weights))


def sector_degree(target, sec):
    """Degree of H^dim on X_alpha: prod of cut-out degrees over prod of weights."""
    num = prod(target.degrees[j] for j in sec.fixed_equations)
    den = prod(target.weights[i] for i in sec.fixed_coordinates)
    return mpq(num, den)


def _nu_unit(sec):
    return ONE


def _nu_gerbe_order(sec):
    return mpq(sec.r) if sec.twisted and sec.dimension > 0 else ONE


NORMALIZATIONS = {"unit": _nu_unit, "gerbe-order": _nu_gerbe_order}


def _normalizer(normalization):
    if normalization is None:
        return _nu_unit
    if callable(normalization):
        return normalization
    if isinstance(normalization, str):
        try:
            return NORMALIZATIONS[normalization]
        except KeyError:
            raise ValidationError("unknown pairing normalization %r" % normalization) from None
    table = {mpq(k): mpq(v) for k, v in dict(normalization).items()}
    return lambda sec: table.get(sec.alpha, ONE)


def pairing(target, c1, c2, normalization=None):
    """Orbifold Poincare pairing of two basis classes.

    On a positive-dimensional sector, (H^a 1_alpha, H^b 1_{1-alpha}) is
    nu_alpha times the degree of X_alpha when a + b = dim.  On dimension-0
    sectors it is the total point mass of the common support.  ``nu_alpha``
    is given by ``normalization``: ``"unit"`` (default, 1 everywhere),
    ``"gerbe-order"`` (the order r of the sector's band on
    positive-dimensional twisted sectors), a callable, or a dict alpha -> nu.
    """
    if c2.alpha != dual_alpha(c1.alpha):
        return ZERO
    sec = sector(target, c1.alpha)
    nu = _normalizer(normalization)(sec)
    if sec.dimension == 0:
        mass, _, _ = _strata(target, sec.alpha)
        common = set(c1.cycle or ()) | set(c2.cycle or ())
        return nu * sum((m for lam, m in mass.items() if common <= set(lam)), ZERO)
    if c1.power + c2.power != sec.dimension:
        return ZERO
    return nu * sector_degree(target, sec)


@dataclass(frozen=True)
class PairingMatrix:
    basis: tuple
    entries: tuple

    def __call__(self, c1, c2):
        return self.entries[self.basis.index(c1)][self.basis.index(c2)]

    def inverse(self):
        return linalg.inverse([list(r) for r in self.entries])


def pairing_matrix(target, basis=None, normalization=None):
    if basis is None:
        basis = admissible_basis(target)[0]
    basis = tuple(basis)
    entries = tuple(tuple(pairing(target, a, b, normalization) for b in basis) for a in basis)
    if linalg.rank([list(r) for r in entries]) != len(basis):
        raise InternalConsistencyError("pairing is degenerate on the admissible basis")
    return PairingMatrix(basis, entries)


@lru_cache(maxsize=None)
def _cycle_solver(target, alpha):
    sec = sector(target, alpha)
    cycles = [c.vanishing for c in enumerate_special_cycles(target, sec)]
    # incidence of basis cycle (column) with open strata (row)
    matrix = [[ONE if set(col) <= set(row) else ZERO for col in cycles] for row in cycles]
    return cycles, linalg.inverse(matrix)


def cycle_class_in_basis(target, alpha, vanishing):
    """The class of {x_i = 0, i in vanishing} on a dimension-0 sector as a
    combination {cycle: coeff} of the canonical special cycles."""
    sec = sector(target, alpha)
    mass, _, _ = _strata(target, sec.alpha)
    cycles, inv = _cycle_solver(target, sec.alpha)
    lam = set(vanishing)
    rhs = [ONE if lam <= set(row) else ZERO for row in cycles]
    for row, m in mass.items():
        if m > 0 and lam <= set(row) and row not in cycles:
            raise InternalConsistencyError("stratum %r is not spanned by special cycles" % (row,))
    out = {}
    for i, col in enumerate(cycles):
        c = sum((inv[i][j] * rhs[j] for j in range(len(cycles))), ZERO)
        if c:
            out[col] = c
    return out
