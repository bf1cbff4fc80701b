"""Extended GIT presentation: one extra C*-factor per extension class.

Row 0 of the weight matrix is ``(w_0..w_n, 0..0)``.  The row for a class
supported on sector alpha with vanishing set Lambda is
``floor(alpha*w_j) - [j in Lambda]`` followed by a unit vector, and the
equation of degree b_j acquires the multi-degree
``(b_j, floor(alpha*b_j) - [j in Gamma(Lambda)], ...)``.
"""

from dataclasses import dataclass

from .cohomology import gamma_set, nonempty, sector
from .errors import CYViolation
from .rational import ZERO, floor_q, frac_part, lcm, mpq

__all__ = ["ExtendedGIT", "CurveClass", "build_weight_matrix", "build_multidegrees",
           "build_extended_git", "verify_calabi_yau", "enumerate_curve_classes",
           "curve_class", "lattice_points"]


@dataclass(frozen=True)
class ExtendedGIT:
    target: object
    phis: tuple
    A: tuple          # (m+1) rows of length n+1+m
    xi: tuple         # one vector of length m+1 per equation
    w: int

    @property
    def m(self):
        return len(self.phis)

    @property
    def alphas(self):
        return tuple(p.alpha for p in self.phis)

    @property
    def chi(self):
        return tuple(zip(*self.A))


def _vanishing(phi):
    return phi.cycle or ()


def build_weight_matrix(target, phis):
    n1 = len(target.weights)
    m = len(phis)
    rows = [tuple(target.weights) + (0,) * m]
    for a, phi in enumerate(phis):
        lam = set(_vanishing(phi))
        head = tuple(floor_q(phi.alpha * wj) - (1 if j in lam else 0)
                     for j, wj in enumerate(target.weights))
        rows.append(head + tuple(1 if k == a else 0 for k in range(m)))
    assert all(len(r) == n1 + m for r in rows)
    return tuple(rows)


def build_multidegrees(target, phis):
    out = []
    gammas = [set(gamma_set(target, sector(target, p.alpha), _vanishing(p))) if p.cycle else set()
              for p in phis]
    for j, b in enumerate(target.degrees):
        out.append((b,) + tuple(floor_q(p.alpha * b) - (1 if j in g else 0)
                               for p, g in zip(phis, gammas)))
    return tuple(out)


def verify_calabi_yau(A, xi, raise_on_failure=True):
    """Column sums of A equal the summed multi-degrees, row by row."""
    for r, row in enumerate(A):
        lhs = sum(row)
        rhs = sum(x[r] for x in xi)
        if lhs != rhs:
            if raise_on_failure:
                raise CYViolation(r, lhs, rhs)
            return False
    return True


def build_extended_git(target, phis):
    phis = tuple(phis)
    A = build_weight_matrix(target, phis)
    xi = build_multidegrees(target, phis)
    verify_calabi_yau(A, xi)
    return ExtendedGIT(target, phis, A, xi, lcm(target.weights))


@dataclass(frozen=True)
class CurveClass:
    """A lattice point d and its curve class e with all pairings precomputed."""
    d: tuple
    e: tuple
    chi_pairings: tuple     # beta . chi_i for the n+1 coordinate columns
    xi_pairings: tuple
    alpha: object           # <-e_0>

    @property
    def degree(self):
        return sum(self.d)


def curve_class(git, d):
    d = tuple(int(x) for x in d)
    e0 = mpq(d[0], git.w) - sum((a * di for a, di in zip(git.alphas, d[1:])), ZERO)
    e = (e0,) + tuple(mpq(x) for x in d[1:])
    n1 = len(git.target.weights)
    chi = tuple(sum((e[a] * git.A[a][i] for a in range(len(e))), ZERO) for i in range(n1))
    xi = tuple(sum((e[a] * x[a] for a in range(len(e))), ZERO) for x in git.xi)
    return CurveClass(d, e, chi, xi, frac_part(-e0))


def lattice_points(nvars, D):
    """All d in Z_{>=0}^nvars with |d| <= D, by degree then lexicographically."""
    def rec(k, budget):
        if k == 1:
            yield (budget,)
            return
        for first in range(budget, -1, -1):
            for rest in rec(k - 1, budget - first):
                yield (first,) + rest
    for deg in range(D + 1):
        yield from sorted(rec(nvars, deg))


def enumerate_curve_classes(git, D, fixed_zero=()):
    """Curve classes with |d| <= D whose target sector is nonempty.

    ``fixed_zero`` lists lattice coordinates held at 0 (used for slices)."""
    fixed_zero = set(fixed_zero)
    for d in lattice_points(git.m + 1, D):
        if any(d[i] for i in fixed_zero):
            continue
        cc = curve_class(git, d)
        if nonempty(git.target, cc.alpha):
            yield cc
