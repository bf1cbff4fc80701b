"""Identities every computation must satisfy, as pass/fail records."""

from .cohomology import (enumerate_sectors, enumerate_special_cycles,
                         dual_alpha, sector, _strata)
from .extended_git import verify_calabi_yau
from .rational import ONE, ZERO
from .series import Substitution, TruncatedSeries

__all__ = ["age_duality", "mass_consistency", "derivative_identity", "round_trip",
           "calabi_yau_columns", "record"]


def record(name, passed, detail=""):
    return {"check": name, "passed": bool(passed), "detail": detail}


def age_duality(target):
    bad = []
    for sec in enumerate_sectors(target):
        if not sec.twisted:
            continue
        dual = sector(target, dual_alpha(sec.alpha))
        if sec.age + dual.age != 3 - sec.dimension:
            bad.append(sec.label)
    return record("age duality", not bad,
                  "violated on %s" % ", ".join(bad) if bad else
                  "age(a) + age(1-a) = 3 - dim on every twisted sector")


def mass_consistency(target):
    bad = []
    for sec in enumerate_sectors(target):
        if sec.dimension != 0:
            continue
        mass, closure, _ = _strata(target, sec.alpha)
        if sum(mass.values(), ZERO) != closure[()]:
            bad.append(sec.label)
        for c in enumerate_special_cycles(target, sec):
            if len(c.vanishing) != len(c.gamma):
                bad.append(sec.label)
    return record("inclusion-exclusion masses", not bad,
                  "violated on %s" % ", ".join(bad) if bad else
                  "open masses sum to the closure degree on every point sector")


def calabi_yau_columns(git):
    ok = verify_calabi_yau(git.A, git.xi, raise_on_failure=False)
    return record("calabi-yau columns", ok, "column sums of A equal the summed multi-degrees"
                  if ok else "column sums differ")


def derivative_identity(I, git):
    """dI/dq_i at q = 0 is z^-1 phi_i."""
    bad = []
    n = git.m + 1
    for i, phi in enumerate(git.phis, start=1):
        if I.truncation < 1:
            break
        e = tuple(1 if j == i else 0 for j in range(n))
        cv = I.coefficient(e)
        data = cv.data if cv else {}
        if data != {(phi, -1): ONE}:
            bad.append("q%d -> %r" % (i, cv))
    return record("derivative identity", not bad,
                  "; ".join(bad) if bad else "dI/dq_i(0) = phi_i / z for every extension class")


def round_trip(mirror_map, inverse):
    names = tuple(mirror_map)
    target = next(iter(inverse.values())).variables
    sub = Substitution(names, inverse, target)
    bad = []
    for name, t in zip(names, target):
        img = sub.apply(mirror_map[name])
        want = TruncatedSeries.variable(t, target, img.truncation)
        if img != want:
            bad.append(name)
    return record("mirror map round trip", not bad,
                  "failed for %s" % ", ".join(bad) if bad else
                  "mirror map composed with its inverse is the identity")
