"""From the I-function to Gromov-Witten invariants.

The z^0 and z^-1 rows of I give the mirror map

    Q = q_0 exp(I_{1,H} / (w I_0)),    t_i = I_{1,phi_i} / I_0,

and exp(-I_{1,H} H / (z I_0)) * I / I_0, rewritten in (Q, t), is the
J-function.  Its z^-2 row pairs with phi_i to give dF/dt_i, and its H^2
coefficient at t = 0 gives the unmarked invariants through the divisor
equation.
"""

from dataclasses import dataclass, field
from math import factorial, prod

from .cohomology import integral_H3, make_class, pairing
from .errors import ExtractionInconsistency, InternalConsistencyError, NonInvertibleExtension
from .ifunction import CohomValue, components, times_H
from .rational import ZERO, format_rational, mpq
from .series import (Substitution, TruncatedSeries, invert_triangular_map,
                     series_exp, series_reciprocal, solve_near_identity)

__all__ = ["MuDecomposition", "GeneratingFunction", "extract_mu", "validate_extension",
           "build_mirror_map", "invert_mirror_map", "mirror_variables", "j_components",
           "transform_to_J", "check_J_shape", "dF_series", "extract_F", "F_along_line",
           "cross_checks"]


def mirror_variables(m):
    return ("Q",) + tuple("t%d" % i for i in range(1, m + 1))


@dataclass
class MuDecomposition:
    I0: TruncatedSeries
    I1H: TruncatedSeries
    I1phi: tuple
    residual: tuple
    witnesses: dict = field(default_factory=dict)
    phis: tuple = ()


def extract_mu(I, git):
    """Split the z^0 and z^-1 rows of I onto 1, H and the phi_i."""
    target = git.target
    one, H = make_class(target, 0, 0), make_class(target, 0, 1)
    comps = components(I)
    zero = TruncatedSeries.zero(I.variables, I.truncation)
    I0 = comps.get((one, 0), zero)
    I1H = comps.get((H, -1), zero)
    I1phi = tuple(comps.get((phi, -1), zero) for phi in git.phis)
    allowed = {(one, 0), (H, -1)} | {(phi, -1) for phi in git.phis}
    residual, witnesses = [], {}
    for (cls, s), ser in sorted(comps.items(), key=lambda kv: (-kv[0][1], kv[0][0].key())):
        if s < -1 or (cls, s) in allowed or not ser:
            continue
        residual.append(cls)
        witnesses[cls] = [d for d, _ in ser.items()]
    return MuDecomposition(I0, I1H, I1phi, tuple(residual), witnesses, tuple(git.phis))


def validate_extension(mu):
    if mu.residual:
        raise NonInvertibleExtension([c.label for c in mu.residual],
                                     {c.label: mu.witnesses[c] for c in mu.residual})
    return True


def build_mirror_map(mu, git):
    """{q_i: image} with q_0 -> Q and q_i -> t_i."""
    inv0 = series_reciprocal(mu.I0)
    qs = mu.I0.variables
    q0 = TruncatedSeries.variable(qs[0], qs, mu.I0.truncation)
    images = {qs[0]: q0 * series_exp((mu.I1H * inv0).scale(mpq(1, git.w)))}
    for q, I1 in zip(qs[1:], mu.I1phi):
        images[q] = I1 * inv0
    return images


def invert_mirror_map(mirror_map):
    names = tuple(mirror_map)
    return invert_triangular_map(mirror_map, mirror_variables(len(names) - 1))


def _j_in_q(I, mu, rows, target):
    """exp(-I_{1,H} H / (z I_0)) I / I_0 componentwise, still in q."""
    comps = components(I)
    inv0 = series_reciprocal(mu.I0)
    f = mu.I1H * inv0
    powers = [None, -f]
    for k in range(2, 4):
        powers.append((powers[-1] * (-f)).scale(mpq(1, k)))
    out = {}
    for (cls, s), ser in comps.items():
        base = ser * inv0
        for k in range(0, 4):
            if rows is not None and s - k not in rows:
                continue
            if k == 0:
                term, cls2 = base, cls
            else:
                cls2 = times_H(target, cls, k)
                if cls2 is None:
                    continue
                term = base * powers[k]
            key = (cls2, s - k)
            out[key] = out[key] + term if key in out else term
    return {k: v for k, v in out.items() if v}


def j_components(I, mu, inverse_map, rows=(0, -1, -2), substitution=None):
    """J as {(class, z-exponent): series in (Q, t)}, restricted to ``rows``."""
    jq = _j_in_q(I, mu, set(rows) if rows is not None else None, _target_of(I))
    sub = substitution or Substitution(I.variables, inverse_map)
    return {key: sub.apply(ser) for key, ser in sorted(jq.items(), key=lambda kv: (-kv[0][1], kv[0][0].key()))}


def _target_of(I):
    for _, cv in I.items():
        return cv.target
    raise InternalConsistencyError("empty I-function")


def transform_to_J(I, mu, inverse_map, rows=None):
    """J as a TruncatedSeries over CohomValue in (Q, t)."""
    target = _target_of(I)
    comps = j_components(I, mu, inverse_map, rows)
    variables = next(iter(inverse_map.values())).variables
    D = min(s.truncation for s in comps.values())
    terms = {}
    for key, ser in comps.items():
        for d, v in ser.items():
            terms.setdefault(d, {})[key] = v
    return TruncatedSeries(variables, D, {d: CohomValue(target, t) for d, t in terms.items()})


def check_J_shape(J_comps, git):
    """z^0 row is 1 and z^-1 row is sum t_i phi_i with no H-component."""
    target = git.target
    one = make_class(target, 0, 0)
    some = next(iter(J_comps.values()))
    variables, D = some.variables, some.truncation
    expected = {(one, 0): TruncatedSeries.one(variables, D)}
    for i, phi in enumerate(git.phis):
        expected[(phi, -1)] = TruncatedSeries.variable(variables[i + 1], variables, D)
    problems = []
    for key, ser in J_comps.items():
        if key[1] not in (0, -1):
            continue
        want = expected.get(key)
        if want is None:
            if ser:
                problems.append("%s*z^%d should vanish, got %s" % (key[0].label, key[1], ser.to_string()))
        elif ser.truncate(D) != want.truncate(ser.truncation):
            problems.append("%s*z^%d should be %s, got %s" % (key[0].label, key[1],
                                                             want.to_string(), ser.to_string()))
    for key, want in expected.items():
        if key not in J_comps and want:
            problems.append("%s*z^%d missing" % (key[0].label, key[1]))
    if problems:
        raise InternalConsistencyError("J-function shape violated: " + "; ".join(problems))
    return True


def dF_series(J_comps, git, normalization):
    """dF/dt_i = (phi_i, J_{z^-2}) for each extension class."""
    target = git.target
    row = {cls: ser for (cls, s), ser in J_comps.items() if s == -2}
    some = next(iter(J_comps.values()))
    out = []
    for phi in git.phis:
        acc = TruncatedSeries.zero(some.variables, some.truncation)
        for cls, ser in row.items():
            c = pairing(target, phi, cls, normalization)
            if c:
                acc = acc + ser.scale(c)
        out.append(acc)
    return out


class GeneratingFunction:
    """F(Q, t) = sum N[d, k] Q^d t^k with N the coefficients of F.

    ``invariant(d, k)`` is the correlator <phi^k>_{0,|k|,d/w} = prod k_i! N.
    """

    def __init__(self, m, truncation, N, w=1):
        self.m = m
        self.truncation = truncation
        self.w = w
        self.N = {(int(d), tuple(k)): mpq(v) for (d, k), v in N.items() if v}

    @property
    def variables(self):
        return mirror_variables(self.m)

    def coefficient(self, d, k):
        return self.N.get((int(d), tuple(k)), ZERO)

    def invariant(self, d, k):
        return self.coefficient(d, k) * prod(factorial(x) for x in k)

    def as_series(self):
        return TruncatedSeries(self.variables, self.truncation,
                               {(d,) + k: v for (d, k), v in self.N.items()})

    def records(self):
        return [{"d": d, "k": list(k), "value": format_rational(v)}
                for (d, k), v in sorted(self.N.items(), key=lambda kv: (kv[0][0] + sum(kv[0][1]),) + (kv[0][0],) + kv[0][1])]

    def table(self, dmax, kmax):
        """Grid of invariants for m = 1 (rows d, columns k)."""
        if self.m != 1:
            raise ValueError("grid tables are only defined for one extension class")
        return [[self.invariant(d, (k,)) if (d > 0 or k >= 3) else None
                 for k in range(kmax + 1)] for d in range(dmax + 1)]

    def __eq__(self, other):
        return (isinstance(other, GeneratingFunction) and self.m == other.m
                and self.truncation == other.truncation and self.N == other.N)

    def __repr__(self):
        return "F = %s + O(%d)" % (self.as_series().to_string(), self.truncation + 1)


def _stable(d, k):
    return d > 0 or sum(k) >= 3


def extract_F(J_comps, git, normalization="unit", truncation=None):
    """Integrate the dF/dt_i rows and read unmarked invariants off H^2."""
    target = git.target
    m = git.m
    some = next(iter(J_comps.values()))
    D = some.truncation if truncation is None else min(truncation, some.truncation)
    dF = dF_series(J_comps, git, normalization)
    determinations = {}
    for i, ser in enumerate(dF):
        for exps, c in ser.items():
            d, kk = exps[0], list(exps[1:])
            kk[i] += 1
            k = tuple(kk)
            if d + sum(k) > D:
                continue
            determinations.setdefault((d, k), {})[i] = c / k[i]
    N = {}
    for (d, k), vals in sorted(determinations.items()):
        # every row i with k_i > 0 must see the same coefficient, zeros included
        full = {i: vals.get(i, ZERO) for i in range(m) if k[i] > 0}
        distinct = set(full.values())
        mono = _monomial_label(d, k)
        if len(distinct) != 1:
            raise ExtractionInconsistency(mono, ["row t%d gives %s" % (i + 1, format_rational(v))
                                                 for i, v in sorted(full.items())])
        value = distinct.pop()
        if not _stable(d, k):
            if value:
                raise ExtractionInconsistency(mono, ["unstable term is %s, expected 0"
                                                     % format_rational(value)])
            continue
        N[(d, k)] = value
    H2 = make_class(target, 0, 2)
    c = J_comps.get((H2, -2))
    if c is not None:
        scale = integral_H3(target) * git.w
        for exps, v in c.items():
            d = exps[0]
            if any(exps[1:]) or d == 0 or d > D:
                continue
            N[(d, (0,) * m)] = scale * v / d
    return GeneratingFunction(m, D, N, git.w)


def _monomial_label(d, k):
    parts = ([] if d == 0 else ["Q" if d == 1 else "Q^%d" % d])
    parts += ["t%d" % (i + 1) if e == 1 else "t%d^%d" % (i + 1, e) for i, e in enumerate(k) if e]
    return "*".join(parts) or "1"


def F_along_line(I, git, direction, normalization="unit"):
    """F(0, s*direction) as a series in s, from an I-function computed with
    q_0 = 0 (the Q = 0 slice).

    The mirror map is solved along the line instead of inverted in full,
    which keeps the work univariate after the I-function is assembled.
    """
    direction = [mpq(v) for v in direction]
    mu = extract_mu(I, git)
    validate_extension(mu)
    mmap = build_mirror_map(mu, git)
    qs = I.variables
    D = I.truncation
    # restrict every q-series to the slice q_0 = 0, then drop q_0
    sub_vars = qs[1:]

    def drop_q0(ser):
        return TruncatedSeries(sub_vars, ser.truncation,
                               {e[1:]: c for e, c in ser.items() if e[0] == 0})

    images = {q: drop_q0(mmap[q]) for q in sub_vars}
    s = TruncatedSeries.variable("s", ("s",), D)
    rhs = {q: s.scale(v) for q, v in zip(sub_vars, direction)}
    curve = solve_near_identity(images, rhs)
    jq = _j_in_q(I, mu, {-2}, git.target)
    sub = Substitution(sub_vars, curve, ("s",))
    comps = {key: sub.apply(drop_q0(ser)) for key, ser in jq.items()}
    derivative = TruncatedSeries.zero(("s",), D)
    for phi, v in zip(git.phis, direction):
        if not v:
            continue
        for (cls, zs), ser in comps.items():
            c = pairing(git.target, phi, cls, normalization)
            if c:
                derivative = derivative + ser.scale(c * v)
    terms = {}
    for (e,), c in derivative.items():
        if e + 1 <= D:
            terms[(e + 1,)] = c / (e + 1)
    G = TruncatedSeries(("s",), D, terms)
    unstable = [e for (e,), c in G.items() if e < 3 and c]
    if unstable:
        raise ExtractionInconsistency("s^%d" % unstable[0], ["unstable term along the line"])
    return G


def cross_checks(entries):
    """Each entry is (name, computed, expected); returns pass/fail records."""
    report = []
    for name, computed, expected in entries:
        ok = computed == expected
        report.append({"check": name, "passed": bool(ok),
                       "computed": str(computed), "expected": str(expected)})
    return report
