"""Sparse multivariate power series with exact coefficients, truncated at a
total degree.

Monomials are packed into a single Python int: the total degree sits in the
top slot and the exponents follow, variable 0 first.  With that layout the
product of two monomials is the sum of their keys, the total degree is one
shift away, and sorting keys gives graded-lexicographic order.

Coefficients are normally ``mpq``; any commutative ring element supporting
``+``, ``-``, ``*`` and truthiness-as-nonzero also works (see ``algebra``).
"""

from fractions import Fraction

from .errors import DomainError, NonInvertibleMap, StructuralError
from .rational import ONE, Q, ZERO, format_rational, mpq

__all__ = ["TruncatedSeries", "Substitution", "series_add", "series_mul",
           "series_reciprocal", "series_exp", "series_log", "series_substitute",
           "invert_triangular_map", "solve_near_identity"]

_BITS = 16
_MASK = (1 << _BITS) - 1
# two exponents <= MAX_TRUNCATION never carry into the neighbouring slot
MAX_TRUNCATION = (1 << (_BITS - 1)) - 1

_MPQ = type(ONE)


def _coerce(c):
    if type(c) is _MPQ:
        return c
    if isinstance(c, (int, Fraction, str)):
        return Q(c)
    return c


def _pack(exps):
    key = sum(exps)
    for e in exps:
        key = (key << _BITS) | e
    return key


def _unpack(key, n):
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & _MASK
        key >>= _BITS
    return tuple(out)


def _grouped(terms, shift):
    groups = {}
    for k, c in terms.items():
        groups.setdefault(k >> shift, []).append((k, c))
    return groups


def _accumulate(out, k, v):
    if k in out:
        out[k] = out[k] + v
    else:
        out[k] = v


def _mul_terms(a, b, shift, D):
    ga = _grouped(a, shift)
    gb = _grouped(b, shift)
    out = {}
    for da, la in ga.items():
        for db, lb in gb.items():
            if da + db > D:
                continue
            for ka, ca in la:
                for kb, cb in lb:
                    k = ka + kb
                    v = ca * cb
                    if k in out:
                        out[k] = out[k] + v
                    else:
                        out[k] = v
    return {k: c for k, c in out.items() if c}


def _pieces(terms, shift, D):
    """Homogeneous components as a list of dicts indexed by degree."""
    out = [dict() for _ in range(D + 1)]
    for k, c in terms.items():
        out[k >> shift][k] = c
    return out


class TruncatedSeries:
    """Power series in ``variables`` known up to total degree ``truncation``.

    ``terms`` maps exponent tuples to coefficients.  Zero coefficients and
    monomials above the truncation are dropped on construction.
    """

    __slots__ = ("variables", "truncation", "_t", "_shift")

    def __init__(self, variables, truncation, terms=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise StructuralError("repeated variable names: %r" % (variables,))
        truncation = int(truncation)
        if not 0 <= truncation <= MAX_TRUNCATION:
            raise DomainError("truncation must lie in [0, %d]" % MAX_TRUNCATION)
        self.variables = variables
        self.truncation = truncation
        self._shift = _BITS * len(variables)
        t = {}
        n = len(variables)
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or min(exps, default=0) < 0:
                raise StructuralError("bad exponent vector %r for variables %r"
                                      % (exps, variables))
            if sum(exps) > truncation:
                continue
            c = _coerce(c)
            if c:
                k = _pack(exps)
                _accumulate(t, k, c)
        self._t = {k: c for k, c in t.items() if c}

    @classmethod
    def _raw(cls, variables, truncation, packed):
        s = cls.__new__(cls)
        s.variables = variables
        s.truncation = truncation
        s._shift = _BITS * len(variables)
        s._t = packed
        return s

    # constructors

    @classmethod
    def zero(cls, variables, truncation):
        return cls(variables, truncation)

    @classmethod
    def constant(cls, c, variables, truncation):
        return cls(variables, truncation, {(0,) * len(tuple(variables)): c})

    @classmethod
    def one(cls, variables, truncation):
        return cls.constant(ONE, variables, truncation)

    @classmethod
    def variable(cls, name, variables, truncation):
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, truncation, {tuple(exps): ONE})

    @classmethod
    def monomial(cls, exps, coeff, variables, truncation):
        return cls(variables, truncation, {tuple(exps): coeff})

    # inspection

    def items(self):
        """(exponents, coefficient) pairs in graded-lexicographic order."""
        n = len(self.variables)
        return [(_unpack(k, n), self._t[k]) for k in sorted(self._t)]

    def as_dict(self):
        return dict(self.items())

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def coefficient(self, exps):
        exps = tuple(exps)
        if len(exps) != len(self.variables):
            raise StructuralError("exponent vector %r does not match %r"
                                  % (exps, self.variables))
        return self._t.get(_pack(exps), ZERO)

    def constant_term(self):
        return self._t.get(0, ZERO)

    def valuation(self):
        """Lowest total degree present, or None for the zero series."""
        if not self._t:
            return None
        return min(self._t) >> self._shift

    def homogeneous_part(self, degree):
        s = self._shift
        return TruncatedSeries._raw(self.variables, self.truncation,
                                    {k: c for k, c in self._t.items() if k >> s == degree})

    def truncate(self, D):
        D = min(int(D), self.truncation)
        s = self._shift
        return TruncatedSeries._raw(self.variables, D,
                                    {k: c for k, c in self._t.items() if k >> s <= D})

    def with_truncation(self, D):
        """Same terms at a different truncation (terms above D are dropped)."""
        s = self._shift
        return TruncatedSeries._raw(self.variables, int(D),
                                    {k: c for k, c in self._t.items() if k >> s <= D})

    def rename(self, variables):
        variables = tuple(variables)
        if len(variables) != len(self.variables):
            raise StructuralError("rename needs %d names" % len(self.variables))
        return TruncatedSeries._raw(variables, self.truncation, dict(self._t))

    def map_coefficients(self, fn):
        out = {}
        for k, c in self._t.items():
            v = fn(c)
            if v:
                out[k] = v
        return TruncatedSeries._raw(self.variables, self.truncation, out)

    def derivative(self, name):
        i = self.variables.index(name)
        out = {}
        for exps, c in self.items():
            if exps[i]:
                e = list(exps)
                e[i] -= 1
                out[tuple(e)] = c * exps[i]
        return TruncatedSeries(self.variables, max(self.truncation - 1, 0), out)

    def restrict(self, name, value=0):
        """Set one variable to zero (only ``value=0`` is filtration-safe)."""
        if value != 0:
            raise DomainError("only restriction to 0 is supported")
        i = self.variables.index(name)
        return TruncatedSeries(self.variables, self.truncation,
                               {e: c for e, c in self.items() if e[i] == 0})

    # arithmetic

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise StructuralError("expected a TruncatedSeries, got %r" % (type(other),))
        if other.variables != self.variables:
            raise StructuralError("variable lists differ: %r vs %r"
                                  % (self.variables, other.variables))

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self + TruncatedSeries.constant(other, self.variables, self.truncation)
        self._check(other)
        D = min(self.truncation, other.truncation)
        s = self._shift
        out = {k: c for k, c in self._t.items() if k >> s <= D}
        for k, c in other._t.items():
            if k >> s <= D:
                _accumulate(out, k, c)
        return TruncatedSeries._raw(self.variables, D, {k: c for k, c in out.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw(self.variables, self.truncation,
                                    {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return TruncatedSeries._raw(self.variables, self.truncation, {})
        out = {}
        for k, v in self._t.items():
            p = v * c
            if p:
                out[k] = p
        return TruncatedSeries._raw(self.variables, self.truncation, out)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        D = min(self.truncation, other.truncation)
        return TruncatedSeries._raw(self.variables, D,
                                    _mul_terms(self._t, other._t, self._shift, D))

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * series_reciprocal(other)
        return self.scale(ONE / _coerce(other))

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return series_reciprocal(self) ** (-n)
        result = TruncatedSeries.one(self.variables, self.truncation)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            if isinstance(other, (int, Fraction, _MPQ)):
                return self._t == ({0: _coerce(other)} if other else {})
            return NotImplemented
        return (self.variables == other.variables
                and self.truncation == other.truncation and self._t == other._t)

    __hash__ = None

    def agrees_with(self, other, D=None):
        """Equal terms up to degree D (default: the smaller truncation)."""
        self._check(other)
        if D is None:
            D = min(self.truncation, other.truncation)
        return self.truncate(D)._t == other.truncate(D)._t

    def to_string(self, coeff_format=None):
        if not self._t:
            return "0"
        fmt = coeff_format or (lambda c: format_rational(c) if type(c) is _MPQ else "(%s)" % c)
        parts = []
        for exps, c in self.items():
            mono = "*".join(v if e == 1 else "%s^%d" % (v, e)
                            for v, e in zip(self.variables, exps) if e)
            cs = fmt(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(cs + "*" + mono)
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return "%s + O(%d)" % (self.to_string(), self.truncation + 1)

    def __repr__(self):
        return "TruncatedSeries(%r, %d, %s)" % (self.variables, self.truncation, self.to_string())


def series_add(a, b):
    a._check(b)
    return a + b


def series_mul(a, b):
    a._check(b)
    return a * b


def _invert_constant(c):
    if type(c) is _MPQ:
        if not c:
            raise DomainError("constant term is zero, series is not a unit")
        return ONE / c
    inv = getattr(c, "inverse", None)
    if inv is None:
        raise DomainError("constant term %r has no inverse" % (c,))
    return inv()


def series_reciprocal(a):
    """1/a, graded: B_k = -c^{-1} sum_{j>=1} A_j B_{k-j}."""
    D, s = a.truncation, a._shift
    c0 = a._t.get(0)
    if c0 is None:
        raise DomainError("constant term is zero, series is not a unit")
    inv0 = _invert_constant(c0)
    A = _pieces(a._t, s, D)
    B = [dict() for _ in range(D + 1)]
    B[0] = {0: inv0}
    neg = -inv0
    for k in range(1, D + 1):
        acc = {}
        for j in range(1, k + 1):
            if not A[j] or not B[k - j]:
                continue
            for ka, ca in A[j].items():
                for kb, cb in B[k - j].items():
                    _accumulate(acc, ka + kb, ca * cb)
        B[k] = {kk: neg * v for kk, v in acc.items() if v}
    out = {}
    for piece in B:
        out.update(piece)
    return TruncatedSeries._raw(a.variables, D, out)


def series_exp(a):
    """exp(a) for a with zero constant term, via k E_k = sum_j j A_j E_{k-j}."""
    D, s = a.truncation, a._shift
    if a._t.get(0):
        raise DomainError("exp needs a series with zero constant term")
    A = _pieces(a._t, s, D)
    E = [dict() for _ in range(D + 1)]
    E[0] = {0: ONE}
    for k in range(1, D + 1):
        acc = {}
        for j in range(1, k + 1):
            if not A[j] or not E[k - j]:
                continue
            for ka, ca in A[j].items():
                for kb, cb in E[k - j].items():
                    _accumulate(acc, ka + kb, ca * cb * j)
        inv_k = mpq(1, k)
        E[k] = {kk: v * inv_k for kk, v in acc.items() if v}
    out = {}
    for piece in E:
        out.update(piece)
    return TruncatedSeries._raw(a.variables, D, out)


def series_log(a):
    """log(a) for a with constant term 1."""
    D, s = a.truncation, a._shift
    if a._t.get(0) != ONE:
        raise DomainError("log needs a series with constant term 1")
    F = _pieces(a._t, s, D)
    L = [dict() for _ in range(D + 1)]
    for k in range(1, D + 1):
        acc = {kk: v * k for kk, v in F[k].items()}
        for j in range(1, k):
            if not L[j] or not F[k - j]:
                continue
            for ka, ca in L[j].items():
                for kb, cb in F[k - j].items():
                    _accumulate(acc, ka + kb, -(ca * cb * j))
        inv_k = mpq(1, k)
        L[k] = {kk: v * inv_k for kk, v in acc.items() if v}
    out = {}
    for piece in L:
        out.update(piece)
    return TruncatedSeries._raw(a.variables, D, out)


class Substitution:
    """A reusable substitution ``x_i -> g_i`` into series over ``source``.

    Products of the images are cached by exponent vector, so substituting
    many series with the same images shares the work.
    """

    def __init__(self, source, images, target=None):
        self.source = tuple(source)
        imgs = {}
        for name in self.source:
            if name in images:
                imgs[name] = images[name]
        if target is None:
            if not imgs:
                raise StructuralError("cannot infer target variables")
            target = next(iter(imgs.values())).variables
        self.target = tuple(target)
        D = None
        for name in self.source:
            if name not in imgs:
                if name not in self.target:
                    raise StructuralError("no image for variable %r" % name)
                imgs[name] = None
                continue
            g = imgs[name]
            if g.variables != self.target:
                raise StructuralError("image of %r has variables %r, expected %r"
                                      % (name, g.variables, self.target))
            if g.constant_term():
                raise DomainError("image of %r has a nonzero constant term" % name)
            D = g.truncation if D is None else min(D, g.truncation)
        if D is None:
            D = MAX_TRUNCATION
        self.truncation = D
        self._shift = _BITS * len(self.target)
        self._images = []
        for name in self.source:
            g = imgs[name]
            if g is None:
                g = TruncatedSeries.variable(name, self.target, D)
            self._images.append(g._t)
        n = len(self.source)
        self._units = [_pack(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
        self._cache = {0: {0: ONE}}

    def _power_product(self, key, D):
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        # peel off the first variable with a positive exponent
        exps = _unpack(key, len(self.source))
        i = next(j for j, e in enumerate(exps) if e)
        parent = self._power_product(key - self._units[i], D)
        prod = _mul_terms(parent, self._images[i], self._shift, D)
        self._cache[key] = prod
        return prod

    def __call__(self, f):
        return self.apply(f)

    def apply(self, f):
        if f.variables != self.source:
            raise StructuralError("series variables %r do not match substitution source %r"
                                  % (f.variables, self.source))
        D = min(f.truncation, self.truncation)
        fs = f._shift
        s = self._shift
        out = {}
        for key in sorted(f._t):
            if key >> fs > D:
                continue
            c = f._t[key]
            for k, v in self._power_product(key, self.truncation).items():
                if k >> s <= D:
                    _accumulate(out, k, c * v)
        return TruncatedSeries._raw(self.target, D, {k: v for k, v in out.items() if v})


def series_substitute(f, images, target=None):
    """f with each variable replaced by its image (zero constant terms required)."""
    return Substitution(f.variables, images, target).apply(f)


def _check_near_identity(images):
    names = tuple(images)
    source = images[names[0]].variables
    if set(names) != set(source):
        raise StructuralError("images must be given for exactly the variables %r" % (source,))
    D = min(g.truncation for g in images.values())
    corrections = {}
    for name in source:
        g = images[name]
        if g.variables != source:
            raise StructuralError("image of %r is not a series in %r" % (name, source))
        x = TruncatedSeries.variable(name, source, D)
        lin = g.truncate(1)
        if lin != x.truncate(1):
            raise NonInvertibleMap("linear part of the image of %r is %s, not %s"
                                   % (name, lin.to_string(), name))
        corrections[name] = g.truncate(D) - x
    return source, D, corrections


def solve_near_identity(images, rhs):
    """Find X with images(X) = rhs.

    ``images`` maps each source variable x_i to x_i + (degree >= 2) in the
    source variables; ``rhs`` maps each source variable to a series with
    zero constant term in some other variables.  Iterates X = rhs - h(X),
    gaining one degree per pass.
    """
    source, D, corrections = _check_near_identity(images)
    target = rhs[source[0]].variables
    D = min(D, min(rhs[name].truncation for name in source))
    for name in source:
        if rhs[name].variables != target:
            raise StructuralError("right-hand sides must share one variable list")
        if rhs[name].constant_term():
            raise DomainError("right-hand side for %r has a nonzero constant term" % name)
    current = {name: rhs[name].truncate(1) for name in source}
    for p in range(2, D + 1):
        approx = {name: current[name].with_truncation(p) for name in source}
        sub = Substitution(source, approx, target)
        current = {name: rhs[name].truncate(p) - sub.apply(corrections[name].truncate(p))
                   for name in source}
    return {name: current[name].with_truncation(D) for name in source}


def invert_triangular_map(images, target_names=None):
    """Invert ``x_i -> x_i + (degree >= 2)``.

    ``images`` maps each source variable to its image, a series in the
    source variables.  Returns a map from each source variable to a series in
    ``target_names`` (defaults to the source names) such that substituting it
    into the images gives back the coordinate functions.
    """
    source, D, _ = _check_near_identity(images)
    target = tuple(target_names) if target_names is not None else source
    if len(target) != len(source):
        raise StructuralError("need %d target names" % len(source))
    rhs = {name: TruncatedSeries.variable(t, target, D) for name, t in zip(source, target)}
    return solve_near_identity(images, rhs)
