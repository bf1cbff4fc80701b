"""Finite-dimensional commutative coefficient algebras given by structure
constants, so that ``TruncatedSeries`` can carry vector-valued coefficients.
"""

from itertools import product

from .errors import DomainError, ValidationError
from .rational import ONE, Q, ZERO

__all__ = ["CoefficientAlgebra", "AlgebraElement", "truncated_polynomial_algebra"]


class CoefficientAlgebra:
    """Basis labels, a table ``(i, j) -> {k: c}`` and the index of the unit."""

    def __init__(self, labels, table, unit_index=0, check=True):
        self.labels = tuple(labels)
        self.table = {(i, j): {k: Q(c) for k, c in row.items() if c}
                      for (i, j), row in table.items()}
        self.unit_index = unit_index
        if check:
            self._validate()

    @property
    def dim(self):
        return len(self.labels)

    def _prod(self, i, j):
        return self.table.get((i, j), {})

    def _validate(self):
        n = self.dim
        for i, j in product(range(n), repeat=2):
            if self._prod(i, j) != self._prod(j, i):
                raise ValidationError("table is not commutative at %s*%s"
                                      % (self.labels[i], self.labels[j]))
        u = self.unit_index
        for i in range(n):
            if self._prod(u, i) != {i: ONE}:
                raise ValidationError("%s does not act as the unit on %s"
                                      % (self.labels[u], self.labels[i]))
        for i, j, k in product(range(n), repeat=3):
            if (self.basis(i) * self.basis(j)) * self.basis(k) != \
                    self.basis(i) * (self.basis(j) * self.basis(k)):
                raise ValidationError("table is not associative on (%s, %s, %s)"
                                      % (self.labels[i], self.labels[j], self.labels[k]))

    def element(self, coeffs):
        if isinstance(coeffs, dict):
            vec = [ZERO] * self.dim
            for k, c in coeffs.items():
                idx = self.labels.index(k) if not isinstance(k, int) else k
                vec[idx] = Q(c)
            return AlgebraElement(self, vec)
        return AlgebraElement(self, [Q(c) for c in coeffs])

    def basis(self, i):
        vec = [ZERO] * self.dim
        vec[i] = ONE
        return AlgebraElement(self, vec)

    def unit(self):
        return self.basis(self.unit_index)

    def zero(self):
        return AlgebraElement(self, [ZERO] * self.dim)


class AlgebraElement:
    __slots__ = ("algebra", "vec")

    def __init__(self, algebra, vec):
        self.algebra = algebra
        self.vec = tuple(vec)

    def _lift(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise DomainError("elements of different algebras")
            return other
        return self.algebra.unit().scale(Q(other))

    def scale(self, c):
        return AlgebraElement(self.algebra, [c * v for v in self.vec])

    def __add__(self, other):
        other = self._lift(other)
        return AlgebraElement(self.algebra, [a + b for a, b in zip(self.vec, other.vec)])

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, [-a for a in self.vec])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(Q(other))
        other = self._lift(other)
        out = [ZERO] * self.algebra.dim
        for i, a in enumerate(self.vec):
            if not a:
                continue
            for j, b in enumerate(other.vec):
                if not b:
                    continue
                for k, c in self.algebra._prod(i, j).items():
                    out[k] += a * b * c
        return AlgebraElement(self.algebra, out)

    def __rmul__(self, other):
        return self.scale(Q(other))

    def __bool__(self):
        return any(self.vec)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra is other.algebra and self.vec == other.vec
        return self == self._lift(other)

    __hash__ = None

    def inverse(self):
        """Solve x * self = 1 exactly."""
        from .linalg import solve
        n = self.algebra.dim
        cols = [self * self.algebra.basis(j) for j in range(n)]
        matrix = [[cols[j].vec[i] for j in range(n)] for i in range(n)]
        try:
            x = solve(matrix, list(self.algebra.unit().vec))
        except ZeroDivisionError:
            raise DomainError("%s is not invertible" % (self,)) from None
        return AlgebraElement(self.algebra, x)

    def __repr__(self):
        terms = ["%s*%s" % (c, l) for c, l in zip(self.vec, self.algebra.labels) if c]
        return " + ".join(terms) if terms else "0"


def truncated_polynomial_algebra(symbol, top):
    """Q[x]/(x^{top+1}) with basis 1, x, ..., x^top."""
    labels = ["1"] + [symbol if p == 1 else "%s^%d" % (symbol, p) for p in range(1, top + 1)]
    table = {}
    for i in range(top + 1):
        for j in range(top + 1):
            if i + j <= top:
                table[(i, j)] = {i + j: 1}
    return CoefficientAlgebra(labels, table, 0)
