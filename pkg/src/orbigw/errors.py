"""Exception hierarchy.  Each class carries the CLI exit code it maps to."""


class EngineError(Exception):
    exit_code = 4
    stage = None


class ValidationError(EngineError, ValueError):
    """Bad input: non-CY target, malformed config, invalid extension class."""
    exit_code = 2


class StructuralError(EngineError, ValueError):
    """Series with mismatched variable lists were combined."""


class DomainError(EngineError, ValueError):
    """An operation was applied outside its domain (non-unit constant term, ...)."""


class NonInvertibleMap(EngineError, ValueError):
    """A coordinate change whose linear part is not the identity."""


class CYViolation(EngineError):
    """Column sums of the weight matrix differ from the summed multi-degrees."""

    def __init__(self, row, lhs, rhs):
        self.row, self.lhs, self.rhs = row, lhs, rhs
        super().__init__(
            "Calabi-Yau check failed in weight-matrix row %d: column sum %s != "
            "multi-degree sum %s" % (row, lhs, rhs))


class NonInvertibleExtension(EngineError):
    """The I-function has degree-2 classes outside span{1, H, phi_i}."""
    exit_code = 3

    def __init__(self, classes, witnesses):
        self.classes = list(classes)
        self.witnesses = dict(witnesses)
        lines = ["the chosen extension does not give an invertible mirror map: "
                 "the z^-1 part of the I-function contains classes that are not "
                 "among the extension classes, so the number of mirror "
                 "coordinates is smaller than the dimension of the degree-2 "
                 "state space it reaches"]
        for c in self.classes:
            ws = ", ".join(str(tuple(d)) for d in self.witnesses.get(c, [])[:3])
            lines.append("  missing %s (witness lattice points d = %s)" % (c, ws))
        super().__init__("\n".join(lines))


class ExtractionInconsistency(EngineError):
    """Two determinations of the same invariant disagree."""

    def __init__(self, monomial, values):
        self.monomial, self.values = monomial, values
        super().__init__("inconsistent determinations of the coefficient of %s: %s"
                         % (monomial, ", ".join(str(v) for v in values)))


class InternalConsistencyError(EngineError):
    """An invariant that must hold by construction was violated."""
