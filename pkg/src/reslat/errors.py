"""Exception hierarchy.

Every error raised deliberately by the toolkit derives from :class:`ReslatError`,
so callers (and the CLI) can separate algebra problems from programming bugs.
"""


class ReslatError(Exception):
    pass


class MalformedSpec(ReslatError, ValueError):
    """An AlgebraSpec references unknown names or has ragged tables."""


class CapExceeded(ReslatError):
    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class AxiomViolation(ReslatError):
    """Base for failed axioms; ``elements`` holds the offending names."""

    def __init__(self, axiom, elements):
        self.axiom = axiom
        self.elements = tuple(elements)
        super().__init__(f"{axiom} fails at ({', '.join(map(str, self.elements))})")


class LatticeAxiomViolation(AxiomViolation):
    pass


class MonoidAxiomViolation(AxiomViolation):
    pass


class ResiduationViolation(AxiomViolation):
    pass


class NoResidual(AxiomViolation):
    pass


class NotComplemented(ReslatError):
    pass


class NotClosed(ReslatError):
    def __init__(self, op, a, b):
        super().__init__(f"subset not closed under {op}: ({a}, {b})")
        self.op = op
        self.a = a
        self.b = b


class NotAFilter(ReslatError, ValueError):
    pass


class NotProper(ReslatError):
    pass


class NotGlivenko(ReslatError):
    pass


class TrivialAlgebra(ReslatError):
    """Raised by predicates that presuppose a proper filter on a one-element algebra."""


class RadicalMismatch(ReslatError):
    pass


class CenterNotPreserved(ReslatError):
    pass


class NotAMorphism(ReslatError):
    pass


class InvariantViolation(ReslatError):
    """A property that must hold on every residuated lattice was refuted.

    Seeing this means either a bug in the toolkit or a bad input table that
    slipped past validation; it is never a legitimate verdict.
    """


class UnknownKey(ReslatError, KeyError):
    pass


class ParseError(ReslatError):
    def __init__(self, message, *, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"[{', '.join(where)}] " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.field = field
