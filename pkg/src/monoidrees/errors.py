"""Exception hierarchy shared by all modules."""


class ReesError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(ReesError):
    pass


class ArityMismatch(ReesError):
    pass


class PreconditionError(ReesError):
    pass


class ParseError(ReesError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        self.message = message
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        elif column is not None:
            where = f"column {column}: "
        super().__init__(where + message)


class ResourceLimit(ReesError):
    pass


class DegenerateInput(ReesError):
    """The u_i share a common factor."""


class CommonFactor(DegenerateInput):
    """f_top and f_deg of a monoid parametrization share a factor."""


class MuNotOne(ReesError):
    def __init__(self, mu, message=None):
        self.mu = mu
        super().__init__(message or f"mu = {mu}; only mu = 1 is supported")


class ShapeMismatch(ReesError):
    pass


class NotSaturatedSuspect(ReesError):
    pass


class Degenerate(ReesError):
    """Base for degenerate-but-reportable inputs (CLI exit code 2)."""


class DegenerateCurve(Degenerate):
    pass


class DegenerateSurface(Degenerate):
    """Some signed minor M_j vanishes; the image has degree < 3.

    ``minors`` holds all three minors; ``candidate`` is a nonzero one, which
    vanishes on the image and is reported as a low-degree implicit equation.
    """

    def __init__(self, minors, candidate, message=None):
        self.minors = tuple(minors)
        self.candidate = candidate
        zero = [f"M{j + 1}" for j, m in enumerate(self.minors) if m.is_zero()]
        super().__init__(message or f"degenerate surface: {', '.join(zero)} vanish")


class CrossCheckMismatch(ReesError):
    pass


class InternalError(ReesError):
    pass
