"""Exception hierarchy.

Every error carries a short machine-readable ``code`` which the command line
front end copies into its JSON error document.
"""


class ThueError(Exception):
    code = "error"


class ValidationError(ThueError, ValueError):
    """Malformed or inconsistent input.  ``pointer`` locates the bad field."""

    code = "validation"

    def __init__(self, message, pointer=None):
        super().__init__(message if pointer is None else f"{pointer}: {message}")
        self.pointer = pointer


class FieldMismatch(ThueError, TypeError):
    code = "field_mismatch"


class DivisionByZero(ThueError, ZeroDivisionError):
    code = "division_by_zero"


class ZeroElement(ThueError, ValueError):
    code = "zero_element"


class PrecisionExhausted(ThueError, ArithmeticError):
    """Working precision too low to certify a result; retry with more bits."""

    code = "precision_exhausted"


class RankDeficient(ThueError, ValueError):
    code = "rank_deficient"


class DegenerateTwist(ThueError, ValueError):
    """The twisted element generates a proper subfield."""

    code = "degenerate_twist"


class ZeroConstantTerm(ThueError, ValueError):
    code = "zero_constant_term"


class DegenerateIndex(ThueError, ValueError):
    code = "degenerate_index"


class RealRootPresent(ThueError, ValueError):
    code = "real_root_present"


class CoincidentEmbeddings(ThueError, ValueError):
    code = "coincident_embeddings"


class NotAlmostTotallyImaginary(ThueError, ValueError):
    code = "not_almost_totally_imaginary"


class ProviderMissing(ThueError, ValueError):
    code = "provider_missing"
