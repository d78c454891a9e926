"""Error types shared across the library.

Every failure mode that callers are expected to handle gets its own class;
the CLI maps these onto exit codes (parse errors, domain errors, violated
reciprocity hypotheses).
"""


class ReciprocityError(ValueError):
    """Base class for all library errors."""


class ParseError(ReciprocityError):
    """Malformed expression, place, lattice or field descriptor literal."""


class MixedFieldError(ReciprocityError):
    """Operands belong to different ground fields."""


class ZeroInputError(ReciprocityError):
    """An operation that is undefined for zero (valuation, inversion, ...)."""


class NotAUnitError(ReciprocityError):
    """Evaluation requested at a place where the function has a zero or pole."""


class UncertifiedFactorError(ReciprocityError):
    """A factorization step produced a cofactor that could not be certified
    irreducible, so place enumeration cannot proceed."""


class PrecisionError(ReciprocityError):
    """A truncated series or window does not cover the requested data."""


class DomainError(ReciprocityError):
    """Structurally invalid request: wrong characteristic, a place of
    unsupported degree, an operator that does not stabilize a lattice, ..."""


class HypothesisViolation(ReciprocityError):
    """A reciprocity-law hypothesis failed a mechanical check.

    `clause` names the failed hypothesis and `detail` records the offending
    data (for instance the subset of the family that broke independence).
    """

    def __init__(self, clause: str, detail: str):
        self.clause = clause
        self.detail = detail
        super().__init__(f"hypothesis ({clause}) violated: {detail}")
