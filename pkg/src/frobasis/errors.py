"""Exception types shared across the package."""


class FrobasisError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(FrobasisError, ValueError):
    """Tensor shapes incompatible with the requested operation."""


class ToleranceError(FrobasisError, ValueError):
    """Invalid tolerance specification."""


class BasisError(FrobasisError, ValueError):
    """Basis vectors dependent, or inconsistent with the declared kind."""


class ConvergenceError(FrobasisError, RuntimeError):
    """An iterative method hit its iteration cap before converging."""


class ExtractionError(FrobasisError, RuntimeError):
    """Copyable-element extraction failed (degenerate spectra or the
    structure is not of basis type)."""


class MatchingError(FrobasisError, RuntimeError):
    """No valid vector matching within tolerance."""


class HomomorphismError(FrobasisError, RuntimeError):
    """A map does not induce a function between copyable bases."""


class ContractViolation(FrobasisError, RuntimeError):
    """A consequence the theory guarantees failed numerically; indicates a
    bug or a structure far outside its claimed class."""


class FileFormatError(FrobasisError, ValueError):
    """Malformed input file; message carries a field/position diagnostic."""
