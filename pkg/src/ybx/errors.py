"""Exception types shared across the package."""


class YbxError(Exception):
    """Base class for all package-specific errors."""


class DimMismatch(YbxError):
    """Operands do not share a compatible dimension."""


class BadShape(YbxError):
    """State or operator has the wrong tensor-factor structure."""


class BadFactorIndex(YbxError):
    """A tensor-factor index is out of range."""


class NonHermitian(YbxError):
    """Matrix expected to be Hermitian is not."""


class NonAntiHermitian(YbxError):
    """Evolution generator expected to be anti-Hermitian is not."""


class NonUnitaryFamily(YbxError):
    """A parametrized operator family failed a unitarity check."""


class SiteOutOfRange(YbxError):
    """Lattice or operator site index outside the chain."""


class BadModel(YbxError):
    """Chain spec names a model the constructor does not build."""


class BadParity(YbxError):
    """Operator count with the wrong parity (e.g. even where odd required)."""


class UnsupportedSpin(YbxError):
    """Spin value outside the implemented range."""


class SingularDenominator(YbxError):
    """Parameter constraint hit its additivity pole."""


class OutOfRange(YbxError):
    """No real solution exists for the requested constraint."""


class NotClosed(YbxError):
    """Subspace leakage exceeded tolerance in a dimensional reduction."""


class DegenerateBasis(YbxError):
    """Constructed basis vectors failed orthogonality."""


class NormalizationBroken(YbxError):
    """A trigonometric normalization identity failed off tolerance."""


class UnknownFunctional(YbxError):
    """Sweep functional name not recognized."""


class UnknownModel(YbxError):
    """Sweep model name not recognized."""


class UnknownCheck(YbxError):
    """Check identifier not recognized."""
