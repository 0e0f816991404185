"""Exception types shared across the package."""


class ScsiError(Exception):
    """Base class for every error raised by this package."""


class NonPrimitiveModulus(ScsiError, ValueError):
    pass


class DivisionByZero(ScsiError, ZeroDivisionError):
    pass


class NoOrderNElement(ScsiError, ValueError):
    """The field has no element of the requested multiplicative order."""


class LengthMismatch(ScsiError, ValueError):
    pass


class RadiusTooLarge(ScsiError, ValueError):
    """The interpolation budget cannot certify the requested radius."""


class InterpolationFailure(ScsiError, RuntimeError):
    """Interpolation produced no usable polynomial; indicates a defect."""


class TooLargeToEnumerate(ScsiError, ValueError):
    pass


class NoFeasibleCode(ScsiError, ValueError):
    pass


class DomainError(ScsiError, ValueError):
    pass


class WireFormatError(ScsiError, ValueError):
    pass
