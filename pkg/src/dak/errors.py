"""Exception hierarchy shared by every module of the package."""


class DakError(Exception):
    """Base class for all errors raised by dak."""


class EmptyCollection(DakError, ValueError):
    pass


class ReservedByteInDocument(DakError, ValueError):
    def __init__(self, doc: int, position: int, value: int):
        self.doc = doc
        self.position = position
        self.value = value
        super().__init__(
            f"document {doc} contains reserved byte 0x{value:02x} at offset {position}"
        )


class PositionOutOfRange(DakError, IndexError):
    pass


class PrefixOutOfRange(DakError, IndexError):
    pass


class OracleCapExceeded(DakError, ValueError):
    pass


class NotAPermutation(DakError, ValueError):
    pass


class LengthMismatch(DakError, ValueError):
    pass


class UniverseMismatch(DakError, ValueError):
    pass


class WrongPhase(DakError, RuntimeError):
    pass


class MalformedSA(DakError, ValueError):
    pass


class CycleTooShort(DakError, ValueError):
    pass


class FormatError(DakError, ValueError):
    """A serialized file or input collection could not be parsed."""
