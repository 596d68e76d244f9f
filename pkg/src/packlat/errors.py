"""Exception types shared across the package."""


class PacklatError(Exception):
    """Base class for all errors raised by packlat."""


class MalformedInput(PacklatError):
    """An input file or value does not match its declared shape or range."""


class TooLarge(PacklatError):
    """A brute-force enumeration would exceed the built-in size guard."""


class CorruptUnit(PacklatError):
    """A work unit's prefix fails replay against its own grid."""


class CorruptCheckpoint(PacklatError):
    """A checkpoint's decision sequence fails replay against its own grid."""


class VersionMismatch(PacklatError):
    """A checkpoint file was written by an incompatible format version."""
