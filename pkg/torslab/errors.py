"""
Error hierarchy for the workbench.

Every error raised on bad input derives from TorslabError and carries the
exit code the CLI maps it to. Broken internal invariants are plain
AssertionErrors and are never caught.
"""


class TorslabError(Exception):
    """Base error; exit_code follows the CLI contract (2 usage, 3 caps, 4 IO)."""
    exit_code = 2


# lattice_core
class NotAPoset(TorslabError):
    pass


class NotALattice(TorslabError):
    pass


class UnknownElement(TorslabError):
    pass


class NoUniqueMax(TorslabError):
    pass


class NotJoinIrreducible(TorslabError):
    pass


class NotCanonical(TorslabError):
    pass


class TooLarge(TorslabError):
    exit_code = 3


# nakayama
class InvalidKupisch(TorslabError):
    pass


class SpecParseError(TorslabError):
    pass


# linrep_oracle
class ShapeMismatch(TorslabError):
    pass


class NotIntertwiner(TorslabError):
    pass


class TruncatedEnumeration(TorslabError):
    exit_code = 3

    def __init__(self, message: str, classes: int = 0):
        super().__init__(message)
        self.classes = classes


class OracleUnsupported(TorslabError):
    pass


# subcat
class NotExtensionClosed(TorslabError):
    pass


class NotMinimalExtending(TorslabError):
    pass


# brickology
class NotABrick(TorslabError):
    pass


class NotMonobrick(TorslabError):
    pass


class NotSemibrick(TorslabError):
    pass


# verify / cli
class UnknownCheck(TorslabError):
    pass


class ConfigError(TorslabError):
    pass


class UnknownInstance(TorslabError):
    pass


class ExportError(TorslabError):
    exit_code = 4


class ExportOptionError(ExportError):
    exit_code = 2
