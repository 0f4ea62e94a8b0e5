"""Exception hierarchy for VarSeq"""


class VarSeqError(Exception):
    """Base class for every error raised by the library."""


class InvalidNumberSet(VarSeqError, ValueError):
    """The input numbers cannot form a set to sequence (empty, non-positive, non-finite)."""


class MismatchedSets(VarSeqError, ValueError):
    """A sequence does not permute the expected multiset."""


class IndexOutOfRange(VarSeqError, IndexError):
    """A 1-based position or window lies outside the sequence."""


class InstanceTooLarge(VarSeqError):
    """The oracle refuses to enumerate n! permutations for this n."""

    def __init__(self, n, limit):
        super().__init__(f"n={n} exceeds the oracle limit of {limit}")
        self.n = n
        self.limit = limit


class InputParseError(VarSeqError, ValueError):
    """An input file could not be read; carries the 1-based line number."""

    def __init__(self, path, line_number, reason):
        where = f"{path}:{line_number}" if line_number else str(path)
        super().__init__(f"{where}: {reason}")
        self.path = path
        self.line_number = line_number
        self.reason = reason


class UsageError(VarSeqError):
    """Bad command line."""
