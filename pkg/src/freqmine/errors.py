"""Exception hierarchy shared by all freqmine modules."""


class FreqMineError(Exception):
    """Base class for every error raised by this package."""


class ParseError(FreqMineError, ValueError):
    pass


class EmptyDatabase(FreqMineError, ValueError):
    pass


class InvalidBase(FreqMineError, ValueError):
    pass


class TooManyPartitions(FreqMineError, ValueError):
    pass


class IndexMiss(FreqMineError, KeyError):
    """An item was looked up in an F1 index that does not hold it.

    During mining this means a candidate slipped through pruning.
    """


class CorruptIndex(FreqMineError, LookupError):
    pass


class UnknownItem(FreqMineError, KeyError):
    pass


class InconsistentInput(FreqMineError, ValueError):
    pass


class ConfigError(FreqMineError, ValueError):
    pass


class OracleLimitExceeded(FreqMineError, ValueError):
    pass
