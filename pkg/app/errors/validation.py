from app.errors.base import BaseAppException


class ValidationException(BaseAppException):
    """Input or data error."""
    exit_code = 2

    def __init__(self, message, *args: object) -> None:
        super().__init__(message, *args)


# Series construction and analysis
class EmptySeriesException(ValidationException):
    pass


class InvalidFrequencyException(ValidationException):
    pass


class InvalidValueException(ValidationException):
    pass


class MissingValuesPresentException(ValidationException):
    pass


class LagOutOfRangeException(ValidationException):
    pass


class ZeroVarianceException(ValidationException):
    pass


# Decomposition
class FrequencyTooLowException(ValidationException):
    pass


class SeriesTooShortException(ValidationException):
    pass


class NeighborhoodTooSmallException(ValidationException):
    pass


class NonIncreasingXException(ValidationException):
    pass


# Amputation
class AlreadyMissingException(ValidationException):
    pass


class NegativeRateException(ValidationException):
    pass


# Imputation
class AllMissingException(ValidationException):
    pass


class EmptyPhaseException(ValidationException):
    pass


class InvalidModelException(ValidationException):
    pass


# Metrics
class LengthMismatchException(ValidationException):
    pass


class EmptyIndexSetException(ValidationException):
    pass


class IndexOutOfRangeException(ValidationException):
    pass


class ZeroTruthValueException(ValidationException):
    pass


# Benchmark and I/O
class IncompleteDatasetException(ValidationException):
    pass


class NoPlottableRecordsException(ValidationException):
    pass


class FileNotFoundException(ValidationException):
    pass


class EmptyFileException(ValidationException):
    pass


class IoException(ValidationException):
    pass


class ParseException(ValidationException):
    def __init__(self, message, line=None, *args: object) -> None:
        super().__init__(message, *args)
        self.line = line
