from app.errors.base import BaseAppException
from app.errors.processing import (
    DegenerateInnovationException,
    OptimizationFailedException,
    ProcessingException,
)
from app.errors.validation import (
    AllMissingException,
    AlreadyMissingException,
    EmptyFileException,
    EmptyIndexSetException,
    EmptyPhaseException,
    EmptySeriesException,
    FileNotFoundException,
    FrequencyTooLowException,
    IncompleteDatasetException,
    IndexOutOfRangeException,
    InvalidFrequencyException,
    InvalidModelException,
    InvalidValueException,
    IoException,
    LagOutOfRangeException,
    LengthMismatchException,
    MissingValuesPresentException,
    NegativeRateException,
    NeighborhoodTooSmallException,
    NoPlottableRecordsException,
    NonIncreasingXException,
    ParseException,
    SeriesTooShortException,
    ValidationException,
    ZeroTruthValueException,
    ZeroVarianceException,
)

__all__ = [
    "BaseAppException",
    "ProcessingException",
    "ValidationException",
    "DegenerateInnovationException",
    "OptimizationFailedException",
    "AllMissingException",
    "AlreadyMissingException",
    "EmptyFileException",
    "EmptyIndexSetException",
    "EmptyPhaseException",
    "EmptySeriesException",
    "FileNotFoundException",
    "FrequencyTooLowException",
    "IncompleteDatasetException",
    "IndexOutOfRangeException",
    "InvalidFrequencyException",
    "InvalidModelException",
    "InvalidValueException",
    "IoException",
    "LagOutOfRangeException",
    "LengthMismatchException",
    "MissingValuesPresentException",
    "NegativeRateException",
    "NeighborhoodTooSmallException",
    "NoPlottableRecordsException",
    "NonIncreasingXException",
    "ParseException",
    "SeriesTooShortException",
    "ZeroTruthValueException",
    "ZeroVarianceException",
]
