from app.errors.base import BaseAppException


class ProcessingException(BaseAppException):
    """Internal numerical failure."""
    exit_code = 3

    def __init__(self, message, *args: object) -> None:
        super().__init__(message, *args)


class DegenerateInnovationException(ProcessingException):
    pass


class OptimizationFailedException(ProcessingException):
    pass
