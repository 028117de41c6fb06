from app.services.missing.simulator import (
    AmputationResult,
    create_missing,
    exponential_gap_indices,
    make_generator,
)

__all__ = ["AmputationResult", "create_missing", "exponential_gap_indices", "make_generator"]
