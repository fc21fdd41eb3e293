from app.core.exceptions.computation_exception import ComputationError

__all__ = ["ComputationError"]
