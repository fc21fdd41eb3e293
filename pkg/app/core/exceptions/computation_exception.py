"""
Computation exception class
"""


class ComputationError(Exception):
    """
    Error raised by the engine.

    Carries the key, message and HTTP status of an error dictionary from
    response_constant, plus the process exit code used by the command line.
    """
    def __init__(
        self,
        error_dict: dict,
        value: any = None,
    ):
        self.key = error_dict.get("key", "unknown_error_key")
        self.message = error_dict.get("message", "An unexpected error occurred.")
        self.status_code = error_dict.get("status_code", 400)
        self.exit_code = error_dict.get("exit_code", 1)
        self.value = value
        super().__init__(self.key)

    def __str__(self) -> str:
        if self.value is None:
            return f"{self.key}: {self.message}"
        return f"{self.key}: {self.message} ({self.value})"
