"""
Custom exceptions for the VDB digraph toolkit

Every exception carries the process exit code the CLI reports for it:
0 success, 1 verification inconsistency, 2 input error, 3 domain violation.
"""
from typing import Any, Dict, Optional


EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_INPUT_ERROR = 2
EXIT_DOMAIN_ERROR = 3


class VdbException(Exception):
    """Base exception for the VDB digraph toolkit"""

    def __init__(
        self,
        message: str,
        error_code: str = "VDB_ERROR",
        exit_code: int = EXIT_INPUT_ERROR,
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.error_code = error_code
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class EdgeListError(VdbException):
    """Malformed edge-list input"""

    def __init__(self, message: str, line: int, details: Optional[Dict[str, Any]] = None):
        self.line = line
        super().__init__(
            message=f"line {line}: {message}",
            error_code="EDGE_LIST_ERROR",
            exit_code=EXIT_INPUT_ERROR,
            details={"line": line, **(details or {})}
        )


class InvalidDigraphError(VdbException):
    """Arc set violates the strict-digraph invariants"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code="INVALID_DIGRAPH",
            exit_code=EXIT_INPUT_ERROR,
            details=details
        )


class UnknownIndexError(VdbException):
    """Index name not in the registry"""

    def __init__(self, name: str):
        super().__init__(
            message=f"unknown index name {name!r}",
            error_code="UNKNOWN_INDEX",
            exit_code=EXIT_INPUT_ERROR,
            details={"name": name}
        )


class UnknownFamilyError(VdbException):
    """Family name not in the registry"""

    def __init__(self, name: str):
        super().__init__(
            message=f"unknown digraph family {name!r}",
            error_code="UNKNOWN_FAMILY",
            exit_code=EXIT_INPUT_ERROR,
            details={"name": name}
        )


class ConfigError(VdbException):
    """Run configuration is incomplete or inconsistent"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code="CONFIG_ERROR",
            exit_code=EXIT_INPUT_ERROR,
            details=details
        )


class IsolatedVertexError(VdbException):
    """Operation requires a digraph without isolated vertices"""

    def __init__(self, vertex: int, n: int):
        super().__init__(
            message=f"vertex {vertex} is isolated (n={n})",
            error_code="ISOLATED_VERTEX",
            exit_code=EXIT_DOMAIN_ERROR,
            details={"vertex": vertex, "n": n}
        )


class DomainError(VdbException):
    """Argument outside the mathematical domain of an operation"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code="DOMAIN_ERROR",
            exit_code=EXIT_DOMAIN_ERROR,
            details=details
        )


class NotApplicableError(VdbException):
    """Bound statement used outside its applicability range"""

    def __init__(self, statement_id: str, n: int, reason: str):
        super().__init__(
            message=f"{statement_id} is not applicable at n={n}: {reason}",
            error_code="NOT_APPLICABLE",
            exit_code=EXIT_DOMAIN_ERROR,
            details={"statement": statement_id, "n": n}
        )


class VerificationError(VdbException):
    """Exhaustive search contradicts a bound statement"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code="VERIFICATION_FAILED",
            exit_code=EXIT_INCONSISTENT,
            details=details
        )
