"""
Description:
Domain exceptions raised by the automaton library, the CLI and the API.

Every exception carries a `status_code` and a `detail` string so that the same
object can be rendered as an HTTP response (see app.errors.handlers) or turned
into a CLI exit code.

Dependencies:
- typing: For type annotations.

Author: @kcaparas1630
"""
from typing import Iterable, List, Optional, Union

HTTP_400_BAD_REQUEST = 400
HTTP_404_NOT_FOUND = 404
HTTP_413_REQUEST_ENTITY_TOO_LARGE = 413
HTTP_500_INTERNAL_SERVER_ERROR = 500


class AutomatonError(Exception):
    """Base class of every domain error."""

    status_code: int = HTTP_400_BAD_REQUEST

    def __init__(self, detail: str = "Automaton error"):
        super().__init__(detail)
        self.detail = detail


class InvalidAutomatonError(AutomatonError):
    def __init__(self, diagnostics: Iterable[str]):
        self.diagnostics: List[str] = list(diagnostics)
        super().__init__("Invalid automaton: " + "; ".join(self.diagnostics))


class UnknownSymbolError(AutomatonError):
    def __init__(self, kind: str, symbol: object):
        self.kind = kind
        self.symbol = symbol
        super().__init__(f"Unknown {kind} symbol: {symbol!r}")


class EmptyWordError(AutomatonError):
    def __init__(self, detail: str = "The input word must not be empty."):
        super().__init__(detail)


class InvalidPartitionError(AutomatonError):
    def __init__(self, detail: str = "Invalid partition"):
        super().__init__(detail)


class GroundMismatchError(InvalidPartitionError):
    def __init__(self, detail: str = "Partitions are defined over different ground sets."):
        super().__init__(detail)


class ModeMismatchError(AutomatonError):
    def __init__(self, expected: str, actual: str):
        super().__init__(f"Operation requires a {expected} logic, got {actual}.")


class EmptyLogicError(AutomatonError):
    def __init__(self, detail: str = "The partition logic has no contexts."):
        super().__init__(detail)


class NotReversibleError(AutomatonError):
    def __init__(self, reason: str = "combined map is not a bijection"):
        super().__init__(f"not reversible: {reason}")


class PermutationSizeError(AutomatonError):
    def __init__(self, size: int, n_states: int, n_inputs: int):
        super().__init__(
            f"Permutation of {size} elements does not match |S|·|I| = {n_states}·{n_inputs}."
        )


class OutOfRangeError(AutomatonError):
    def __init__(self, detail: str = "Value out of range"):
        super().__init__(detail)


class InvalidNitSetError(AutomatonError):
    def __init__(self, detail: str = "Invalid nit partition set"):
        super().__init__(detail)


class GuardExceededError(AutomatonError):
    status_code = HTTP_413_REQUEST_ENTITY_TOO_LARGE

    def __init__(self, what: str, size: Union[int, str], limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"{what} {size} exceeds the configured limit {limit}.")


class UnsupportedObjectError(AutomatonError):
    def __init__(self, kind: str):
        super().__init__(f"Cannot export objects of kind '{kind}' to DOT.")


class UnknownExampleError(AutomatonError):
    status_code = HTTP_404_NOT_FOUND

    def __init__(self, name: str, valid: Optional[Iterable[str]] = None):
        names = ", ".join(valid) if valid else ""
        detail = f"Unknown example '{name}'." + (f" Valid names: {names}" if names else "")
        super().__init__(detail)


class SerializationError(AutomatonError):
    def __init__(self, detail: str = "Malformed envelope"):
        super().__init__(detail)


class ConfigurationError(AutomatonError):
    status_code = HTTP_500_INTERNAL_SERVER_ERROR

    def __init__(self, detail: str = "Invalid configuration"):
        super().__init__(detail)
