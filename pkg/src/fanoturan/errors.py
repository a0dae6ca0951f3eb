"""Error taxonomy shared by every module.

Three failure categories are distinguished so that callers (and the CLI
exit-code mapping) can react without string matching:

* ``ParameterError``   - the request itself is malformed (bad vertex count,
                         unknown family name, vertex inside its own query set).
* ``CapabilityError``  - the request is well formed but outside the tool's
                         declared budget (vertex caps, node budgets, runs that
                         require the explicit long-run switch).
* ``VerificationError``- an exhaustive check found a counterexample; the
                         exception carries the failing certificate so the
                         counterexample is never lost in a traceback.
"""

from __future__ import annotations


class FanoturanError(Exception):
    """Base class for all library errors."""


class ParameterError(FanoturanError, ValueError):
    """Raised when arguments violate an operation's preconditions."""


class FormatError(ParameterError):
    """Raised when a hypergraph or multigraph file fails to parse."""


class CapabilityError(FanoturanError):
    """Raised when a request exceeds a declared cap or search budget.

    ``best_found`` optionally carries the best lower bound obtained before
    the budget ran out, so an interrupted search still reports progress.
    """

    def __init__(self, message: str, best_found: int | None = None):
        super().__init__(message)
        self.best_found = best_found


class VerificationError(FanoturanError):
    """Raised when a verifier finds a counterexample.

    ``certificate`` is the failing certificate (verdict ``fail``) whose
    witness list contains at least one counterexample.
    """

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate
