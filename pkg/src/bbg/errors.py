"""Exception types shared across the package."""


class BbgError(Exception):
    """Base class for every package-specific error."""


class ParameterError(BbgError, ValueError):
    """Structurally invalid parameters or build arguments."""


class TrivialParametersError(ParameterError):
    """min(r, R, n, N) < 2 where a formula needs at least 2.

    With a single robot, a single ghost, or a side of size one the braid
    group of the configuration space is free (or trivial) and the
    connectivity formulas do not apply.
    """


class ParameterOrderError(ParameterError):
    """An operation required canonically ordered parameters (r <= n <= N <= R)."""


class MembershipError(BbgError, LookupError):
    """A cell or simplex does not belong to the complex it was passed with."""


class NotASimplexError(BbgError, ValueError):
    """The set handed to a deletion is not a simplex of the complex."""


class ConsistencyError(BbgError):
    """Two computations that must agree (closed form vs brute force) did not."""


class ResourceLimitError(BbgError, RuntimeError):
    """A size cap or search budget was exceeded.  CLI maps this to exit code 2."""


class SearchBudgetError(ResourceLimitError):
    """The isomorphism search exceeded its node budget."""
