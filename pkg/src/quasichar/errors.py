"""Exception hierarchy shared by all quasichar modules."""


class QuasicharError(Exception):
    """Base class for all quasichar errors."""


class InputError(QuasicharError):
    """Malformed user input: bad matrix file, invalid family id, bad indices."""


class ResourceError(QuasicharError):
    """A computation would exceed its configured budget.

    Carries the planned amount of work so callers can raise the budget
    deliberately instead of guessing.
    """

    def __init__(self, message: str, planned: int | None = None,
                 budget: int | None = None):
        if planned is not None and budget is not None:
            message = f"{message} (planned work {planned}, budget {budget})"
        super().__init__(message)
        self.planned = planned
        self.budget = budget


class IntegrityError(QuasicharError):
    """An internal cross-check failed: wrong period, disagreeing paths.

    Never swallowed; this is the designed bug detector.
    """


class ContractError(QuasicharError):
    """A function was called with a value outside its documented contract."""
