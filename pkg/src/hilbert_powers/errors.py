class PreconditionError(ValueError):
    """An engine was asked for something outside its supported input class."""


class FitError(ValueError):
    """Samples cannot be fitted by a polynomial in the binomial basis."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
