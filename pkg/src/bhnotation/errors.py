"""Exception hierarchy.

Domain errors (a well-formed request with no answer in the notation system)
derive from :class:`DomainError`; size and budget failures derive from
:class:`ResourceError`; malformed input text raises :class:`ParseError`.
"""


class DomainError(Exception):
    pass


class ResourceError(Exception):
    pass


class ParseError(ValueError):
    def __init__(self, message, text=None, pos=None):
        self.text = text
        self.pos = pos
        if text is not None and pos is not None:
            message = f"{message} at position {pos} in {text!r}"
        super().__init__(message)


class InvalidTerm(DomainError):
    """A raw term failed normal-form validation."""

    def __init__(self, diagnostic):
        self.diagnostic = diagnostic
        super().__init__(str(diagnostic))


class NotRepresentable(DomainError):
    pass


class PsiUndefined(DomainError):
    def __init__(self, arg, witness):
        self.arg = arg
        self.witness = witness
        super().__init__(f"psi undefined: witness {witness} is not below the argument")


class NotALimit(DomainError):
    pass


class NotInFragment(DomainError):
    pass


class NonDecomposable(DomainError):
    pass


class IllFormed(DomainError):
    """An RS term or formula violates a structural side condition."""


class QuantifierEscape(DomainError):
    pass


class BudgetExceeded(ResourceError):
    def __init__(self, limit, depth, detail=""):
        self.limit = limit
        self.depth = depth
        msg = f"budget exceeded: {limit} limit tripped at unfolding depth {depth}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
