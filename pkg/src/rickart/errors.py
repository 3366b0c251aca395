"""Exception types raised while building and analysing rings."""


class RickartError(Exception):
    pass


class AxiomViolation(RickartError):
    """A construction failed one of the *-ring axioms."""

    def __init__(self, axiom, witness=()):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"axiom violated: {axiom} (witness {self.witness})")


class TooLarge(RickartError):
    def __init__(self, size, bound, flag="--max-scan"):
        self.size = size
        self.bound = bound
        self.flag = flag
        super().__init__(f"size {size} exceeds bound {bound} (raise with {flag})")


class BadParameter(RickartError):
    pass


class CrossRingElement(RickartError):
    pass


class NotAProjection(RickartError):
    pass


class CharacteristicMismatch(RickartError):
    pass


class NoUnity(RickartError):
    pass


class ParseError(RickartError):
    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")
