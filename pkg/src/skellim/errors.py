"""Exception hierarchy shared by every module."""


class SkellimError(Exception):
    """Base class for all library errors."""


class SchemaError(SkellimError):
    """Malformed or unknown-version JSON input; ``path`` locates the problem."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class SimplicialError(SkellimError):
    """Face data violating the simplicial identities or dimension rules."""


class NotAMonomorphism(SkellimError):
    pass


class NonCommutingSquare(SkellimError):
    pass


class BoundExceeded(SkellimError):
    """A computation needed simplices above the truncation bound of an input."""


class MissingLimit(SkellimError):
    """The ambient category lacks a product/pullback needed at a named stage."""

    def __init__(self, message: str, stage: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


class ArityExceeded(MissingLimit):
    """A product of arity above the configured kappa bound was requested."""


class HypothesisViolation(SkellimError):
    pass
