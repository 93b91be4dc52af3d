"""Exception types shared across the package."""


class AxiomViolation(ValueError):
    """A matrix fails one of the metric axioms M1-M4.

    ``i``, ``j`` (and ``k`` for the triangle inequality) are witness indices.
    """

    def __init__(self, axiom, i, j, k=None, detail=""):
        self.axiom = axiom
        self.i = i
        self.j = j
        self.k = k
        where = f"({i}, {j})" if k is None else f"({i}, {j}, {k})"
        msg = f"axiom {axiom} violated at {where}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class PreconditionFailed(ValueError):
    pass


class InvalidCorrespondence(ValueError):
    pass


class SizeGuardExceeded(ValueError):
    pass


class OverflowGuard(ValueError):
    pass


class GuardExceeded(ValueError):
    pass


class HypothesisViolated(ValueError):
    """A cover operation's input does not satisfy the hypotheses of the absorbing union."""

    def __init__(self, which, detail=""):
        self.which = which
        super().__init__(f"{which}: {detail}" if detail else which)


class ClassCountMismatch(ValueError):
    pass


class CertificateUnavailable(RuntimeError):
    pass
