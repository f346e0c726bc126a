"""Error types shared across the package."""


class WeylfunError(Exception):
    """Base class for all named errors raised by this package."""


class DomainError(WeylfunError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class SingularityError(DomainError):
    """Evaluation requested at (or past) a singular point of a closed form."""


class NonConvergenceError(WeylfunError):
    """A nested-commutator series neither terminated nor closed in eigen form."""

    def __init__(self, depth: int):
        self.depth = depth
        super().__init__(
            f"conjugation series did not terminate and is not eigen within depth {depth}"
        )


class NotCentralError(WeylfunError):
    """The commutator does not satisfy the central factoring condition."""


class BlowUpError(WeylfunError):
    """An ODE trajectory left the finite domain before the requested time."""

    def __init__(self, t_reached: float):
        self.t_reached = t_reached
        super().__init__(f"factor functions became non-finite at t = {t_reached!r}")


class AccuracyError(WeylfunError):
    """A numeric result failed an internal accuracy control."""


class UnknownCheckError(WeylfunError, KeyError):
    """A check name is not present in the harness registry."""
