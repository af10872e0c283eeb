"""Exception hierarchy.

``InvalidInput`` subclasses signal a malformed weight matrix (CLI exit 2);
``PreconditionError`` subclasses signal a well-formed system that an
operation is not defined for (CLI exit 1).
"""


class QsdiscError(Exception):
    pass


class InvalidInput(QsdiscError, ValueError):
    pass


class ZeroWeight(InvalidInput):
    def __init__(self, column: int):
        self.column = column  # 1-based
        super().__init__(f"ZeroWeight({column}): weight {column} is zero (a torus-invariant coordinate)")


class NotSurjective(InvalidInput):
    def __init__(self, factors):
        self.factors = list(factors)
        super().__init__(
            f"NotSurjective: invariant factors {self.factors} are not all 1; "
            "rerun with --reduce (reduce_to_image) to pass to the image lattice"
        )


class PreconditionError(QsdiscError, ValueError):
    pass


class NotQuasiSymmetric(PreconditionError):
    def __init__(self, direction=None):
        self.direction = direction
        msg = "NotQuasiSymmetric"
        if direction is not None:
            msg += f": weights on the line through {tuple(direction)} do not sum to zero"
        super().__init__(msg)


class NotCalabiYau(PreconditionError):
    def __init__(self, total=None):
        self.total = total
        msg = "NotCalabiYau"
        if total is not None:
            msg += f": the weights sum to {tuple(total)}, not 0"
        super().__init__(msg)


class SpanFailure(PreconditionError):
    pass


class AllZeroExponents(PreconditionError):
    pass


class PoleOrZero(PreconditionError):
    def __init__(self, direction):
        self.direction = tuple(direction)
        super().__init__(f"PoleOrZero: the point pairs to zero with line direction {self.direction}")


class UnmatchedNormal(QsdiscError, RuntimeError):
    """Circuit normals and zonotope facet normals disagree; an internal fault."""
