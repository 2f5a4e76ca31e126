class FuzzyError(Exception):
    """
    Base class of the errors raised while building, validating or processing fuzzy numbers
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return self.message


class BranchError(FuzzyError):
    """
    An error located on a piece of a membership branch
    """

    def __init__(self, message: str, branch: str = None, piece_index: int = None, x: float = None):
        self.branch = branch
        self.piece_index = piece_index
        self.x = x
        location = []
        if branch is not None:
            location.append(f"{branch} branch")
        if piece_index is not None:
            location.append(f"piece {piece_index}")
        if x is not None:
            location.append(f"x={x!r}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)


class GapInBranch(BranchError):
    pass


class NonMonotonePiece(BranchError):
    pass


class CoreNotReached(BranchError):
    pass


class ValueOutOfRange(BranchError):
    pass


class SideFunctionViolation(FuzzyError):
    """
    Error that occurs when a pair of side functions violates one of the clauses (i)..(iv)
    of the side-function characterisation of fuzzy numbers
    """

    def __init__(self, clause: str, detail: str):
        self.clause = clause
        super().__init__(f"side functions violate clause {clause}: {detail}")


class StepTooCoarse(FuzzyError):
    def __init__(self, step: float, width: float):
        self.step = step
        self.width = width
        super().__init__(f"grid step {step!r} is coarser than support width / 8 ({width!r} / 8)")


class NonPositiveRadius(FuzzyError):
    def __init__(self, p: float):
        self.p = p
        super().__init__(f"smoother radius must be > 0, got {p!r}")


class InvalidGenerator(FuzzyError):
    def __init__(self, name: str, violated_property: str):
        self.violated_property = violated_property
        super().__init__(f"invalid generator '{name}': {violated_property}")


class LevelsOutOfRange(FuzzyError):
    pass


class DegenerateSpec(FuzzyError):
    pass


class InfinitelyManySingularities(FuzzyError):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} singular points exceed the cap of {cap}")


class PointOutsideSupport(FuzzyError):
    def __init__(self, x: float, support):
        self.x = x
        super().__init__(f"x={x!r} is not inside the open support ({support[0]!r}, {support[1]!r})")


class InvalidSchedule(FuzzyError):
    pass


class FuzzyFileError(FuzzyError):
    """
    Error that occurs when a fuzzy-number document can not be parsed
    """

    def __init__(self, message: str, path: str = None, field: str = None):
        self.path = path
        self.field = field
        prefix = f"{path}: " if path is not None else ""
        suffix = f" (field '{field}')" if field is not None else ""
        super().__init__(f"{prefix}{message}{suffix}")


class NumericFailure(FuzzyError):
    """
    A pipeline produced a negative verdict where a pass was required
    """
    pass
