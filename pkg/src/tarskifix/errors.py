"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ParseError -> 1, ValidationError -> 2,
SizeLimitExceeded -> 3.
"""


class TarskiFixError(Exception):
    """Base class for all library errors."""


class ParseError(TarskiFixError):
    def __init__(self, line: int, reason: str, path: str | None = None) -> None:
        self.line = line
        self.reason = reason
        self.path = path
        where = f"{path}:" if path else "line "
        super().__init__(f"{where}{line}: {reason}")


class ValidationError(TarskiFixError):
    """An input parsed fine but violates a structural requirement."""


class CycleDetected(ValidationError):
    def __init__(self, cycle: list[str]) -> None:
        self.cycle = cycle
        super().__init__("cover relation has a cycle: " + " < ".join(cycle))


class NotALattice(ValidationError):
    def __init__(self, x: str, y: str) -> None:
        self.pair = (x, y)
        super().__init__(f"{x} and {y} have no unique least upper bound")


class NoBottom(ValidationError):
    def __init__(self) -> None:
        super().__init__("poset has no least element")


class BadGenerators(ValidationError):
    def __init__(self, violators: list[str]) -> None:
        self.violators = violators
        super().__init__(
            "generators do not generate: x != join(down(x)) for " + ", ".join(violators)
        )


class NotMonotone(ValidationError):
    def __init__(self, x: str, y: str) -> None:
        self.pair = (x, y)
        super().__init__(f"map is not monotone: {x} <= {y} but images are not ordered")


class NotCertified(ValidationError):
    def __init__(self) -> None:
        super().__init__("monotone map has not been certified")


class SizeLimitExceeded(TarskiFixError):
    def __init__(self, what: str, size: int, limit: int) -> None:
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
