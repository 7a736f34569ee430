"""Exception hierarchy shared by all modules."""


class ToricError(Exception):
    """Base class for every error raised by this package."""


class RankDeficient(ToricError):
    pass


class SingularCone(ToricError):
    pass


class MalformedFan(ToricError):
    pass


class LimitExceeded(ToricError):
    pass


class PreconditionFailed(ToricError):
    pass


class DegreeTooSmall(ToricError):
    """Raised when some twisted degree c_j + d_j is at most 2g - 2."""

    def __init__(self, indices, genus):
        self.indices = tuple(indices)
        self.genus = genus
        cols = ", ".join(str(j + 1) for j in self.indices)
        super().__init__(
            f"twisted degree c'_j <= 2g-2 = {2 * genus - 2} for column(s) {cols}"
        )


class ParseError(ToricError):
    def __init__(self, message, field=None, line=None):
        self.message = message
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
