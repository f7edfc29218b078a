class GuardError(ValueError):
    """An exhaustive enumeration was asked to run beyond its size guard."""

    def __init__(self, guard: str, limit: int, got: int):
        self.guard, self.limit, self.got = guard, limit, got
        super().__init__(f"{guard} guard exceeded: {got} > {limit}")


class PreconditionError(ValueError):
    """An operation's hypothesis does not hold for the given input."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)
