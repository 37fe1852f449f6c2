"""Exception types raised by the library."""


class BiquotientError(ValueError):
    """Base class for validation failures (CLI maps these to exit code 2)."""

    def to_dict(self):
        return {"error": type(self).__name__, "message": str(self)}


class NonFreeActionError(BiquotientError):
    """The five-parameter action has a nontrivial finite stabilizer."""

    def __init__(self, tuple_, permutation, divisor):
        self.tuple = tuple(tuple_)
        self.permutation = tuple(permutation)
        self.divisor = divisor
        super().__init__(
            f"action is not free for {self.tuple}: split {self.permutation} "
            f"has common divisor {divisor}"
        )

    def to_dict(self):
        d = super().to_dict()
        d.update(tuple=list(self.tuple), permutation=list(self.permutation),
                 divisor=self.divisor)
        return d


class ParityError(BiquotientError):
    """sigma_1 is even, so the relation matrix is not defined."""

    def __init__(self, tuple_, sigma1):
        self.tuple = tuple(tuple_)
        self.sigma1 = sigma1
        super().__init__(f"sigma_1 = {sigma1} is even for {self.tuple}")

    def to_dict(self):
        d = super().to_dict()
        d.update(tuple=list(self.tuple), sigma1=self.sigma1)
        return d


class ZeroSplitError(BiquotientError):
    pass


class NotAdmissibleError(BiquotientError):
    pass


class DegeneratePlaneError(BiquotientError):
    pass


class NotOrthonormalError(BiquotientError):
    pass


class RankDeficiencyError(BiquotientError):
    pass
