"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""


class GcoverError(Exception):
    code = "error"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_dict(self):
        out = {"code": self.code, "message": self.message}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class NotAGroup(GcoverError):
    code = "NotAGroup"


class NotASubgroup(GcoverError):
    code = "NotASubgroup"


class UnsupportedGroup(GcoverError):
    code = "UnsupportedGroup"


class NonIntegralMultiplicity(GcoverError):
    code = "NonIntegralMultiplicity"


class NonIntegralCount(GcoverError):
    code = "NonIntegralCount"


class SearchTooLarge(GcoverError):
    code = "SearchTooLarge"

    def __init__(self, required, cutoff):
        super().__init__(
            f"search needs {required} tuples, cutoff is {cutoff}",
            witness={"required": required, "cutoff": cutoff},
        )
        self.required = required
        self.cutoff = cutoff


class InvalidQuery(GcoverError):
    code = "InvalidQuery"


class InconsistentProfile(GcoverError):
    code = "InconsistentProfile"


class IndexOutOfRange(GcoverError):
    code = "IndexOutOfRange"


class GenusMismatch(GcoverError):
    code = "GenusMismatch"


class InternalMismatch(GcoverError):
    code = "InternalMismatch"


class UnsupportedDegree(GcoverError):
    code = "UnsupportedDegree"


class ClosedFormMismatch(GcoverError):
    code = "ClosedFormMismatch"
