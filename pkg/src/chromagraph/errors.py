"""Exception hierarchy. Every error carries a short ``kind`` used in CLI error objects."""


class ChromagraphError(Exception):
    kind = "error"

    def to_dict(self):
        return {"kind": self.kind, "detail": str(self)}


class ParseError(ChromagraphError):
    kind = "parse-error"


class UnsupportedSizeError(ChromagraphError):
    kind = "unsupported-size"


class BudgetExceededError(ChromagraphError):
    kind = "budget-exceeded"


class NotAColouringGraphError(ChromagraphError):
    kind = "not-a-colouring-graph"

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class AmbiguousMajorityError(ChromagraphError):
    kind = "ambiguous-majority"

    def __init__(self, msg, table=None):
        super().__init__(msg)
        self.table = table or {}


class InconsistentFanError(ChromagraphError):
    kind = "inconsistent-fans"


class SingularPointError(ChromagraphError):
    kind = "singular-point"


class InvalidCopyError(ChromagraphError):
    kind = "invalid-copy"


class PreconditionError(ChromagraphError):
    kind = "precondition"
