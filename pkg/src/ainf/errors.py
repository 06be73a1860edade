"""Shared exception types.

PreconditionError: a mathematical precondition on user-supplied data
fails (CLI exit status 3).  CertificationError: an internal exact
certification fails, which indicates a bug and is never ignored (CLI
exit status 4).  SchemaError: a document fails validation (exit 2).
"""


class SchemaError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class CertificationError(AssertionError):
    pass
