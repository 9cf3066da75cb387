"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Base class for all errors raised by dom22."""


class InvalidVertexError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class PreconditionError(GraphError):
    pass


class InvalidParameterError(GraphError):
    pass


class TooLargeError(GraphError):
    """Raised instead of running an exponential search on an oversized input."""


class ContractibilityError(PreconditionError):
    pass


class PartitionError(PreconditionError):
    pass


class NotMinimalError(PreconditionError):
    pass


class CertificateError(GraphError):
    def __init__(self, message, step_index=None):
        super().__init__(message)
        self.step_index = step_index


class ParseError(GraphError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnsupportedError(GraphError):
    pass
