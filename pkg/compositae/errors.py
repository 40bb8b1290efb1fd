class CompositaError(Exception):
    pass


class PreconditionError(CompositaError):
    pass


class NotDeltaSeriesError(PreconditionError):
    def __init__(self, what="series"):
        super().__init__(f"{what} must have a zero constant term")


class OrderMismatchError(PreconditionError):
    def __init__(self, left, right):
        super().__init__(f"order mismatch: {left} != {right}")
        self.left = left
        self.right = right


class TriangleIndexError(PreconditionError, IndexError):
    def __init__(self, n, k, order):
        super().__init__(f"index ({n}, {k}) outside the triangle 1 <= k <= n <= {order}")
        self.n = n
        self.k = k
        self.order = order


class NonInvertibleError(CompositaError):
    pass


class UnboundIndeterminateError(CompositaError, KeyError):
    def __init__(self, index):
        super().__init__(f"no value bound to y{index}")
        self.index = index

    def __str__(self):
        return self.args[0]


class DomainError(CompositaError):
    def __init__(self, atom, x, reason=""):
        message = f"{atom} is not defined at x={x}"
        if reason:
            message += f" ({reason})"
        super().__init__(message)
        self.atom = atom
        self.x = x


class EngineError(CompositaError):
    pass


class OracleMismatchError(EngineError):
    pass


class ExprError(CompositaError):
    pass


class ExprSyntaxError(ExprError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownAtomError(ExprError):
    def __init__(self, name):
        super().__init__(f"unknown atom: {name}")
        self.name = name


class ArityError(ExprError):
    def __init__(self, name, given, expected):
        super().__init__(f"{name} takes {expected} parameter(s), {given} given")
        self.name = name
        self.given = given
        self.expected = expected


class ExprTooLargeError(ExprError):
    def __init__(self, nodes, limit):
        super().__init__(f"expression has {nodes} nodes, limit is {limit}")
        self.nodes = nodes
        self.limit = limit
