"""Exception hierarchy shared by all modules."""


class InputError(ValueError):
    """Malformed or invalid input (bad vertex ids, wrong solution sense, ...)."""


class CapExceeded(InputError):
    """A brute-force routine refused a graph above its vertex cap."""

    def __init__(self, n, cap):
        super().__init__(f"graph has {n} vertices, brute-force cap is {cap}")
        self.n = n
        self.cap = cap


class ContractViolation(RuntimeError):
    """A documented precondition or postcondition does not hold."""


class ClassCheckError(InputError):
    """A component of G - X is not in the declared graph class."""


class ParseError(InputError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
