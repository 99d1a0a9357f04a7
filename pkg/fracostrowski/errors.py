class DomainError(ValueError):
    pass


class SpecialFunctionOverflowError(DomainError, OverflowError):
    pass


class NonConvergenceError(ArithmeticError):
    def __init__(self, message: str, iterations: int = None):
        self.iterations = iterations
        super().__init__(message)


class QuadratureError(ArithmeticError):
    pass


class QuadratureDepthExceededError(QuadratureError):
    pass


class NonFiniteSampleError(QuadratureError):
    def __init__(self, point, value):
        self.point = point
        self.value = value
        super().__init__(
            'non-finite sample %r at %r' % (value, point)
        )


class DegenerateIntervalError(DomainError):
    pass


class UnknownTheoremError(KeyError):
    def __init__(self, theorem_id):
        self.theorem_id = theorem_id
        super().__init__('unknown theorem: %s' % theorem_id)


class UnknownFunctionError(KeyError):
    def __init__(self, function_name, available=None):
        self.function_name = function_name
        self.available = available
        super().__init__(
            'unknown function: %s (available: %s)' % (
                function_name, ', '.join(sorted(available or []))
            )
        )


class CertificateError(RuntimeError):
    pass


class ConfigError(ValueError):
    pass


class UsageError(ValueError):
    pass
