def get_evaluation_backend(**options):
    from .evaluation_backend import EvaluationBackend

    return EvaluationBackend(**options)


def get_symbolic_backend(**options):
    from .symbolic_backend import SymbolicBackend

    return SymbolicBackend(**options)


included_backends = {
    "evaluation": get_evaluation_backend,
    "symbolic": get_symbolic_backend,
}
default_backend = "evaluation"
