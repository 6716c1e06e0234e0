class HistoryUnavailableException(Exception):
    def __init__(self, required: int, available: int, what: str = 'history') -> None:
        self.required = required
        self.available = available
        super().__init__(f'The {what} needs {required} accepted states, only {available} available')


class IdentityCrossTermException(Exception):
    def __init__(self, term: str, value: float) -> None:
        self.term = term
        self.value = value
        super().__init__(f'The cross term {term} must vanish for a converged solution, got {value:.3e}')
