class EigenSolveException(Exception):
    def __init__(self, k: int, reason: str) -> None:
        self.k = k
        self.reason = reason
        super().__init__(f'The eigenproblem of mode k={k} failed: {reason}')
