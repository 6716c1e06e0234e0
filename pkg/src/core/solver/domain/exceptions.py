class LinearSolveException(Exception):
    def __init__(self, residual: float, tolerance: float, half: str = '') -> None:
        self.residual = residual
        self.tolerance = tolerance
        self.half = half
        where = f' on the {half} half' if half else ''
        super().__init__(
            f'Linear solve did not reach the tolerance{where}: '
            f'relative residual {residual:.3e} > {tolerance:.3e}')


class FixedPointDivergenceException(Exception):
    def __init__(self, iterations: int, last_ratio: float, difference: float) -> None:
        self.iterations = iterations
        self.last_ratio = last_ratio
        self.difference = difference
        super().__init__(
            f'Fixed-point iteration did not converge after {iterations} iterations '
            f'(last contraction ratio {last_ratio:.3e}, last difference {difference:.3e}); '
            'the time step is probably too large')
