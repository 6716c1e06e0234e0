from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

import numpy as np
import sympy

from core.__seedwork.domain.exceptions import ValidationException
from core.fields.domain.entities import BulkField, InterfaceField
from core.fields.domain.grids import Grid
from core.hanzawa.domain.cutoff import Cutoff

X, Z, T = sympy.symbols('x z t', real=True)
SYMBOLS = {'x': X, 'z': Z, 't': T}

Forcing = Tuple[np.ndarray, np.ndarray, np.ndarray]

BULK_DERIVATIVES: Dict[str, Tuple] = {
    'u': (),
    'u_t': (T,),
    'u_z': (Z,),
    'u_xx': (X, X),
    'u_zz': (Z, Z),
    'u_xz': (X, Z),
}
INTERFACE_DERIVATIVES: Dict[str, Tuple] = {
    'rho': (),
    'rho_x': (X,),
    'rho_xx': (X, X),
    'rho_t': (T,),
    'rho_txxxx': (T, X, X, X, X),
}


def _compile(expr: sympy.Expr, variables: Tuple[sympy.Symbol, ...], wrt: Tuple) -> Callable:
    derivative = sympy.diff(expr, *wrt) if wrt else expr
    return sympy.lambdify(variables, derivative, 'numpy')


def _evaluate(fn: Callable, shape: Tuple[int, ...], *args) -> np.ndarray:
    return np.broadcast_to(np.asarray(fn(*args), dtype=float), shape)


@dataclass(frozen=True, slots=True, eq=False)
class ManufacturedSolution:
    """Closed-form pair (u*, rho*) with derivatives taken exactly by sympy.

    `u` holds on z >= 0 and, unless `u_lower` is given, also on z < 0; the two branches must agree
    on z = 0.
    """
    u: sympy.Expr
    rho: sympy.Expr
    u_lower: Optional[sympy.Expr] = None
    compiled: Dict[str, Callable] = field(init=False, repr=False)

    def __post_init__(self):
        lower = self.u if self.u_lower is None else self.u_lower
        if self.u_lower is not None and sympy.simplify((self.u - lower).subs(Z, 0)) != 0:
            raise ValidationException('The u branches must agree on the interface')
        if Z in self.rho.free_symbols:
            raise ValidationException('The rho must not depend on z')

        compiled = {}
        for name, wrt in BULK_DERIVATIVES.items():
            compiled[f'upper_{name}'] = _compile(self.u, (X, Z, T), wrt)
            compiled[f'lower_{name}'] = _compile(lower, (X, Z, T), wrt)
        for name, wrt in INTERFACE_DERIVATIVES.items():
            compiled[name] = _compile(self.rho, (X, T), wrt)
        object.__setattr__(self, 'compiled', compiled)

    @staticmethod
    def from_strings(u: str, rho: str, u_lower: Optional[str] = None) -> 'ManufacturedSolution':
        def parse(text: str) -> sympy.Expr:
            return sympy.sympify(text, locals=SYMBOLS)
        return ManufacturedSolution(parse(u), parse(rho), None if u_lower is None else parse(u_lower))

    def bulk(self, name: str, grid: Grid, t: float) -> np.ndarray:
        """A bulk derivative on the grid, each half from its own branch."""
        x, z = grid.mesh()
        upper = _evaluate(self.compiled[f'upper_{name}'], grid.shape, x, z, t)
        lower = _evaluate(self.compiled[f'lower_{name}'], grid.shape, x, z, t)
        return np.where(z >= 0.0, upper, lower)

    def trace(self, name: str, grid: Grid, t: float, side: str = 'upper') -> np.ndarray:
        x = grid.tangential.nodes
        return _evaluate(self.compiled[f'{side}_{name}'], x.shape, x, np.zeros_like(x), t)

    def interface(self, name: str, grid: Grid, t: float) -> np.ndarray:
        x = grid.tangential.nodes
        return _evaluate(self.compiled[name], x.shape, x, t)

    def exact_fields(self, grid: Grid, t: float) -> Tuple[BulkField, InterfaceField]:
        return (BulkField(grid, self.bulk('u', grid, t)),
                InterfaceField(grid.tangential, self.interface('rho', grid, t)))

    def error(self, u: BulkField, rho: InterfaceField, t: float) -> float:
        """max(sup|u - u*|, sup|rho - rho*|) at time t."""
        u_exact, rho_exact = self.exact_fields(u.grid, t)
        return max(float(np.max(np.abs(u.values - u_exact.values))),
                   float(np.max(np.abs(rho.values - rho_exact.values))))


def manufactured_forcing(solution: ManufacturedSolution, t: float, grid: Grid, cutoff: Cutoff,
                         epsilon: float = 0.0) -> Forcing:
    """(F_bulk, F_jump, g_dirichlet) making the pair an exact solution of the forced system."""
    rho = solution.interface('rho', grid, t)[:, None]
    rho_x = solution.interface('rho_x', grid, t)[:, None]
    rho_xx = solution.interface('rho_xx', grid, t)[:, None]
    rho_t = solution.interface('rho_t', grid, t)[:, None]
    phi, dphi, ddphi = (values[None, :] for values in cutoff.evaluate(grid.normal.nodes))

    big_j = 1.0 + dphi * rho
    metric = 1.0 + (phi * rho_x) ** 2
    a = metric / big_j ** 2
    b = 2.0 * phi * rho_x / big_j
    c = (phi * rho_xx / big_j - 2.0 * phi * dphi * rho_x ** 2 / big_j ** 2
         + ddphi * rho * metric / big_j ** 3 - phi * rho_t / big_j)

    f_bulk = (solution.bulk('u_t', grid, t) - solution.bulk('u_xx', grid, t)
              - a * solution.bulk('u_zz', grid, t) + b * solution.bulk('u_xz', grid, t)
              + c * solution.bulk('u_z', grid, t))

    slope = rho_x[:, 0]
    kappa = rho_xx[:, 0] * (1.0 + slope ** 2) ** -1.5
    g_dirichlet = solution.trace('u', grid, t) - kappa

    jump = solution.trace('u_z', grid, t, 'lower') - solution.trace('u_z', grid, t, 'upper')
    f_jump = (rho_t[:, 0] + epsilon * solution.interface('rho_txxxx', grid, t)
              - (1.0 + slope ** 2) * jump)
    return f_bulk, f_jump, g_dirichlet


@dataclass(slots=True)
class ManufacturedForcingHook:
    """Forcing object the solver consumes; keeps the few most recent evaluations."""
    solution: ManufacturedSolution
    grid: Grid
    cutoff: Cutoff
    epsilon: float = 0.0
    _cache: Dict[float, Forcing] = field(default_factory=dict, repr=False)

    @staticmethod
    def from_config(solution: ManufacturedSolution, cfg) -> 'ManufacturedForcingHook':
        return ManufacturedForcingHook(solution, cfg.grid, cfg.cutoff, cfg.epsilon)

    def _at(self, t: float) -> Forcing:
        if t not in self._cache:
            if len(self._cache) > 3:
                self._cache.clear()
            self._cache[t] = manufactured_forcing(self.solution, t, self.grid, self.cutoff, self.epsilon)
        return self._cache[t]

    def bulk(self, t: float) -> np.ndarray:
        return self._at(t)[0]

    def jump(self, t: float) -> np.ndarray:
        return self._at(t)[1]

    def dirichlet(self, t: float) -> np.ndarray:
        return self._at(t)[2]
