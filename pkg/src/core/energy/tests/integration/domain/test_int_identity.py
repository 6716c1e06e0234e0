import unittest

import numpy as np

from core.energy.domain.identity import identity_terms
from core.fields.domain.entities import InterfaceField
from core.solver.domain.config import SolverConfig
from core.solver.domain.simulation import Simulation
from core.solver.domain.state import State
from core.solver.domain.temperature import compatible_temperature


class TestIdentityOnSolverRunInt(unittest.TestCase):

    def run_states(self, dt: float):
        cfg = SolverConfig(n_x=16, n_z=33, dt=dt, epsilon=1e-4, k_diag=0, identity_check=False)
        grid = cfg.grid
        rho = InterfaceField(grid.tangential, 1e-3 * np.sin(grid.tangential.nodes))
        states = []
        Simulation(cfg).run(State.initial(compatible_temperature(rho, grid), rho), 0.05,
                            callbacks=(states.append,))
        return cfg, states

    def test_identity_balances_on_a_decaying_run(self):
        cfg, states = self.run_states(1e-3)
        terms = identity_terms(states[-3:], cfg.cutoff, cfg.epsilon)

        self.assertLess(terms.energy_rate, 0.0)
        self.assertGreater(terms.dissipation, 0.0)
        self.assertLess(terms.residual, 1e-2)
