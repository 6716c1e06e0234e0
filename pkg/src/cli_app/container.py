from dependency_injector import containers, providers

from cli_app.config import ConfigService
from core.oracle.application.use_cases import ComputeSpectrumUseCase
from core.scenario.application.use_cases import RunScenarioUseCase, SweepScenarioUseCase
from core.verification.application.use_cases import VerifySuiteUseCase


class Container(containers.DeclarativeContainer):
    config = providers.Singleton(ConfigService)

    use_case_scenario_run = providers.Factory(
        RunScenarioUseCase, output_root=config.provided.output_root
    )
    use_case_scenario_sweep = providers.Factory(
        SweepScenarioUseCase,
        output_root=config.provided.output_root,
        job_cap=config.provided.max_sweep_jobs,
    )
    use_case_oracle_spectrum = providers.Singleton(ComputeSpectrumUseCase)
    use_case_verification_suite = providers.Singleton(VerifySuiteUseCase)
