import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Dict, Union

from core.__seedwork.domain.exceptions import ConfigValidationException
from core.scenario.domain.entities import Scenario
from core.scenario.domain.exceptions import ScenarioLoadException
from core.scenario.domain.schema import ScenarioValidatorFactory

logger = logging.getLogger(__name__)


def parse_scenario(data: Dict[str, Any], path: Union[Path, str] = '<memory>',
                   base_dir: Path = Path('.')) -> Scenario:
    validator = ScenarioValidatorFactory.create()
    if not validator.validate(data):
        raise ScenarioLoadException(path, validator.errors)
    try:
        return validator.validated_data.to_scenario(base_dir)
    except ConfigValidationException as ex:
        raise ScenarioLoadException(
            path, {f'solver.{name}': messages for name, messages in ex.error.items()}) from ex


def load_scenario(path: Union[Path, str]) -> Scenario:
    """Read and validate a scenario file; relative paths inside it resolve next to the file."""
    path = Path(path)
    try:
        with path.open('rb') as file:
            data = tomllib.load(file)
    except OSError as ex:
        raise ScenarioLoadException(path, {'__file__': [ex.strerror or str(ex)]}) from ex
    except tomllib.TOMLDecodeError as ex:
        raise ScenarioLoadException(path, {'__toml__': [str(ex)]}) from ex

    scenario = parse_scenario(data, path, path.parent)
    logger.info('loaded scenario %s from %s', scenario.name, path)
    return scenario
