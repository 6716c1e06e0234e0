import os
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

_ENV_FOLDER = Path(__file__).resolve().parent.parent.parent / 'envs'

APP_ENV = os.getenv('APP_ENV')


class ConfigService(BaseSettings):
    output_root: Path = Path('runs')
    log_level: str = 'INFO'
    max_sweep_jobs: int = Field(64, ge=1)
    default_jobs: int = Field(1, ge=1)

    model_config = SettingsConfigDict(
        env_prefix='STEFAN_',
        env_file=(f'{_ENV_FOLDER}/.env', f'{_ENV_FOLDER}/.env.{APP_ENV}'),
        extra='ignore',
    )
