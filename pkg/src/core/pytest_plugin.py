import os
from typing import List

import pytest
from colorama import Fore, Style

# groups that never run unless named with --group
OPT_IN_GROUPS = frozenset({'acceptance'})


def pytest_addoption(parser: pytest.Parser):
    parser.addoption(
        '--env',
        action='store',
        default='test',
        help="load envs/.env.<ENV> on top of envs/.env for the settings service",
    )
    parser.addoption(
        '--group',
        action='store',
        default=None,
        help="run only the tests marked with @pytest.mark.group(<GROUP>)",
    )


@pytest.hookimpl(tryfirst=True)
def pytest_load_initial_conftests(
    early_config: pytest.Config,
    parser: pytest.Parser,
    args: List[str]
):
    known = parser.parse_known_args(args)
    os.environ.setdefault('APP_ENV', known.env)
    banner = f'settings from envs/.env.{known.env}'
    if known.group:
        banner += f', group {known.group} only'
    print(f"{Fore.BLUE}\n\n**** {banner} ****\n\n{Style.RESET_ALL}")


def pytest_runtest_setup(item: pytest.Item):
    marked = set(item.get_closest_marker('group').args) if item.get_closest_marker('group') else set()
    selected = item.config.getoption('--group')

    if selected:
        if selected not in marked:
            pytest.skip(f'test requires group {selected}')
    elif marked & OPT_IN_GROUPS:
        pytest.skip(f'opt-in group; run with --group {" ".join(sorted(marked & OPT_IN_GROUPS))}')
