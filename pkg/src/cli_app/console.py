import logging
import sys

from colorama import Fore, Style, just_fix_windows_console

LEVEL_COLORS = {
    logging.DEBUG: Style.DIM,
    logging.INFO: Fore.BLUE,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED + Style.BRIGHT,
}


class ColoredFormatter(logging.Formatter):

    def __init__(self, fmt: str = '%(levelname)-8s %(name)s: %(message)s', use_color: bool = True):
        super().__init__(fmt)
        self.use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        message = super().format(record)
        if not self.use_color:
            return message
        return f'{LEVEL_COLORS.get(record.levelno, "")}{message}{Style.RESET_ALL}'


def configure_logging(level: str = 'INFO', quiet: bool = False) -> logging.Handler:
    """Route every record to stderr through one coloured handler."""
    just_fix_windows_console()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(ColoredFormatter(use_color=sys.stderr.isatty()))
    root = logging.getLogger()
    for existing in list(root.handlers):
        if getattr(existing, 'stefan_console', False):
            root.removeHandler(existing)
    handler.stefan_console = True
    root.addHandler(handler)
    root.setLevel(logging.WARNING if quiet else level.upper())
    return handler
