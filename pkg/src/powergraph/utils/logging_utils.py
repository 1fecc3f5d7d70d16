import logging

import click

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


def setup_logging(verbose: bool = False) -> None:
    """Logs vão para stderr; stdout fica só com a saída do comando."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format=LOG_FORMAT,
        force=True,
    )


def safe_print(msg: str) -> None:
    try:
        click.echo(str(msg))
    except (BrokenPipeError, OSError, ValueError):
        pass


def safe_print_error(msg: str) -> None:
    try:
        click.echo(str(msg), err=True)
    except (BrokenPipeError, OSError, ValueError):
        pass
