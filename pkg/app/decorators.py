import traceback
from functools import wraps

import click
from marshmallow import ValidationError

from app import logger
from app.errors import ProcessingException, ValidationException
from app.utils.formatters import format_message
from app.utils.messages import Error

DATA_ERROR_EXIT_CODE = ValidationException.exit_code
NUMERIC_ERROR_EXIT_CODE = ProcessingException.exit_code


def _fail(message, exit_code):
    click.echo(f"Error: {format_message(message)}", err=True)
    raise click.exceptions.Exit(exit_code)


def handle_exceptions(func):
    """Map application errors of a CLI command onto its exit code."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except ProcessingException as pe:
            logger.info(pe)
            _fail(pe.get_message(), pe.exit_code)
        except ValidationException as ve:
            logger.info(str(ve))
            _fail(ve.get_message(), ve.exit_code)
        except ValidationError as err:
            logger.info(err)
            _fail({**Error.SCHEMA_VALIDATION_FAILED, "errors": err.messages}, DATA_ERROR_EXIT_CODE)
        except Exception as e:
            traceback.print_exc()
            logger.error(f"general exception {e}")
            _fail(Error.COMMAND_FAILED, NUMERIC_ERROR_EXIT_CODE)

    return wrapper
