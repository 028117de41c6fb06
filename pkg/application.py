import os
import sys

import click
from dotenv import load_dotenv

# Load environment variables
dotenv_path = os.path.join(os.path.dirname(__file__), '.env')
if os.path.exists(dotenv_path):
    load_dotenv(dotenv_path)

from app import create_app  # noqa: E402
from app.cli.commands import USAGE_ERROR_EXIT_CODE  # noqa: E402

# Create flask app
app = create_app(os.getenv('FLASK_CONFIG') or 'DEV')


@app.cli.command()
@click.option(
    "--coverage/--no-coverage",
    default=False,
    help="Run tests under code coverage.",
)
@click.argument("test_names", nargs=-1)
def test(coverage, test_names):
    """Run the unit tests."""
    from app.cli import run_tests

    test_results = run_tests(coverage, test_names)

    if test_results.wasSuccessful():
        sys.exit(0)
    else:
        sys.exit(1)


def main(argv=None) -> int:
    """
    Run one CLI command and return its exit code: 0 success, 1 usage error,
    2 data error, 3 internal numeric failure.
    """
    args = list(sys.argv[1:] if argv is None else argv)
    with app.app_context():
        try:
            result = app.cli.main(args=args, prog_name="imputation-bench", standalone_mode=False)
        except click.UsageError as e:
            e.show()
            return USAGE_ERROR_EXIT_CODE
        except click.ClickException as e:
            e.show()
            return e.exit_code
        except click.Abort:
            click.echo("Aborted!", err=True)
            return USAGE_ERROR_EXIT_CODE
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(main())
