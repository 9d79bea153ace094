import pytest

from belleuler.cli import main as cli_main


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process and capture (exit_code, stdout, stderr)."""
    def run(*argv):
        code = cli_main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err
    return run
