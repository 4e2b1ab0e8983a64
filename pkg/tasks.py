from pathlib import Path

from invoke import task


@task
def lint(c):
    """Run flake8 and mypy."""
    script_dir = Path(__file__).parent
    with c.cd(script_dir):
        c.run("flake8 innerdist tests")
        c.run("mypy innerdist")


@task
def test(c, slow=False):
    """Run the test-suite with coverage."""
    script_dir = Path(__file__).parent
    with c.cd(script_dir):
        c.run("pytest --cov=innerdist" + (" --runslow" if slow else ""))
