"""
Main entry point for cpxcp.
Classifies, decomposes and checks groups with G/Z(G) = C_p x C_p.
"""

import logging
from typing import Annotated, List, Optional

import typer
from pydantic import ValidationError

from src.cli import Command, CommandRunner
from src.cli.commands import EXIT_USAGE
from src.utils import load_config

# Configure logging
logging.basicConfig(
    level=logging.WARNING,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

app = typer.Typer(help="Classify groups whose quotient by the center is C_p x C_p.")

JsonOption = Annotated[bool, typer.Option("--json", help="Line-delimited JSON output")]
MaxOrderOption = Annotated[
    Optional[int], typer.Option("--max-order", help="Largest group order the oracle tabulates")
]
SeedOption = Annotated[Optional[int], typer.Option("--seed", help="Seed for scramble checks")]
VerboseOption = Annotated[bool, typer.Option("--verbose", "-v", help="Debug logging")]


def _execute(verb: str, inputs: List[str], verbose: bool, **flags) -> None:
    config = load_config()
    level = "DEBUG" if verbose else config["logging"]["level"]
    logging.getLogger().setLevel(level)

    try:
        command = Command(verb=verb, inputs=tuple(inputs), **flags)
    except ValidationError as exc:
        typer.echo(f"error: {exc.errors()[0]['msg']}", err=True)
        raise typer.Exit(EXIT_USAGE)

    code, lines = CommandRunner(config).run(command)
    for line in lines:
        typer.echo(line)
    raise typer.Exit(code)


@app.command()
def classify(
    source: str,
    json_output: JsonOption = False,
    max_order: MaxOrderOption = None,
    seed: SeedOption = None,
    verbose: VerboseOption = False,
):
    """Classify a presentation into one of the nine families plus an abelian complement."""
    _execute("classify", [source], verbose, json_output=json_output, max_order=max_order, seed=seed)


@app.command()
def decompose(
    source: str,
    json_output: JsonOption = False,
    max_order: MaxOrderOption = None,
    seed: SeedOption = None,
    verbose: VerboseOption = False,
):
    """Split a presentation as D x A with Z(D) of rank at most three."""
    _execute(
        "decompose", [source], verbose, json_output=json_output, max_order=max_order, seed=seed
    )


@app.command()
def isomorphic(
    first: str,
    second: str,
    json_output: JsonOption = False,
    max_order: MaxOrderOption = None,
    seed: SeedOption = None,
    verbose: VerboseOption = False,
):
    """Decide isomorphism of two presentations and name the first differing invariant."""
    _execute(
        "isomorphic",
        [first, second],
        verbose,
        json_output=json_output,
        max_order=max_order,
        seed=seed,
    )


@app.command()
def validate(
    source: str,
    json_output: JsonOption = False,
    max_order: MaxOrderOption = None,
    seed: SeedOption = None,
    verbose: VerboseOption = False,
):
    """Parse and validate a presentation."""
    _execute("validate", [source], verbose, json_output=json_output, max_order=max_order, seed=seed)


@app.command("enumerate")
def enumerate_command(
    p: Annotated[Optional[int], typer.Option("--p", help="Prime")] = None,
    max_m: Annotated[Optional[int], typer.Option("--max-m", help="Largest m_i")] = None,
    families: Annotated[
        Optional[str], typer.Option("--families", help="Families, e.g. 1-4,7")
    ] = None,
    json_output: JsonOption = False,
    max_order: MaxOrderOption = None,
    seed: SeedOption = None,
    verbose: VerboseOption = False,
):
    """List every canonical instance within the parameter bounds."""
    _execute(
        "enumerate",
        [],
        verbose,
        p=p,
        max_m=max_m,
        families=families,
        json_output=json_output,
        max_order=max_order,
        seed=seed,
    )


@app.command()
def check(
    source: str,
    json_output: JsonOption = False,
    max_order: MaxOrderOption = None,
    seed: SeedOption = None,
    verbose: VerboseOption = False,
):
    """Run the symbolic and oracle validation suite on a presentation."""
    _execute("check", [source], verbose, json_output=json_output, max_order=max_order, seed=seed)


@app.command()
def table(
    source: str,
    json_output: JsonOption = False,
    max_order: MaxOrderOption = None,
    seed: SeedOption = None,
    verbose: VerboseOption = False,
):
    """Export the multiplication table of a finite presentation."""
    _execute("table", [source], verbose, json_output=json_output, max_order=max_order, seed=seed)


if __name__ == "__main__":
    app()
