"""kmaj command line: one typer group per concern, merged into a single app."""

import typer

from .classes import app as classes_app
from .dist import app as dist_app
from .system import app as system_app
from .tableaux import app as tableaux_app
from .verify import app as verify_app
from .words import app as words_app

app = typer.Typer(
    name="kmaj",
    help="k-major index statistics, bijections and verification suites",
    no_args_is_help=True,
    add_completion=False,
)

app.add_typer(words_app, name="")
app.add_typer(tableaux_app, name="")
app.add_typer(dist_app, name="")
app.add_typer(classes_app, name="")
app.add_typer(verify_app, name="")
app.add_typer(system_app, name="")


def main() -> None:
    app()


if __name__ == "__main__":
    main()
