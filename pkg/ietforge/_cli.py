# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT
import functools
import logging
import sys
from pathlib import Path
from tempfile import NamedTemporaryFile
from typing import Optional, Tuple

import click
from click_shell import shell

from ietforge._common import DEFAULT_IDOC_DEPTH, DEFAULT_MAX_ORBIT_VALUES, \
    DEFAULT_MAX_PIECES, DEFAULT_MAX_STEPS, DEFAULT_PRECISION_CAP, \
    IetForgeError
from ietforge._main import Budgets, DiagnosticExit, Main, Source
from ._constants import __version__, __copyright__, __build_timestamp__

PRECISION_CAP_ENVNAME = 'IETFORGE_PRECISION_CAP'

CHARTS = ("native", "unit")


class Globals:
    main: Optional[Main] = None
    # set when no subcommand was given and click_shell took over
    in_shell: bool = False

    @classmethod
    def the_main(cls) -> Main:
        # for mypy
        if cls.main is None:
            raise TypeError
        return cls.main


def _is_running_shell() -> bool:
    return Globals.in_shell


def _diagnosed(func):
    """Turns library errors into `error[code]: message` and the exit code
    of the error. Inside the shell the session goes on."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except IetForgeError as e:
            if _is_running_shell():
                click.echo(e.diagnostic(), err=True)
                return None
            raise DiagnosticExit(e)

    return wrapper


def _source_options(func):
    options = [
        click.argument('target', nargs=-1),
        click.option('--spec', type=click.Path(exists=True, dir_okay=False,
                                               path_type=Path),
                     help="Spec file with an alpha declaration and a stanza."),
        click.option('--m', 'm', type=int, default=None),
        click.option('--n', 'n', type=int, default=None),
        click.option('--sigma', default=None,
                     help="cycle, reversal, identity or [i1,...,in]."),
        click.option('--alpha', default=None,
                     help="sqrt(2)/8, cf[0; 2, (1, 4)] or '~ 0.41 +/- 1e-9'."),
        click.option('--h', 'h', type=click.Path(exists=True, dir_okay=False,
                                                 path_type=Path),
                     default=None,
                     help="Spec file of the conjugating exchange."),
        click.option('--chart', type=click.Choice(CHARTS), default=None),
        click.option('--allow-rational', is_flag=True, default=False),
        click.option('--assume-irrational', is_flag=True, default=False),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _family_of(target: Tuple[str, ...]) -> Optional[str]:
    """`family NAME` or just `NAME`."""
    words = list(target)
    if words and words[0] == "family":
        words = words[1:]
    if not words:
        return None
    if len(words) > 1:
        raise click.BadParameter(" ".join(target), param_hint="family name")
    return words[0]


def _source(target: Tuple[str, ...], spec: Optional[Path], **kwargs
            ) -> Source:
    return Source(spec=spec, family=_family_of(target), **kwargs)


# there is no evident way to avoid saving the history of click_shell commands.
# But we can save the history to temporary file
_click_shell_history_file = NamedTemporaryFile("r")


@shell(prompt='ietforge> ',
       epilog="See https://github.com/rtmigo/ietforge#readme",
       intro="Welcome to ietforge shell",
       hist_file=_click_shell_history_file.name,
       on_finished=lambda _: _click_shell_history_file.close())
@click.option('--precision-cap',
              envvar=PRECISION_CAP_ENVNAME,
              default=DEFAULT_PRECISION_CAP,
              type=click.IntRange(min=1),
              help="Refinement rounds of the alpha enclosure.")
@click.option('-v', '--verbose', count=True,
              help="-v for progress, -vv for details (stderr).")
@click.version_option(
    __version__,
    message=f"ietforge v{__version__}\n"
            f"(c) {__copyright__} | {__build_timestamp__}")
@click.pass_context
def ietforge_cli(ctx, precision_cap: int, verbose: int):
    if verbose:
        logging.basicConfig(
            stream=sys.stderr,
            level=logging.DEBUG if verbose >= 2 else logging.INFO,
            format="%(levelname)s %(name)s: %(message)s")
    Globals.main = Main(precision_cap)
    Globals.in_shell = ctx.invoked_subcommand is None


@ietforge_cli.command()
@_source_options
@click.option('--depth', default=DEFAULT_IDOC_DEPTH,
              type=click.IntRange(min=1), help="Orbit scan depth.")
@click.option('--max-period', default=None, type=click.IntRange(min=2),
              help="Longest interval cycle (default 2m).")
@click.option('--max-span', default=2, type=click.IntRange(min=1))
@click.option('--max-pieces', default=DEFAULT_MAX_PIECES,
              type=click.IntRange(min=1))
@click.option('--max-steps', default=DEFAULT_MAX_STEPS,
              type=click.IntRange(min=1))
@click.option('--return-budget', default=None, type=click.IntRange(min=1))
@click.option('--max-orbit-values', default=DEFAULT_MAX_ORBIT_VALUES,
              type=click.IntRange(min=1))
@click.option('--birkhoff-steps', default=None, type=click.IntRange(min=1))
@click.option('--birkhoff-from', default="0")
@click.option('--out', type=Path, default=None)
@click.option('--svg', type=Path, default=None)
@_diagnosed
def analyze(target, spec, m, n, sigma, alpha, h, chart, allow_rational,
            assume_irrational, depth, max_period, max_span, max_pieces,
            max_steps, return_budget, max_orbit_values, birkhoff_steps,
            birkhoff_from, out, svg):
    """Full report: minimality, eigenvalues, weak mixing."""
    source = _source(target, spec, m=m, n=n, sigma=sigma, alpha=alpha, h=h,
                     chart=chart, allow_rational=allow_rational,
                     assume_irrational=assume_irrational)
    budgets = Budgets(idoc_depth=depth, max_period=max_period,
                      max_span=max_span, max_pieces=max_pieces,
                      max_steps=max_steps, return_budget=return_budget,
                      max_orbit_values=max_orbit_values)
    main = Globals.the_main()
    report = main.run_analyze(source, budgets, birkhoff_steps, birkhoff_from)
    if svg is not None:
        main.emit(main.render(source), svg)
    main.emit(report, out)


@ietforge_cli.command(name='family')
@_source_options
@click.option('--out', type=Path, default=None)
@click.option('--svg', type=Path, default=None)
@_diagnosed
def family_cmd(target, spec, m, n, sigma, alpha, h, chart, allow_rational,
               assume_irrational, out, svg):
    """Build a named family and verify its eigen-witness."""
    source = _source(target, spec, m=m, n=n, sigma=sigma, alpha=alpha, h=h,
                     chart=chart, allow_rational=allow_rational,
                     assume_irrational=assume_irrational)
    main = Globals.the_main()
    report = main.family(source)
    if svg is not None:
        main.emit(main.render(source), svg)
    main.emit(report, out)


@ietforge_cli.command()
@_source_options
@click.option('--from', 'x0', required=True, help="Exact start point.")
@click.option('--steps', required=True, type=int,
              help="Negative counts iterate the inverse.")
@click.option('--out', type=Path, default=None)
@_diagnosed
def orbit(target, spec, m, n, sigma, alpha, h, chart, allow_rational,
          assume_irrational, x0, steps, out):
    """Exact position, drift and occupation counts of T^L(x)."""
    source = _source(target, spec, m=m, n=n, sigma=sigma, alpha=alpha, h=h,
                     chart=chart, allow_rational=allow_rational,
                     assume_irrational=assume_irrational)
    main = Globals.the_main()
    main.emit(main.orbit(source, x0, steps), out)


@ietforge_cli.command()
@_source_options
@click.option('--base', required=True, help="U,V for the base [U, V).")
@click.option('--budget', default=None, type=click.IntRange(min=1))
@click.option('--out', type=Path, default=None)
@_diagnosed
def induce(target, spec, m, n, sigma, alpha, h, chart, allow_rational,
           assume_irrational, base, budget, out):
    """First return map to a subinterval."""
    source = _source(target, spec, m=m, n=n, sigma=sigma, alpha=alpha, h=h,
                     chart=chart, allow_rational=allow_rational,
                     assume_irrational=assume_irrational)
    main = Globals.the_main()
    main.emit(main.induce(source, base, budget), out)


@ietforge_cli.command()
@_source_options
@click.option('--steps', required=True, type=click.IntRange(min=1))
@click.option('--from', 'x0', default="0")
@click.option('--cells', default=None, help="U,V;U,V;...")
@click.option('--out', type=Path, default=None)
@_diagnosed
def birkhoff(target, spec, m, n, sigma, alpha, h, chart, allow_rational,
             assume_irrational, steps, x0, cells, out):
    """Visit frequencies of an orbit against Lebesgue measure."""
    source = _source(target, spec, m=m, n=n, sigma=sigma, alpha=alpha, h=h,
                     chart=chart, allow_rational=allow_rational,
                     assume_irrational=assume_irrational)
    main = Globals.the_main()
    main.emit(main.birkhoff(source, x0, steps, cells), out)


@ietforge_cli.command()
@click.argument('file_s', type=click.Path(exists=True, dir_okay=False,
                                          path_type=Path))
@click.argument('file_t', type=click.Path(exists=True, dir_okay=False,
                                          path_type=Path))
@click.option('--allow-rational', is_flag=True, default=False)
@click.option('--assume-irrational', is_flag=True, default=False)
@click.option('--out', type=Path, default=None)
@_diagnosed
def compose(file_s, file_t, allow_rational, assume_irrational, out):
    """S o T of two spec files, in canonical form."""
    source = Source(allow_rational=allow_rational,
                    assume_irrational=assume_irrational)
    main = Globals.the_main()
    main.emit(main.compose(file_s, file_t, source), out)


@ietforge_cli.command()
@_source_options
@click.option('--depth', default=DEFAULT_IDOC_DEPTH,
              type=click.IntRange(min=1))
@click.option('--out', type=Path, default=None)
@_diagnosed
def idoc(target, spec, m, n, sigma, alpha, h, chart, allow_rational,
         assume_irrational, depth, out):
    """Orbits of the discontinuities: certificate, pass or collision."""
    source = _source(target, spec, m=m, n=n, sigma=sigma, alpha=alpha, h=h,
                     chart=chart, allow_rational=allow_rational,
                     assume_irrational=assume_irrational)
    main = Globals.the_main()
    main.emit(main.idoc(source, depth), out)


@ietforge_cli.command()
@_source_options
@click.option('--max-pieces', default=DEFAULT_MAX_PIECES,
              type=click.IntRange(min=1))
@click.option('--max-steps', default=DEFAULT_MAX_STEPS,
              type=click.IntRange(min=1))
@click.option('--out', type=Path, default=None)
@_diagnosed
def invariants(target, spec, m, n, sigma, alpha, h, chart, allow_rational,
               assume_irrational, max_pieces, max_steps, out):
    """Search for a proper invariant union of intervals."""
    source = _source(target, spec, m=m, n=n, sigma=sigma, alpha=alpha, h=h,
                     chart=chart, allow_rational=allow_rational,
                     assume_irrational=assume_irrational)
    main = Globals.the_main()
    main.emit(main.invariants(source, max_pieces, max_steps), out)


@ietforge_cli.command()
@_source_options
@click.option('--svg', type=Path, default=None)
@_diagnosed
def render(target, spec, m, n, sigma, alpha, h, chart, allow_rational,
           assume_irrational, svg):
    """SVG graph of the exchange."""
    source = _source(target, spec, m=m, n=n, sigma=sigma, alpha=alpha, h=h,
                     chart=chart, allow_rational=allow_rational,
                     assume_irrational=assume_irrational)
    main = Globals.the_main()
    main.emit(main.render(source), svg)
