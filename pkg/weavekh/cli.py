"""Command line interface of weavekh.

Exit codes: 0 success, 1 input/output failure, 2 usage error, 3 violated
computation contract, 4 failed verification.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import pandas as pd

from weavekh.__version__ import __version__
from weavekh.diagram import signature_closed_form, signature_report
from weavekh.exceptions import InvalidArgumentError, WeaveKhError
from weavekh.gaussfit import INTERCEPT_CONVENTIONS, density_curve, fit_line, normalize
from weavekh.jones import jones_w3
from weavekh.khovanov import khovanov_table, total_rank_line
from weavekh.table import build_table
from weavekh.utils import describe_integer, get_threads, render_table, save_table, save_text
from weavekh.verify import run_checks

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_CONTRACT = 3
EXIT_VERIFICATION = 4

FIT_POINTS = "nonzero_support"
H01_PAIRED = "without_unknot_pair"


@dataclass
class RunConfig:
    """Options of one invocation."""

    command: str
    output_format: str = "text"
    out: Optional[str] = None
    threads: Optional[int] = None
    no_meta: bool = False
    verbose: int = 0
    n: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    residue: Optional[int] = None
    start: Optional[int] = None
    end: Optional[int] = None
    n_max: int = 8
    inject_fault: bool = False
    emit_density: Optional[str] = None
    intercept_convention: str = "total"
    check_diagram: bool = False

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "RunConfig":
        values = vars(namespace)
        return cls(**{key: values[key] for key in cls.__dataclass_fields__ if key in values})

    @property
    def header(self) -> Optional[str]:
        if self.no_meta:
            return None
        return f"weavekh {__version__} fit_points={FIT_POINTS} h01_paired={H01_PAIRED}"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        dest="output_format",
        choices=("text", "json", "csv"),
        default=argparse.SUPPRESS,
        help="Output format.",
    )
    common.add_argument("--out", default=argparse.SUPPRESS, help="Write the output to this file.")
    common.add_argument(
        "--threads",
        type=int,
        default=argparse.SUPPRESS,
        help="Worker threads, 0 for one per CPU. WEAVEKH_THREADS overrides it.",
    )
    common.add_argument(
        "--no-meta",
        action="store_true",
        default=argparse.SUPPRESS,
        help="Omit the metadata comment line of CSV outputs.",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=argparse.SUPPRESS,
        help="Log more, repeat for debug messages.",
    )

    parser = argparse.ArgumentParser(
        prog="weavekh",
        description="Jones polynomials, Khovanov ranks and signatures of weaving knots.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    jones = commands.add_parser("jones", parents=[common], help="Jones polynomial of W(3,n).")
    jones.add_argument("-n", type=int, required=True)

    kh = commands.add_parser("kh", parents=[common], help="Khovanov ranks of W(3,n).")
    kh.add_argument("-n", type=int, required=True)

    betti = commands.add_parser("betti", parents=[common], help="Ranks on the line j=2i+1.")
    betti.add_argument("-n", type=int, required=True)

    fit = commands.add_parser("fit", parents=[common], help="Normal fit of the Betti line.")
    fit.add_argument("-n", type=int, required=True)
    fit.add_argument("--emit-density", metavar="FILE", help="Write the sampled density as CSV.")
    fit.add_argument(
        "--intercept-convention", choices=INTERCEPT_CONVENTIONS, default="total"
    )

    table = commands.add_parser("table", parents=[common], help="Statistics table of a residue class.")
    table.add_argument("--residue", type=int, choices=(1, 2), required=True)
    table.add_argument("--start", type=int, required=True)
    table.add_argument("--end", type=int, required=True)
    table.add_argument(
        "--intercept-convention", choices=INTERCEPT_CONVENTIONS, default="total"
    )

    signature = commands.add_parser("signature", parents=[common], help="Signature of W(p,q).")
    signature.add_argument("-p", type=int, required=True)
    signature.add_argument("-q", type=int, required=True)
    signature.add_argument(
        "--check-diagram",
        action="store_true",
        help="Also compute the signature from the A-smoothing of the diagram.",
    )

    verify = commands.add_parser("verify", parents=[common], help="Run the oracle suites.")
    verify.add_argument("--n-max", type=int, default=8)
    verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def _emit(config: RunConfig, content: Union[str, pd.DataFrame]):
    """Write text or a table to the output file or to stdout."""
    if isinstance(content, pd.DataFrame):
        content = render_table(content, config.header)
    elif not content.endswith("\n"):
        content += "\n"
    if config.out:
        save_text(config.out, content)
    else:
        sys.stdout.write(content)


def _dumps(payload) -> str:
    return json.dumps(payload, sort_keys=False, indent=None)


def cmd_jones(config: RunConfig) -> int:
    result = jones_w3(config.n)
    if config.output_format == "json":
        _emit(config, _dumps(result.to_json()))
    elif config.output_format == "csv":
        terms = result.v.items()
        _emit(
            config,
            pd.DataFrame(
                {"exponent": [e for e, _ in terms], "coefficient": [str(c) for _, c in terms]},
                columns=["exponent", "coefficient"],
            ),
        )
    else:
        _emit(config, str(result.v))
    return EXIT_OK


def cmd_kh(config: RunConfig) -> int:
    table = khovanov_table(config.n)
    if config.output_format == "json":
        payload = table.to_json()
        payload["kh"] = table.kh_poly.to_json()
        _emit(config, _dumps(payload))
    elif config.output_format == "csv":
        _emit(config, table.to_csv_frame())
    else:
        _emit(
            config,
            "\n".join(f"{i} {j} {rank}" for (i, j), rank in table.kh_poly.items()),
        )
    return EXIT_OK


def cmd_betti(config: RunConfig) -> int:
    table = khovanov_table(config.n)
    line = table.betti_line
    if config.output_format == "json":
        _emit(config, _dumps(table.to_json()))
    elif config.output_format == "csv":
        _emit(
            config,
            pd.DataFrame(
                {"i": [i for i, _ in line], "rank": [str(rank) for _, rank in line]},
                columns=["i", "rank"],
            ),
        )
    else:
        lines = [f"{i} {rank}" for i, rank in line]
        lines.append(f"total {describe_integer(total_rank_line(table))}")
        lines.append(f"h01 {describe_integer(table.h01)}")
        lines.append(f"h01_paired {describe_integer(table.h01_paired)}")
        _emit(config, "\n".join(lines))
    return EXIT_OK


def cmd_fit(config: RunConfig) -> int:
    table = khovanov_table(config.n)
    fit = fit_line(table.betti_line, config.n, config.intercept_convention)
    if config.emit_density:
        curve = density_curve(fit, normalize(table.betti_line, config.n))
        save_table(config.emit_density, curve, config.header)
    payload = fit.to_json()
    if config.output_format == "json":
        _emit(config, _dumps(payload))
    elif config.output_format == "csv":
        payload.pop("fit_points")
        _emit(config, pd.DataFrame([payload], columns=list(payload)))
    else:
        keys = ("n", "alpha", "beta", "delta", "mu", "sigma", "a_n", "l2", "l1")
        _emit(config, "\n".join(f"{key}: {payload[key]}" for key in keys))
    return EXIT_OK


def cmd_table(config: RunConfig) -> int:
    try:
        threads = get_threads(config.threads)
    except ValueError as error:
        raise InvalidArgumentError(str(error)) from None
    frame = build_table(
        config.residue,
        config.start,
        config.end,
        threads=threads,
        intercept_convention=config.intercept_convention,
        verbose=config.verbose > 0,
    )
    if config.output_format == "json":
        _emit(config, _dumps(frame.to_dict(orient="records")))
    else:
        _emit(config, frame)
    return EXIT_OK


def cmd_signature(config: RunConfig) -> int:
    if config.check_diagram:
        report = signature_report(config.p, config.q)
    else:
        report = {
            "p": config.p,
            "q": config.q,
            "closed_form": signature_closed_form(config.p, config.q),
        }
    if config.output_format == "json":
        _emit(config, _dumps(report))
    elif config.output_format == "csv":
        _emit(config, pd.DataFrame([report], columns=list(report)))
    else:
        _emit(config, "\n".join(f"{key}: {value}" for key, value in report.items()))
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    if config.n_max < 0:
        raise InvalidArgumentError(f"--n-max must be nonnegative, got {config.n_max}.")
    report = run_checks(config.n_max, inject_fault=config.inject_fault)
    if config.output_format == "json":
        _emit(config, _dumps(report.to_json()))
    elif config.output_format == "csv":
        _emit(config, report.to_frame())
    else:
        _emit(config, report.render())
    return EXIT_OK if report.passed else EXIT_VERIFICATION


COMMANDS = {
    "jones": cmd_jones,
    "kh": cmd_kh,
    "betti": cmd_betti,
    "fit": cmd_fit,
    "table": cmd_table,
    "signature": cmd_signature,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line interface and return its exit code."""
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_USAGE
    config = RunConfig.from_namespace(namespace)
    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(config.verbose, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return COMMANDS[config.command](config)
    except InvalidArgumentError as error:
        print(f"weavekh: {error}", file=sys.stderr)
        return EXIT_USAGE
    except WeaveKhError as error:
        print(f"weavekh: {error}", file=sys.stderr)
        return EXIT_CONTRACT
    except OSError as error:
        print(f"weavekh: {error}", file=sys.stderr)
        return EXIT_IO
