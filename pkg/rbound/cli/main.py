"""The `rbound` command line.

stdout carries data only (JSON or CSV); diagnostics go to stderr through
logging. Exit codes: 0 success, 1 internal error or failed check, 2 input
error.
"""

from __future__ import annotations
import argparse
import io
import json
import logging
import sys
from typing import Callable

from icecream import ic

from ..core.constants import DEFAULT_SEED, LOGGER_FORMAT, \
    OPTIMIZER_DEFAULTS, SEED_ENV_VAR, ConstantMode, Mode, OutputFormat, \
    Sign, Tolerances
from ..core.exception import ContractError, DimensionError, ExitCode, \
    InputFormatError, NonFiniteError, RBoundException
from ..core.matrix_io import FileReader
from ..dynamics.ensemble import ensemble_audit, write_audit_csv, \
    write_ensemble_csv, write_spectrum_csv, write_spectrum_jsonl, \
    write_sum_rule_csv
from ..dynamics.gkls import GklsGenerator, constraint_audit, \
    relaxation_identity_check, relaxation_times, spectrum, sum_rule_check
from ..functional.properties import run_property_suite
from ..functional.rfunc import applicable_bounds, r_report
from ..functional.witness import WITNESS_KINDS, build_witness
from ..optimize.extremize import ExtremizeTask, alternating_extremize, \
    write_trajectory_csv
from .config import RunConfig

logger = logging.getLogger("rbound")

OPTIMIZE_GAP = 1e-6
INPUT_ERRORS = (InputFormatError, ContractError, DimensionError,
                NonFiniteError)


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help=f"RNG seed (default ${SEED_ENV_VAR} or "
                             f"{DEFAULT_SEED:#x})")
    common.add_argument("--out", default=None,
                        help="write data to this path instead of stdout")
    common.add_argument("--format", default=OutputFormat.JSON,
                        choices=[str(f) for f in OutputFormat])
    common.add_argument("--verbose", action="store_true",
                        help="log progress (INFO) to stderr")
    common.add_argument("--debug", action="store_true",
                        help="log DEBUG and enable ic() traces")
    for name, default in Tolerances._field_defaults.items():
        common.add_argument(f"--tol-{name.replace('_', '-')}",
                            dest=f"tol_{name}", type=float, default=None,
                            help=f"tolerance '{name}' (default {default:g})")

    parser = argparse.ArgumentParser(
        prog="rbound",
        description="Evaluate the r-functional, verify its sharp bounds and "
                    "audit GKLS relaxation rates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common],
                            help="evaluate r(A, B) from matrix JSON files")
    p_eval.add_argument("a_path", help="matrix JSON file for A")
    p_eval.add_argument("b_path", help="matrix JSON file for B")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run the randomized property suite")
    p_verify.add_argument("--n", type=int, default=3)
    p_verify.add_argument("--count", type=int, default=1000,
                          help="random samples")

    p_opt = sub.add_parser("optimize", parents=[common],
                           help="recover a sharp constant numerically")
    p_opt.add_argument("--n", type=int, default=3)
    group = p_opt.add_mutually_exclusive_group()
    group.add_argument("--max", dest="extremum", action="store_const",
                       const=Mode.MAXIMIZE, default=Mode.MAXIMIZE)
    group.add_argument("--min", dest="extremum", action="store_const",
                       const=Mode.MINIMIZE)
    p_opt.add_argument("--traceless", action="store_true",
                       help="constrain tr A = 0")
    p_opt.add_argument("--restarts", type=int,
                       default=OPTIMIZER_DEFAULTS.restarts)
    p_opt.add_argument("--max-sweeps", type=int,
                       default=OPTIMIZER_DEFAULTS.max_sweeps)
    p_opt.add_argument("--convergence-tol", type=float,
                       default=OPTIMIZER_DEFAULTS.convergence_tol)
    p_opt.add_argument("--workers", type=int, default=1)

    p_gkls = sub.add_parser("gkls", parents=[common],
                            help="spectra and rate audits of generators")
    p_gkls.add_argument("action", choices=("audit", "spectrum", "sumrule"))
    source = p_gkls.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="generator JSON file")
    source.add_argument("--ensemble", action="store_true",
                        help="audit seeded random generators")
    p_gkls.add_argument("--n", type=int, default=2)
    p_gkls.add_argument("--jumps", type=int, default=1)
    p_gkls.add_argument("--count", type=int, default=100)
    p_gkls.add_argument("--mode", default=ConstantMode.TRACELESS,
                        choices=[str(m) for m in ConstantMode])
    p_gkls.add_argument("--workers", type=int, default=1)

    p_wit = sub.add_parser("witness", parents=[common],
                           help="emit a closed-form extremal pair")
    p_wit.add_argument("--kind", choices=WITNESS_KINDS, default="general")
    p_wit.add_argument("--n", type=int, default=2)
    p_wit.add_argument("--sign", choices=[str(s) for s in Sign],
                       default=Sign.UPPER)
    return parser


def setup_logging(verbose: bool, debug: bool) -> None:
    """Send package logs to stderr and route ic() through the logger."""
    level = logging.DEBUG if debug else \
        logging.INFO if verbose else logging.WARNING
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOGGER_FORMAT))
    logger.handlers[:] = [handler]
    logger.setLevel(level)
    logger.propagate = False
    ic.configureOutput(prefix="ic| ", outputFunction=logger.debug)
    if debug:
        ic.enable()
    else:
        ic.disable()


# -----[ Subcommands ]------------------------------------------------

def cmd_eval(config: RunConfig, out: io.TextIOBase) -> ExitCode:
    """Evaluate r(A, B) and report which bounds apply and hold."""
    a_path, b_path = config.input_paths[:2]
    a = FileReader(a_path).matrix()
    b = FileReader(b_path).matrix()
    report = r_report(a, b)
    bounds = applicable_bounds(a, b, config.tolerances)
    ok = report.spread_ok(config.tolerances.expression_spread) and \
        all(check.holds for check in bounds)
    if config.output_format is OutputFormat.CSV:
        out.write("bound,applies,lower,upper,value,holds\n")
        for check in bounds:
            out.write(",".join("" if v is None else str(v)
                               for v in check) + "\n")
    else:
        json.dump({"report": report.to_dict(),
                   "bounds": [c.to_dict() for c in bounds]}, out, indent=2)
        out.write("\n")
    if not ok:
        logger.error("a bound or identity failed on the given pair")
    return ExitCode.OK if ok else ExitCode.INTERNAL


def cmd_verify(config: RunConfig, out: io.TextIOBase) -> ExitCode:
    """Run the property suite and report the max violation per property."""
    results = run_property_suite(config.n, config.sample_count, config.seed,
                                 config.tolerances)
    if config.output_format is OutputFormat.CSV:
        out.write("name,samples,max_violation,tolerance,pass\n")
        for res in results:
            out.write(f"{res.name},{res.samples},{res.max_violation!r},"
                      f"{res.tolerance!r},{int(res.passed)}\n")
    else:
        json.dump({"n": config.n, "samples": config.sample_count,
                   "seed": config.seed,
                   "properties": [r.to_dict() for r in results]},
                  out, indent=2)
        out.write("\n")
    ok = all(res.passed for res in results)
    return ExitCode.OK if ok else ExitCode.INTERNAL


def cmd_optimize(config: RunConfig, out: io.TextIOBase) -> ExitCode:
    """Run the extremizer and compare with the sharp constant."""
    task = ExtremizeTask(config.n, config.mode, config.traceless,
                         config.restarts, config.seed, config.max_sweeps,
                         config.convergence_tol, config.workers)
    ic(task)
    result = alternating_extremize(task)
    gap = abs(result.ratio - task.target)
    if config.output_format is OutputFormat.CSV:
        write_trajectory_csv(result, out)
    else:
        json.dump({"task": task.to_dict(), "ratio": result.ratio,
                   "target": task.target, "gap": gap,
                   "result": result.to_dict()}, out, indent=2)
        out.write("\n")
    if gap > OPTIMIZE_GAP:
        logger.error("gap %.3e to the sharp constant exceeds %.0e", gap,
                     OPTIMIZE_GAP)
        return ExitCode.INTERNAL
    return ExitCode.OK


def cmd_gkls(config: RunConfig, out: io.TextIOBase, action: str,
             ensemble: bool) -> ExitCode:
    """Spectrum, sum rule or constraint audit of one or many generators."""
    tol = config.tolerances
    csv_out = config.output_format is OutputFormat.CSV
    if ensemble:
        return _gkls_ensemble(config, out, action)
    if action == "spectrum" and csv_out:
        raise ContractError("gkls spectrum of one generator is JSON only; "
                            "use --ensemble for the spectrum CSV.")
    path = config.input_paths[0]
    reader = FileReader(path)
    gen = GklsGenerator.from_dict(reader.document, source=path, name=path)
    spectral = spectrum(gen, tol)
    if action == "spectrum":
        entries = relaxation_identity_check(gen, spectral, tol)
        doc = {"generator": gen.name, "spectrum": spectral.to_dict(),
               "relaxation_identity": [e.to_dict() for e in entries]}
        if gen.n == 2:
            doc["relaxation_times"] = relaxation_times(
                gen, spectral, tol).to_dict()
        ok = all(e.holds for e in entries)
    elif action == "sumrule":
        rule = sum_rule_check(gen, spectral)
        if csv_out:
            write_sum_rule_csv([(gen.name, gen.n, rule)], out)
            return ExitCode.OK if rule.holds else ExitCode.INTERNAL
        doc = {"generator": gen.name, "lhs": rule.lhs, "rhs": rule.rhs,
               "holds": rule.holds}
        ok = rule.holds
    else:
        record = constraint_audit(gen, config.constant_mode, spectral, tol)
        if csv_out:
            write_audit_csv([record], out)
            return ExitCode.OK if record.passed else ExitCode.INTERNAL
        doc = record.to_dict()
        ok = record.passed
    json.dump(doc, out, indent=2)
    out.write("\n")
    return ExitCode.OK if ok else ExitCode.INTERNAL


def _gkls_ensemble(config: RunConfig, out: io.TextIOBase,
                   action: str) -> ExitCode:
    csv_out = config.output_format is OutputFormat.CSV
    summary = ensemble_audit(config.n, config.jumps, config.sample_count,
                             config.seed, config.constant_mode,
                             config.workers, config.tolerances)
    if action == "audit":
        if csv_out:
            write_ensemble_csv([summary], out)
        else:
            json.dump(summary.to_dict(), out, indent=2)
            out.write("\n")
        if summary.failures:
            logger.error("%d generators violate the %s constraint",
                         summary.failures, summary.mode)
        return ExitCode.OK if summary.all_checks_pass else ExitCode.INTERNAL

    if action == "sumrule":
        ok = summary.sum_rule_failures == 0
        if csv_out:
            write_sum_rule_csv([(m.record.generator_id, m.record.n,
                                 m.sum_rule) for m in summary.members], out)
            return ExitCode.OK if ok else ExitCode.INTERNAL
        doc = {"n": config.n, "num_jumps": config.jumps,
               "count": config.sample_count,
               "sum_rule_failures": summary.sum_rule_failures}
        json.dump(doc, out, indent=2)
        out.write("\n")
        return ExitCode.OK if ok else ExitCode.INTERNAL

    if csv_out:
        write_spectrum_csv(summary.members, out)
    else:
        write_spectrum_jsonl(summary.members, out)
    ok = summary.positivity_failures == 0 and \
        summary.identity_failures == 0 and summary.conjugation_failures == 0
    return ExitCode.OK if ok else ExitCode.INTERNAL


def cmd_witness(config: RunConfig, out: io.TextIOBase, kind: str,
                sign: str) -> ExitCode:
    """Emit a witness pair as matrix JSON plus metadata."""
    witness = build_witness(kind, config.n, sign)
    json.dump(witness.to_dict(), out, indent=2)
    out.write("\n")
    return ExitCode.OK


# -----[ Entry point ]------------------------------------------------

def _dispatch(args: argparse.Namespace, config: RunConfig
              ) -> Callable[[io.TextIOBase], ExitCode]:
    handlers = {
        "eval": lambda out: cmd_eval(config, out),
        "verify": lambda out: cmd_verify(config, out),
        "optimize": lambda out: cmd_optimize(config, out),
        "gkls": lambda out: cmd_gkls(config, out, args.action,
                                     args.ensemble),
        "witness": lambda out: cmd_witness(config, out, args.kind,
                                           args.sign),
    }
    return handlers[args.command]


def main(argv: list[str] | None = None) -> int:
    """Run the command line and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose, args.debug)
    try:
        config = RunConfig.from_args(args)
        ic(config)
        handler = _dispatch(args, config)
        buffer = io.StringIO()
        code = handler(buffer)
        if config.output_path:
            with open(config.output_path, "w", encoding="utf-8") as stream:
                stream.write(buffer.getvalue())
        else:
            sys.stdout.write(buffer.getvalue())
        return int(code)
    except INPUT_ERRORS as err:
        logger.error("%s", err)
        return int(ExitCode.INPUT)
    except RBoundException as err:
        logger.error("%s", err)
        return int(ExitCode.INTERNAL)
    except OSError as err:
        logger.error("%s", err)
        return int(ExitCode.INPUT)
