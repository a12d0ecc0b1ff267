"""Run configuration of the command line."""

from __future__ import annotations
import argparse
import os
from typing import Mapping

from ..core.constants import DEFAULT_SEED, DEFAULT_TOLERANCES, \
    MAX_VERIFY_N, MIN_LEVELS, OPTIMIZER_DEFAULTS, SEED_ENV_VAR, \
    ConstantMode, MinMax, Mode, OutputFormat, Tolerances
from ..core.exception import ContractError
from ..core.validators import InRange, OneOf, Positive

SEED_LIMITS = MinMax(0, 2 ** 64 - 1)


def resolve_seed(flag: int | None,
                 environ: Mapping[str, str] | None = None) -> int:
    """Return the seed: --seed, then $RFUNC_SEED, then DEFAULT_SEED."""
    if flag is not None:
        return flag
    environ = os.environ if environ is None else environ
    raw = environ.get(SEED_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_SEED
    try:
        return int(raw.strip(), 0)
    except ValueError as err:
        raise ContractError(f"{SEED_ENV_VAR}={raw!r} is not an integer.") \
            from err


class RunConfig:
    """A set of values that one CLI invocation operates with."""

    # pylint: disable=too-many-instance-attributes

    n = InRange(MinMax(MIN_LEVELS, MAX_VERIFY_N), integer=True)
    seed = InRange(SEED_LIMITS, integer=True)
    restarts = Positive(integer=True)
    sample_count = Positive(integer=True)
    workers = Positive(integer=True)
    max_sweeps = Positive(integer=True)
    convergence_tol = Positive()
    output_format = OneOf(OutputFormat.JSON, OutputFormat.CSV)
    mode = OneOf(Mode.MAXIMIZE, Mode.MINIMIZE)
    constant_mode = OneOf(*ConstantMode)

    def __init__(self, subcommand: str, n: int = 3, seed: int = DEFAULT_SEED,
                 restarts: int = OPTIMIZER_DEFAULTS.restarts,
                 sample_count: int = 1000, jumps: int = 1,
                 traceless: bool = False, mode=Mode.MAXIMIZE,
                 constant_mode=ConstantMode.TRACELESS,
                 output_format=OutputFormat.JSON,
                 output_path: str | None = None,
                 input_paths: tuple[str, ...] = (),
                 workers: int = 1,
                 max_sweeps: int = OPTIMIZER_DEFAULTS.max_sweeps,
                 convergence_tol: float = OPTIMIZER_DEFAULTS.convergence_tol,
                 tolerances: Tolerances = DEFAULT_TOLERANCES):
        """Initialize the object; numeric fields are validated."""
        self.subcommand = subcommand
        self.n = n
        self.seed = seed
        self.restarts = restarts
        self.sample_count = sample_count
        if isinstance(jumps, bool) or not isinstance(jumps, int) or jumps < 0:
            raise ContractError(f"jumps must be a non-negative integer, "
                                f"got {jumps!r}")
        self.jumps = jumps
        self.traceless = bool(traceless)
        self.mode = mode
        self.constant_mode = constant_mode
        self.output_format = output_format
        self.output_path = output_path
        self.input_paths = tuple(input_paths)
        self.workers = workers
        self.max_sweeps = max_sweeps
        self.convergence_tol = convergence_tol
        self.tolerances = tolerances

    @classmethod
    def from_args(cls, args: argparse.Namespace,
                  environ: Mapping[str, str] | None = None) -> RunConfig:
        """Return the configuration of a parsed command line."""
        overrides = {name: getattr(args, f"tol_{name}")
                     for name in Tolerances._fields
                     if getattr(args, f"tol_{name}", None) is not None}
        inputs = tuple(p for p in (getattr(args, "a_path", None),
                                   getattr(args, "b_path", None),
                                   getattr(args, "input", None)) if p)
        return cls(
            subcommand=args.command,
            n=getattr(args, "n", 3),
            seed=resolve_seed(getattr(args, "seed", None), environ),
            restarts=getattr(args, "restarts", OPTIMIZER_DEFAULTS.restarts),
            sample_count=getattr(args, "count", 1000),
            jumps=getattr(args, "jumps", 1),
            traceless=getattr(args, "traceless", False),
            mode=getattr(args, "extremum", Mode.MAXIMIZE),
            constant_mode=getattr(args, "mode",
                                  ConstantMode.TRACELESS),
            output_format=args.format,
            output_path=args.out,
            input_paths=inputs,
            workers=getattr(args, "workers", 1),
            max_sweeps=getattr(args, "max_sweeps",
                               OPTIMIZER_DEFAULTS.max_sweeps),
            convergence_tol=getattr(args, "convergence_tol",
                                    OPTIMIZER_DEFAULTS.convergence_tol),
            tolerances=DEFAULT_TOLERANCES._replace(**overrides))

    def __repr__(self) -> str:
        """Return a string representation of this object."""
        return (f"RunConfig(subcommand={self.subcommand!r}, n={self.n}, "
                f"seed={self.seed}, format={self.output_format!s})")
