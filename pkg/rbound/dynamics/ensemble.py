"""Seeded random generators and concurrent ensemble audits."""

from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
import csv
from dataclasses import dataclass, field
import json
import logging
from typing import TextIO

import numpy as np

from ..core.constants import AUDIT_COLUMNS, DEFAULT_TOLERANCES, \
    ENSEMBLE_COLUMNS, SPECTRUM_COLUMNS, SUM_RULE_COLUMNS, ConstantMode, \
    Tolerances
from ..core.exception import ContractError
from ..core.linalg import frobenius_norm
from ..core.matrix import ComplexMatrix, ginibre
from ..functional.bounds import require_levels
from .gkls import AuditRecord, GklsGenerator, SumRule, constraint_audit, \
    rate_ratio, relaxation_identity_check, spectrum, sum_rule_check

logger = logging.getLogger(__name__)


def random_generator(n: int, num_jumps: int, seed,
                     name: str | None = None) -> GklsGenerator:
    """Return a random generator, deterministic in 'seed'.

    H = (G + G^dag)/2 for a Ginibre G; each jump is a Ginibre matrix minus
    its trace part, scaled to unit Frobenius norm. 'seed' is anything
    numpy.random.default_rng accepts (an int or a SeedSequence).
    """
    require_levels(n)
    if isinstance(num_jumps, bool) or not isinstance(num_jumps, int) or \
       num_jumps < 0:
        raise ContractError(f"num_jumps must be a non-negative integer, "
                            f"got {num_jumps!r}.")
    rng = np.random.default_rng(seed)
    g = ginibre(rng, n)
    hamiltonian = (g + g.dag) / 2.0
    eye = ComplexMatrix.identity(n)
    jumps = []
    for _ in range(num_jumps):
        raw = ginibre(rng, n)
        raw = raw - eye * (raw.trace() / n)
        jumps.append(raw / frobenius_norm(raw))
    return GklsGenerator(hamiltonian, jumps, name=name)


@dataclass(frozen=True)
class GeneratorChecks:
    """Every check run on one ensemble member."""

    record: AuditRecord
    rate_ratio: float | None
    min_rate: float
    sum_rule: SumRule
    identity_ok: bool
    conjugation_ok: bool
    skipped_pairs: int

    @property
    def sum_rule_ok(self) -> bool:
        """Return True if the sum rule holds."""
        return self.sum_rule.holds

    def to_dict(self) -> dict:
        """Return the spectral summary as a JSON-ready dictionary."""
        record = self.record
        return {"generator_id": record.generator_id, "n": record.n,
                "rates": list(record.rates), "min_rate": self.min_rate,
                "max_rate": record.max_rate, "sum_rates": record.sum_rates,
                "rate_ratio": self.rate_ratio,
                "identity_ok": self.identity_ok,
                "conjugation_ok": self.conjugation_ok,
                "skipped_pairs": self.skipped_pairs}

    def csv_row(self) -> tuple:
        """Return the row for the spectrum CSV columns."""
        record = self.record
        ratio = "" if self.rate_ratio is None else repr(self.rate_ratio)
        return (record.generator_id, record.n, repr(self.min_rate),
                repr(record.max_rate), repr(record.sum_rates), ratio,
                int(self.identity_ok), int(self.conjugation_ok),
                self.skipped_pairs)



@dataclass(frozen=True)
class EnsembleSummary:
    """Aggregate of an ensemble audit."""

    n: int
    num_jumps: int
    count: int
    mode: ConstantMode
    min_margin: float
    failures: int
    max_rate_ratio: float | None
    positivity_failures: int = 0
    sum_rule_failures: int = 0
    identity_failures: int = 0
    conjugation_failures: int = 0
    skipped_pairs: int = 0
    records: tuple[AuditRecord, ...] = field(default_factory=tuple,
                                             repr=False)
    members: tuple[GeneratorChecks, ...] = field(default_factory=tuple,
                                                 repr=False)

    @property
    def conjectured_ratio(self) -> float:
        """Return 1/n, the conjectured optimal constant (reported only)."""
        return 1.0 / self.n

    @property
    def all_checks_pass(self) -> bool:
        """Return True if no check failed on any member."""
        return not (self.failures or self.positivity_failures
                    or self.sum_rule_failures or self.identity_failures
                    or self.conjugation_failures)

    def csv_row(self) -> tuple:
        """Return the row for the ensemble CSV columns."""
        ratio = "" if self.max_rate_ratio is None else repr(
            self.max_rate_ratio)
        return (self.n, self.num_jumps, self.count, repr(self.min_margin),
                self.failures, ratio, repr(self.conjectured_ratio))

    def to_dict(self) -> dict:
        """Return a JSON-ready dictionary (records excluded)."""
        return {"n": self.n, "num_jumps": self.num_jumps,
                "count": self.count, "mode": str(self.mode),
                "min_margin": self.min_margin, "failures": self.failures,
                "max_rate_ratio": self.max_rate_ratio,
                "conjectured_ratio": self.conjectured_ratio,
                "positivity_failures": self.positivity_failures,
                "sum_rule_failures": self.sum_rule_failures,
                "identity_failures": self.identity_failures,
                "conjugation_failures": self.conjugation_failures,
                "skipped_pairs": self.skipped_pairs}


def check_generator(gen: GklsGenerator,
                    mode=ConstantMode.TRACELESS,
                    tolerances: Tolerances = DEFAULT_TOLERANCES
                    ) -> GeneratorChecks:
    """Run the audit and every consistency check on one generator."""
    spectral = spectrum(gen, tolerances)
    record = constraint_audit(gen, mode, spectral, tolerances)
    entries = relaxation_identity_check(gen, spectral, tolerances)
    conj_ok = spectral.conjugation_defect() <= \
        tolerances.zero_eigenvalue * spectral.scale
    return GeneratorChecks(
        record=record, rate_ratio=rate_ratio(spectral, tolerances.rate),
        min_rate=spectral.min_rate,
        sum_rule=sum_rule_check(gen, spectral),
        identity_ok=all(e.holds for e in entries),
        conjugation_ok=bool(conj_ok),
        skipped_pairs=sum(1 for e in entries if e.skipped))


def ensemble_audit(n: int, num_jumps: int, count: int, seed: int,
                   mode=ConstantMode.TRACELESS, workers: int = 1,
                   tolerances: Tolerances = DEFAULT_TOLERANCES
                   ) -> EnsembleSummary:
    """Audit 'count' random generators and summarize.

    Member i draws from the i-th child of SeedSequence(seed), so results are
    independent of the worker count; records keep member order.
    """
    require_levels(n)
    if count < 1:
        raise ContractError(f"count must be positive, got {count!r}.")
    mode = ConstantMode(mode)
    children = np.random.SeedSequence(seed).spawn(count)

    def one(index: int) -> GeneratorChecks:
        gen = random_generator(n, num_jumps, children[index],
                               name=f"n{n}-j{num_jumps}-{index}")
        return check_generator(gen, mode, tolerances)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            checks = list(pool.map(one, range(count)))
    else:
        checks = [one(i) for i in range(count)]

    ratios = [c.rate_ratio for c in checks if c.rate_ratio is not None]
    summary = EnsembleSummary(
        n=n, num_jumps=num_jumps, count=count, mode=mode,
        min_margin=min(c.record.margin for c in checks),
        failures=sum(1 for c in checks if not c.record.passed),
        max_rate_ratio=max(ratios) if ratios else None,
        positivity_failures=sum(
            1 for c in checks
            if c.min_rate < -tolerances.rate * max(1.0, c.record.sum_rates)),
        sum_rule_failures=sum(1 for c in checks if not c.sum_rule_ok),
        identity_failures=sum(1 for c in checks if not c.identity_ok),
        conjugation_failures=sum(1 for c in checks if not c.conjugation_ok),
        skipped_pairs=sum(c.skipped_pairs for c in checks),
        records=tuple(c.record for c in checks), members=tuple(checks))
    logger.info("ensemble n=%d jumps=%d count=%d mode=%s: %d failures, "
                "min margin %.3e", n, num_jumps, count, mode,
                summary.failures, summary.min_margin)
    return summary


def write_audit_jsonl(records, stream: TextIO) -> None:
    """Write one JSON object per audit record."""
    for record in records:
        stream.write(json.dumps(record.to_dict()) + "\n")


def write_audit_csv(records, stream: TextIO) -> None:
    """Write audit records under the frozen audit columns."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(AUDIT_COLUMNS)
    for record in records:
        writer.writerow(record.csv_row())


def write_ensemble_csv(summaries, stream: TextIO) -> None:
    """Write ensemble summaries under the frozen ensemble columns."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(ENSEMBLE_COLUMNS)
    for summary in summaries:
        writer.writerow(summary.csv_row())


def write_spectrum_jsonl(members, stream: TextIO) -> None:
    """Write one spectral summary per ensemble member."""
    for member in members:
        stream.write(json.dumps(member.to_dict()) + "\n")


def write_spectrum_csv(members, stream: TextIO) -> None:
    """Write spectral summaries under the frozen spectrum columns."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SPECTRUM_COLUMNS)
    for member in members:
        writer.writerow(member.csv_row())


def write_sum_rule_csv(rows, stream: TextIO) -> None:
    """Write (generator_id, n, SumRule) rows under the sum rule columns."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SUM_RULE_COLUMNS)
    for generator_id, n, rule in rows:
        writer.writerow((generator_id, n, repr(rule.lhs), repr(rule.rhs),
                         int(rule.holds)))
