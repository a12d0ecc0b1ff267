"""GKLS generators and relaxation-rate audits."""
from .gkls import GklsGenerator, SpectralResult, AuditRecord, \
    RelaxationEntry, SumRule, RelaxationTimes, amplitude_damping, dephasing, \
    build_superoperator, spectrum, relaxation_identity_check, \
    sum_rule_check, bound_constant, constraint_audit, rate_ratio, \
    relaxation_times
from .ensemble import GeneratorChecks, EnsembleSummary, random_generator, \
    check_generator, ensemble_audit, write_audit_jsonl, write_audit_csv, \
    write_ensemble_csv, write_spectrum_jsonl, write_spectrum_csv, \
    write_sum_rule_csv

__all__ = [
    "GklsGenerator", "SpectralResult", "AuditRecord", "RelaxationEntry",
    "SumRule", "RelaxationTimes", "amplitude_damping", "dephasing",
    "build_superoperator", "spectrum", "relaxation_identity_check",
    "sum_rule_check", "bound_constant", "constraint_audit", "rate_ratio",
    "relaxation_times",
    "GeneratorChecks", "EnsembleSummary", "random_generator",
    "check_generator", "ensemble_audit", "write_audit_jsonl",
    "write_audit_csv", "write_ensemble_csv", "write_spectrum_jsonl",
    "write_spectrum_csv", "write_sum_rule_csv",
]
