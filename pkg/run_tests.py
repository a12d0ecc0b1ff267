"""rbound unit tests."""
import sys
import unittest

from rbound.tests.linalg_tests import MatrixUnitTests, LinalgUnitTests, \
    DecompositionUnitTests
from rbound.tests.io_tests import CoreReaderTests
from rbound.tests.rfunc_tests import EvaluationUnitTests, \
    SelfValueUnitTests, IdentityUnitTests, BoundUnitTests
from rbound.tests.witness_tests import WitnessUnitTests, PauliUnitTests
from rbound.tests.optimizer_tests import QuadFormUnitTests, \
    ExtremizeTaskUnitTests, ExtremizeUnitTests
from rbound.tests.gkls_tests import GeneratorUnitTests, SpectrumUnitTests, \
    AuditUnitTests
from rbound.tests.cli_tests import ConfigUnitTests, CommandUnitTests

SECTIONS = (
    ("Matrix Unit Tests", (MatrixUnitTests,)),
    ("Linear Algebra Tests", (LinalgUnitTests, DecompositionUnitTests)),
    ("Core Reader Tests", (CoreReaderTests,)),
    ("r-Functional Tests", (EvaluationUnitTests, SelfValueUnitTests,
                            IdentityUnitTests, BoundUnitTests)),
    ("Witness Tests", (WitnessUnitTests, PauliUnitTests)),
    ("Optimizer Tests", (QuadFormUnitTests, ExtremizeTaskUnitTests,
                         ExtremizeUnitTests)),
    ("GKLS Tests", (GeneratorUnitTests, SpectrumUnitTests, AuditUnitTests)),
    ("Command Line Tests", (ConfigUnitTests, CommandUnitTests)),
)


def main() -> int:
    """Run every section and return 1 if any test failed."""
    loader = unittest.TestLoader()
    ok = True
    for title, cases in SECTIONS:
        print(f"===== {title} ".ljust(52, "="))
        suite = unittest.TestSuite(loader.loadTestsFromTestCase(case)
                                   for case in cases)
        result = unittest.TextTestRunner(stream=sys.stdout,
                                         verbosity=1).run(suite)
        ok = ok and result.wasSuccessful()
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
