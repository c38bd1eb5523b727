"""vcbench: a verifying-compiler workbench for a small design-by-contract
specification/programming language."""

from .diagnostics import Diagnostic, FrontEndError
from .pipeline import Pipeline, verify_paths
from .prover.engine import ProofBudget, ProofResult
from .report import VerifyReport
from .vcgen import VC, generate_vcs

__version__ = "0.1.0"

__all__ = ["Diagnostic", "FrontEndError", "Pipeline", "verify_paths",
           "ProofBudget", "ProofResult", "VerifyReport", "VC", "generate_vcs",
           "__version__"]
