from .engine import (BudgetExceeded, ProofBudget, ProofResult, ProofSession,
                     PROVED, TIMEOUT, UNPROVABLE, prove)
from .linear import LinearLayer
from .terms import TermStore

__all__ = ["BudgetExceeded", "ProofBudget", "ProofResult", "ProofSession",
           "PROVED", "TIMEOUT", "UNPROVABLE", "prove", "LinearLayer",
           "TermStore"]
