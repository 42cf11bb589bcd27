"""Finite-group computations: sum of element orders and psi-boundedness.

Groups are named by small expressions such as ``"C9"``, ``"D10"`` (dihedral
of order 10), ``"A5"``, ``"E(3,2)"``, ``"Schmidt(2,3)"``, ``"SL(2,5)"``,
``"C2 x C3"``, or ``File("gens.txt")`` for a permutation generator file.
"""

from ._psiforge import (
    PsiForgeError,
    bpsi,
    canonical,
    maximals,
    psi,
    table_rows,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "PsiForgeError",
    "bpsi",
    "canonical",
    "maximals",
    "psi",
    "table_rows",
    "verify",
    "__version__",
]
