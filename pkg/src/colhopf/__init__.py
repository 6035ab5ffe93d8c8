"""Coloured Hopf algebras: colour groups, coloured coalgebra maps and R-matrices, and their verification."""

__version__ = "0.1.0"
