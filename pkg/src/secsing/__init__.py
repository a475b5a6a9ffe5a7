"""Exact flattenings, tangent spans and singularity certificates for secant
varieties of Veronese embeddings."""

from .errors import DegreeError, DomainError, ParseError, PreconditionError

__version__ = "0.1.0"

__all__ = ["DegreeError", "DomainError", "ParseError", "PreconditionError"]
