"""Exact homological algebra for partial group actions and epsilon-strongly
graded algebras."""

from .exactla import GF, QQ, Field, parse_field

__version__ = "0.1.0"

__all__ = ["Field", "QQ", "GF", "parse_field", "__version__"]
