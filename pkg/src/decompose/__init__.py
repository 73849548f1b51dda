"""Direct decomposition module."""

from src.decompose.decomposer import DecompositionResult, decompose
from src.decompose.generators import recover_generators

__all__ = ["DecompositionResult", "decompose", "recover_generators"]
