"""Homological computations for finite-dimensional monomial path algebras."""
from .algebra import MonomialAlgebra, Path, Quiver
from .errors import MonofgError
from .specfile import load_algebra, parse_algebra

__version__ = "0.1.0"

__all__ = ["MonomialAlgebra", "MonofgError", "Path", "Quiver", "load_algebra", "parse_algebra", "__version__"]
