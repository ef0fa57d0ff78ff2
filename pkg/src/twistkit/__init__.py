"""twistkit: exact twist-relation computations for finite groups and Weil polynomials."""

from twistkit.cyclo import Cyclotomic, field_of_values, rational, zeta

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "field_of_values",
    "rational",
    "zeta",
    "__version__",
]
