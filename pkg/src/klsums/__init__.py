"""Sum expressions for Kubota-Leopoldt p-adic L-functions, in exact arithmetic."""

from .padic import PAdic, PrimeContext

__all__ = ["PAdic", "PrimeContext"]
