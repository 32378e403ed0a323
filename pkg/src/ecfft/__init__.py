"""Polynomial algorithms over arbitrary prime fields on elliptic-curve evaluation domains."""

from .field import PrimeField, is_prime

__all__ = ["PrimeField", "is_prime"]
