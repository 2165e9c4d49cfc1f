"""Hilbert-function combinatorics around Green's hyperplane restriction theorems."""
__version__ = "0.1.0"
