"""Exact, certificate-producing tools for families of flat axis-parallel boxes."""

__version__ = "0.1.0"
