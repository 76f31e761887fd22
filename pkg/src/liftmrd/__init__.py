"""Constant-dimension subspace codes from lifted MRD codes and their extensions."""

__version__ = "0.1.0"
