"""Exact verification engine for the generalized cluster structure on D(GL_n)."""
__version__ = "0.1.0"
