"""Grid-based normal-form solver for deformations of generalized complex structures."""

__version__ = "0.1.0"
