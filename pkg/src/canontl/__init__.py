"""Canonical and dual canonical bases of (C^2)^(x)n through Temperley-Lieb diagrams.

Submodules, bottom to top: :mod:`laurent`, :mod:`symgroup`, :mod:`tldiagram`,
:mod:`barsolver`, :mod:`hecke`, :mod:`parabolic`, :mod:`spin`,
:mod:`quantum`, plus the :mod:`cli` front end.
"""

__version__ = "0.1.0"
