"""Casimir free energy and entropy between parallel metal plates.

Thin wrapper over the compiled extension; see the project README for the
physics conventions (frequencies in meV, SI everywhere else).
"""

from casent._core import *  # noqa: F401,F403
from casent._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc or __doc__
__version__ = "0.1.0"
