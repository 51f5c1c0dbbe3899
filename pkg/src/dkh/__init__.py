"""Doubled Khovanov homology of virtual links.

The usual entry points::

    >>> from dkh import parse_gauss_code, dkh, rasmussen
    >>> h = dkh(parse_gauss_code("O1- O2- U1- U2-"))
    >>> rasmussen(parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+"))
    RasmussenPair(s1=2, s2=0, sl_max=2)
"""
import importlib as _importlib

from .errors import *  # noqa: F401,F403
from .diagram import *  # noqa: F401,F403
from .smoothing import *  # noqa: F401,F403
from .algebra import *  # noqa: F401,F403
from .complex import *  # noqa: F401,F403
from .homology import *  # noqa: F401,F403
from .obstructions import *  # noqa: F401,F403
from .cobordism import *  # noqa: F401,F403
from .fixtures import *  # noqa: F401,F403
from .laurent import Laurent  # noqa: F401
from .sampling import random_admissible, random_diagram, random_knot  # noqa: F401

# the star import above shadows the submodule with the function of the same name
homology = _importlib.import_module(".homology", __name__)

__version__ = "0.1.0"
