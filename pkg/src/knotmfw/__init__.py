"""Exact braid, HOMFLYPT and Alexander computations for probing the
Morton-Franks-Williams braid index bound."""

from .braid import BraidWord, parse_braid
from .homfly import homfly_hecke, homfly_skein
from .laurent import LaurentPoly1, LaurentPoly2

__all__ = ["BraidWord", "parse_braid", "homfly_skein", "homfly_hecke", "LaurentPoly1", "LaurentPoly2"]
__version__ = "0.1.0"
