"""Exact Jones-Ocneanu traces on Hecke algebras and HOMFLY/Jones polynomials of braid closures."""

from .braid import BraidWord, coxeter, looped_coxeter, parse_braid_word
from .errors import (DomainError, HeckeTraceError, NotDivisible, ParseError,
                     RankError, RankMismatch)
from .hecke import HeckeElement, from_braid_word
from .invariants import (HomflyValue, JonesValue, homfly_of_braid, jones_of_braid,
                         lcb_trace, verify_lcb_recursion)
from .laurent import LaurentPoly, TraceValue, parse_laurent
from .trace import CONSTANTS, ocneanu_trace, trace_of_braid

__version__ = "0.1.0"
