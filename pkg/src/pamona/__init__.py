"""pamona: finite semigroups and their partial automorphism monoids."""
from .core import Semigroup
from .errors import PamonaError
from .formats import emit_semigroup, parse_semigroup
from .isotest import isomorphisms, pa_isomorphic
from .pam import pa_monoid, pai_monoid
from .partial import PartialBijection

__version__ = "0.1.0"

__all__ = ["Semigroup", "PamonaError", "PartialBijection", "parse_semigroup", "emit_semigroup",
           "pa_monoid", "pai_monoid", "isomorphisms", "pa_isomorphic"]
