"""Named group constructions and the group-spec language."""

from .build import (
    ProjectiveLine, alternating, build, data_path, l3_3_2, load_generator_file,
    m10, mathieu, parse_generator_text, pgammal2_9, pgl2, psl2, sl2, symmetric,
)
from .fields import GF, FieldElement, irreducible_poly, is_prime, prime_power
from .spec import (
    PGL2, PSL2, SL2, Alt, FromFile, GroupSpec, Named, Product,
    QuotientByRadical, Sym, WreathS2, parse_spec,
)

__all__ = [
    "GF", "FieldElement", "GroupSpec", "Alt", "Sym", "PSL2", "PGL2", "SL2",
    "Named", "FromFile", "Product", "WreathS2", "QuotientByRadical",
    "ProjectiveLine", "alternating", "build", "data_path", "irreducible_poly",
    "is_prime", "l3_3_2", "load_generator_file", "m10", "mathieu",
    "parse_generator_text", "parse_spec", "pgammal2_9", "pgl2", "prime_power",
    "psl2", "sl2", "symmetric",
]
