"""Resource caps for the enumerative engines.

All caps are counts, not seconds.  Exceeding one raises ResourceLimitError
instead of silently truncating.  The CLI can override the defaults through
flags or the COVERTOOL_CAPS environment variable (a JSON object whose keys
match the field names below).
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    covers: int = 2 ** 20          # minimal vertex covers per enumeration
    spairs: int = 10 ** 5          # S-pairs processed per Groebner basis
    box: int = 2 ** 20             # lattice points scanned per closure computation
    betti: int = 2 ** 14           # candidate multidegrees per Betti table
    std_monomials: int = 10 ** 6   # standard monomials per degree
    ass_box: int = 2 ** 20         # socle-witness candidates per prime
    exponent: int = 2 ** 15        # largest exponent entry allowed in a power

    def override(self, **kw):
        kw = {k: v for k, v in kw.items() if v is not None}
        return replace(self, **kw)


DEFAULT_CAPS = Caps()
