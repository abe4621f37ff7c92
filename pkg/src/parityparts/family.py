"""The eight parity-separation families.

A family puts every part into one of two classes by parity; all parts of the
lower class must lie strictly below all parts of the upper class, and each
class is independently either unrestricted or restricted to distinct parts.

Naming is a classic trap: the counting function is written with the *upper*
class as superscript and the *lower* class as subscript, while flags and
compact aliases here always spell both out.  The canonical compact form is
"<upper>/<lower>", e.g. "ou/eu" for odd-unrestricted over even-unrestricted.
"""

from __future__ import annotations

from dataclasses import dataclass

EVEN, ODD = "even", "odd"


@dataclass(frozen=True)
class PartClass:
    parity: str          # "even" or "odd"
    distinct: bool

    @property
    def code(self) -> str:
        return ("e" if self.parity == EVEN else "o") + ("d" if self.distinct else "u")


@dataclass(frozen=True)
class FamilyCode:
    upper: PartClass     # superscript class: parts lie above
    lower: PartClass     # subscript class: parts lie below

    def __post_init__(self):
        if self.upper.parity == self.lower.parity:
            raise ValueError("upper and lower classes must have opposite parity")

    @property
    def name(self) -> str:
        """Compact CLI alias, upper class first: 'ou/eu' etc."""
        return f"{self.upper.code}/{self.lower.code}"

    @property
    def tex_name(self) -> str:
        """Subscript-first display form matching the counting-function notation."""
        return f"p_{self.lower.code}^{self.upper.code}"

    def __str__(self):
        return self.name


def _cls(code: str) -> PartClass:
    if len(code) != 2 or code[0] not in "eo" or code[1] not in "ud":
        raise ValueError(f"bad class code {code!r} (want e.g. 'eu', 'od')")
    return PartClass(EVEN if code[0] == "e" else ODD, code[1] == "d")


def family(upper: str, lower: str) -> FamilyCode:
    return FamilyCode(_cls(upper), _cls(lower))


# Canonical order = the order the eight main-term asymptotics are stated in.
FAMILIES: tuple[FamilyCode, ...] = (
    family(upper="ou", lower="eu"),   # p_eu^ou
    family(upper="od", lower="eu"),   # p_eu^od
    family(upper="eu", lower="od"),   # p_od^eu
    family(upper="ou", lower="ed"),   # p_ed^ou
    family(upper="od", lower="ed"),   # p_ed^od
    family(upper="eu", lower="ou"),   # p_ou^eu
    family(upper="ed", lower="ou"),   # p_ou^ed
    family(upper="ed", lower="od"),   # p_od^ed
)

_BY_NAME = {f.name: f for f in FAMILIES}


def parse_family(text: str) -> FamilyCode:
    """Parse any of the accepted spellings.

    - explicit:   "sup=ou,sub=eu"  (order of the two keys is free)
    - compact:    "ou/eu"          (upper/lower)
    - subscript-first maths form:  "eu^ou" or "p_eu^ou"  (lower^upper)
    """
    t = text.strip().lower()
    if "=" in t:
        parts = dict(kv.split("=", 1) for kv in t.split(","))
        keys = set(parts)
        if keys != {"sup", "sub"}:
            raise ValueError(f"family spec {text!r} needs exactly sup=..,sub=..")
        return family(upper=parts["sup"].strip(), lower=parts["sub"].strip())
    if "/" in t:
        up, lo = t.split("/", 1)
        fam = family(upper=up.strip(), lower=lo.strip())
    elif "^" in t:
        lo, up = t.removeprefix("p_").split("^", 1)
        fam = family(upper=up.strip(), lower=lo.strip())
    else:
        raise ValueError(f"cannot parse family {text!r}")
    if fam.name not in _BY_NAME:
        raise ValueError(f"{text!r} is not one of the eight families")
    return fam


def parse_families(text: str) -> list[FamilyCode]:
    """Comma-separated list of family specs, or 'all'.

    The explicit sup=..,sub=.. form contains a comma of its own, so it is only
    accepted as a single-family spec, never inside a list.
    """
    if text.strip().lower() == "all":
        return list(FAMILIES)
    if "=" in text:
        return [parse_family(text)]
    return [parse_family(tok) for tok in text.split(",") if tok.strip()]
