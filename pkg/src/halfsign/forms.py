"""Half-integral-weight form model, squarefree indexing, and JSON ingestion.

A form of weight k + 1/2 lives at a level N divisible by 4 and carries a
real character chi (values +-1 on the units mod N, zero elsewhere).  The
coefficient file format is documented in load_form.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .arith import is_squarefree, squarefree_decompose
from .errors import (
    BadCharacter,
    InvalidLevel,
    NonCuspidal,
    NotSquarefree,
    ParseError,
    PrecisionExceeded,
)
from .qseries import TruncatedSeries

__all__ = [
    "RealCharacter",
    "FormDescriptor",
    "HalfIntegralForm",
    "squarefree_decompose",
    "load_form",
    "save_form",
    "load_series",
    "coefficient",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class RealCharacter:
    """Real Dirichlet character mod N: +-1 on units, 0 off the units."""

    def __init__(self, modulus: int, table: dict[int, int] | None):
        self.modulus = modulus
        units = [a for a in range(modulus) if math.gcd(a, modulus) == 1]
        if table is None:
            table = {a: 1 for a in units}
        if sorted(table) != units:
            raise BadCharacter(
                f"character table must cover exactly the units mod {modulus}"
            )
        if any(v not in (1, -1) for v in table.values()):
            raise BadCharacter("character values must be +1 or -1")
        for a in units:
            for b in units:
                if table[a * b % modulus] != table[a] * table[b]:
                    raise BadCharacter(
                        f"table is not multiplicative at ({a}, {b}) mod {modulus}"
                    )
        self.table = dict(table)
        self.is_trivial = all(v == 1 for v in table.values())

    @classmethod
    def trivial(cls, modulus: int) -> "RealCharacter":
        return cls(modulus, None)

    def __call__(self, n: int) -> int:
        n %= self.modulus
        return self.table.get(n, 0)

    def power(self, n: int, e: int) -> int:
        """chi(n)^e, using chi(n) in {-1, 0, 1}."""
        v = self(n)
        if v == 1 or e == 0:
            return 1
        if v == 0:
            return 0
        return -1 if e % 2 else 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RealCharacter):
            return NotImplemented
        return self.modulus == other.modulus and self.table == other.table


@dataclass(frozen=True)
class FormDescriptor:
    """Level N (4 | N), integer k >= 2 (weight k + 1/2), real character chi."""

    level: int
    k: int
    character: RealCharacter

    def __post_init__(self) -> None:
        if self.level < 4 or self.level % 4 != 0:
            raise InvalidLevel(f"level must be divisible by 4, got {self.level}")
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.character.modulus != self.level:
            raise BadCharacter(
                f"character modulus {self.character.modulus} != level {self.level}"
            )


@dataclass(frozen=True)
class HalfIntegralForm:
    descriptor: FormDescriptor
    series: TruncatedSeries

    def __post_init__(self) -> None:
        if self.series.coeffs[0] != 0:
            raise NonCuspidal("constant coefficient of a cusp form must be zero")

    @property
    def prec(self) -> int:
        return self.series.prec

    @property
    def level(self) -> int:
        return self.descriptor.level

    @property
    def k(self) -> int:
        return self.descriptor.k

    @property
    def chi(self) -> RealCharacter:
        return self.descriptor.character

    def an(self, n: int) -> Fraction:
        """Raw coefficient a(n); errors past the precision."""
        return self.series.coefficient(n)


def coefficient(form: HalfIntegralForm, t: int, m: int) -> Fraction:
    """a(t * m^2) for squarefree t; exact accessor along the Hecke indexing."""
    if t < 1 or m < 1:
        raise ValueError("t and m must be positive")
    if not is_squarefree(t):
        raise NotSquarefree(f"t = {t} is not squarefree")
    n = t * m * m
    if n > form.prec:
        raise PrecisionExceeded(f"a({n}) is beyond precision {form.prec}")
    return form.series.coeffs[n]


# ---------------------------------------------------------------------------
# serialization
#
# Form file format (UTF-8 JSON): an object with fields
#   "level"      integer, divisible by 4
#   "k"          integer >= 2 (the weight is k + 1/2)
#   "character"  "trivial" or an object mapping unit residues (as strings)
#                to 1 / -1
#   "prec"       integer truncation order
#   "coeffs"     array of strings, index = exponent, each an integer or
#                "p/q" exact rational; index 0 must be "0"


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(f"malformed rational literal {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(x: Fraction) -> str:
    """Lossless 'num/den' string, denominator omitted when 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _character_from_json(level: int, spec: object) -> RealCharacter:
    if spec == "trivial":
        return RealCharacter.trivial(level)
    if isinstance(spec, dict):
        try:
            table = {int(key): int(value) for key, value in spec.items()}
        except (TypeError, ValueError) as exc:
            raise BadCharacter(f"unreadable character table: {exc}") from exc
        return RealCharacter(level, table)
    raise BadCharacter(f"character must be 'trivial' or a residue table, got {spec!r}")


def load_form(path: str | Path) -> HalfIntegralForm:
    """Read and fully validate a half-integral form from a JSON file."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("form file must contain a JSON object")
    try:
        level = int(data["level"])
        k = int(data["k"])
        prec = int(data["prec"])
        raw_coeffs = data["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"missing or malformed header field: {exc}") from exc
    if level % 4 != 0:
        raise InvalidLevel(f"level must be divisible by 4, got {level}")
    if k < 2:
        raise ParseError(f"k must be at least 2, got {k}")
    if not isinstance(raw_coeffs, list) or len(raw_coeffs) != prec + 1:
        raise ParseError(f"expected {prec + 1} coefficient entries")
    character = _character_from_json(level, data.get("character", "trivial"))
    coeffs = tuple(parse_rational(c) for c in raw_coeffs)
    if coeffs[0] != 0:
        raise NonCuspidal("coefficient index 0 must be '0'")
    descriptor = FormDescriptor(level=level, k=k, character=character)
    return HalfIntegralForm(descriptor, TruncatedSeries(prec, coeffs))


def form_to_dict(form: HalfIntegralForm) -> dict:
    chi = form.chi
    character: object = "trivial" if chi.is_trivial else {
        str(a): v for a, v in sorted(chi.table.items())
    }
    return {
        "level": form.level,
        "k": form.k,
        "character": character,
        "prec": form.prec,
        "coeffs": [format_rational(c) for c in form.series.coeffs],
    }


def save_form(form: HalfIntegralForm, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(form_to_dict(form), indent=1, sort_keys=True) + "\n",
        encoding="utf-8",
    )


def load_series(path: str | Path) -> TruncatedSeries:
    """Lenient loader for comparison coefficient files.

    Accepts the same JSON layout as load_form but ignores level, k and
    character, and skips the cusp/level validation; used for ingesting
    integral-weight eigenform coefficients.
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    try:
        prec = int(data["prec"])
        raw_coeffs = data["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"missing or malformed header field: {exc}") from exc
    if not isinstance(raw_coeffs, list) or len(raw_coeffs) != prec + 1:
        raise ParseError(f"expected {prec + 1} coefficient entries")
    return TruncatedSeries(prec, tuple(parse_rational(c) for c in raw_coeffs))
