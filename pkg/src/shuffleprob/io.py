"""JSON codecs for distributions, cumulant maps and series.

Rationals are serialized as strings "p" or "p/q" (never floats); integers are
accepted on input for convenience.  Words are dot-joined letter names; all
emitted maps are in graded lexicographic order, so re-emitting a parsed file
reproduces it byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from .cumulants import Distribution, TruncatedSeries
from .errors import ValidationError
from .words import Letter, Word


def rational_to_str(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ValidationError(f"expected a rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad rational literal {x!r}: {exc}") from None
    raise ValidationError(f"expected a rational as int or 'p/q' string, got {type(x).__name__}")


def word_to_str(w: Word) -> str:
    return repr(w)


def parse_word(s: str, letters: Mapping[str, Letter]) -> Word:
    if s == "1":
        return Word()
    parts = s.split(".")
    out = []
    for p in parts:
        if p not in letters:
            raise ValidationError(f"word {s!r} uses undeclared letter {p!r}")
        out.append(letters[p])
    return Word(out)


def _parse_letters(obj) -> tuple[Letter, ...]:
    raw = obj.get("letters")
    if not isinstance(raw, list) or not raw:
        raise ValidationError("'letters' must be a nonempty list of names")
    letters = []
    for name in raw:
        if not isinstance(name, str) or not name or any(c in name for c in ".|# \t"):
            raise ValidationError(f"bad letter name {name!r}")
        letters.append(Letter(name))
    if len(set(letters)) != len(letters):
        raise ValidationError("duplicate letter names")
    return tuple(letters)


def _parse_degree(obj) -> int:
    n = obj.get("max_degree")
    if not isinstance(n, int) or n < 1:
        raise ValidationError("'max_degree' must be a positive integer")
    return n


def _sorted_value_map(values: Mapping[Word, Fraction]) -> dict[str, str]:
    return {word_to_str(w): rational_to_str(values[w])
            for w in sorted(values, key=Word.sort_key)}


def _parse_value_map(obj, field: str, letters, max_degree: int,
                     allow_empty_word: bool = False) -> dict[Word, Fraction]:
    raw = obj.get(field, {})
    if not isinstance(raw, dict):
        raise ValidationError(f"'{field}' must be an object mapping words to rationals")
    table = {l.name: l for l in letters}
    out = {}
    for key, val in raw.items():
        w = parse_word(key, table)
        if not w and not allow_empty_word:
            raise ValidationError(f"'{field}' must not contain the empty word \"1\"")
        if len(w) > max_degree:
            raise ValidationError(f"word {key!r} exceeds max_degree {max_degree}")
        out[w] = parse_rational(val)
    return out


def distribution_to_json(d: Distribution) -> dict:
    return {"letters": [l.name for l in d.letters],
            "max_degree": d.max_degree,
            "moments": _sorted_value_map(d.moments)}


def parse_distribution(obj) -> Distribution:
    if not isinstance(obj, dict):
        raise ValidationError("distribution file must be a JSON object")
    letters = _parse_letters(obj)
    n = _parse_degree(obj)
    moments = _parse_value_map(obj, "moments", letters, n, allow_empty_word=True)
    return Distribution(letters, n, moments)


def cumulant_map_to_json(kind: str, letters, max_degree: int,
                         values: Mapping[Word, Fraction]) -> dict:
    return {"kind": kind,
            "letters": [l.name for l in letters],
            "max_degree": max_degree,
            "values": _sorted_value_map({w: v for w, v in values.items() if v})}


def parse_cumulant_map(obj):
    """Returns (kind, letters, max_degree, values)."""
    if not isinstance(obj, dict):
        raise ValidationError("cumulant file must be a JSON object")
    kind = obj.get("kind")
    if kind not in ("free", "boolean", "monotone"):
        raise ValidationError(f"bad or missing 'kind': {kind!r}")
    letters = _parse_letters(obj)
    n = _parse_degree(obj)
    values = _parse_value_map(obj, "values", letters, n)
    return kind, letters, n, values


def series_to_json(name: str, s: TruncatedSeries) -> dict:
    return {"series": name,
            "letters": [l.name for l in s.letters],
            "max_degree": s.max_degree,
            "coefficients": _sorted_value_map(s.coefficients)}


def dump_json(obj, stream):
    json.dump(obj, stream, indent=2)
    stream.write("\n")


def load_json_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
