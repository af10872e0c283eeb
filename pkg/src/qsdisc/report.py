"""Machine-readable reports: exact values as strings, canonical JSON."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .exact import LogReal


def encode_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def decode_rational(s: str) -> Fraction:
    return Fraction(s)


def encode_logreal(x: LogReal) -> list[list]:
    """``[[prime, "p/q"], ...]``; a nonzero rational part is stored under prime 1."""
    pairs = [[1, encode_rational(x.rational)]] if x.rational else []
    return pairs + [[p, encode_rational(c)] for p, c in x.terms]


def decode_logreal(pairs) -> LogReal:
    rational = Fraction(0)
    terms = {}
    for p, c in pairs:
        if p == 1:
            rational = decode_rational(c)
        else:
            terms[int(p)] = decode_rational(c)
    return LogReal.make(rational, terms)


@dataclass
class Report:
    command: str
    input: dict[str, Any]
    result: dict[str, Any]
    warnings: list[str] = field(default_factory=list)
    approx: dict[str, Any] | None = None

    def to_json(self) -> str:
        d = asdict(self)
        if d["approx"] is None:
            del d["approx"]
        return json.dumps(d, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Report:
        d = json.loads(text)
        return cls(
            command=d["command"],
            input=d["input"],
            result=d["result"],
            warnings=d.get("warnings", []),
            approx=d.get("approx"),
        )
