"""JSON/CSV/text rendering of command results.

Rationals become {"num": "...", "den": "..."} and partitions become arrays,
so every payload survives a JSON round trip without loss.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from ..symcore.partitions import canonical_key, format_partition
from ..symcore.symfn import SymFn, format_rational


def rational_json(c) -> dict:
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def rational_from_json(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


def symfn_json(f: SymFn, basis: str) -> dict:
    f = f.to(basis.upper())
    return {
        "basis": basis.lower(),
        "terms": [{"partition": list(lam), "coeff": rational_json(c)} for lam, c in f.items()],
    }


def symfn_from_json(d: dict) -> SymFn:
    return SymFn({tuple(t["partition"]): rational_from_json(t["coeff"]) for t in d["terms"]}, d["basis"].upper())


@dataclass
class ResultEnvelope:
    command: str
    params: dict
    result: object
    version: str
    ms: float = 0.0
    cached: bool = field(default=False, compare=False)

    def to_dict(self) -> dict:
        return {"command": self.command, "params": self.params, "result": self.result,
                "version": self.version, "ms": self.ms}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ResultEnvelope":
        d = json.loads(text)
        return cls(d["command"], d["params"], d["result"], d["version"], d["ms"])


# ---------------------------------------------------------------------------
# text and csv


def _symfn_text(payload: dict) -> str:
    terms = payload["terms"]
    if not terms:
        return "0"
    sym = payload["basis"]
    coeffs = [rational_from_json(t["coeff"]) for t in terms]
    den = lcm(*(c.denominator for c in coeffs))
    pieces = []
    for t, c in zip(terms, coeffs):
        n = c * den
        mono = f"{sym}{format_partition(tuple(t['partition']))}"
        mag = abs(n)
        body = mono if mag == 1 else f"{format_rational(mag)}{mono}"
        if not pieces:
            pieces.append(("-" if n < 0 else "") + body)
        else:
            pieces.append(("- " if n < 0 else "+ ") + body)
    text = " ".join(pieces)
    if den != 1:
        return f"(1/{den})*({text})"
    return text


def _value_text(v) -> str:
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return format_rational(rational_from_json(v))
    if isinstance(v, dict) and "terms" in v and "basis" in v:
        return _symfn_text(v)
    if isinstance(v, list):
        return "; ".join(_value_text(x) for x in v)
    if isinstance(v, dict):
        return ", ".join(f"{k}={_value_text(x)}" for k, x in v.items())
    return str(v)


def render_text(env: ResultEnvelope) -> str:
    r = env.result
    if isinstance(r, dict) and "terms" in r and "basis" in r:
        return _symfn_text(r)
    if env.command == "table1":
        lines = []
        for row in r["rows"]:
            parts = " ".join(format_partition(tuple(p)) for p in row["partitions"])
            lines.append(f"g={row['g']} k={row['p']}: {parts}")
        return "\n".join(lines)
    if isinstance(r, dict) and "value" in r and len(r) <= 2:
        return _value_text(r["value"])
    if isinstance(r, dict):
        return "\n".join(f"{k}: {_value_text(v)}" for k, v in r.items())
    return _value_text(r)


def render_csv(env: ResultEnvelope) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    r = env.result
    if isinstance(r, dict) and "terms" in r and "basis" in r:
        w.writerow(["partition", "num", "den"])
        terms = sorted(r["terms"], key=lambda t: canonical_key(tuple(t["partition"])))
        for t in terms:
            w.writerow([format_partition(tuple(t["partition"])), t["coeff"]["num"], t["coeff"]["den"]])
    elif env.command == "table1":
        w.writerow(["g", "k", "partition"])
        for row in r["rows"]:
            for p in row["partitions"]:
                w.writerow([row["g"], row["p"], format_partition(tuple(p))])
    elif isinstance(r, dict):
        w.writerow(["key", "value"])
        for k, v in r.items():
            w.writerow([k, _value_text(v)])
    else:
        w.writerow(["value"])
        w.writerow([_value_text(r)])
    return buf.getvalue()


def render(env: ResultEnvelope, fmt: str) -> str:
    if fmt == "json":
        return env.to_json()
    if fmt == "csv":
        return render_csv(env).rstrip("\n")
    return render_text(env)
