"""Pass/fail reports with exact witnesses, serialisable to JSON and plain text."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .exactla import Matrix, QuadScalar, format_rational


def serialize(obj):
    """Turn matrices, vectors and scalars into JSON-safe nested lists of strings."""
    if isinstance(obj, Matrix):
        return obj.to_strings()
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, QuadScalar):
        return repr(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict):
        return {str(k): serialize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [serialize(x) for x in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witness: dict = field(default_factory=dict)

    def __post_init__(self):
        self.passed = bool(self.passed)
        self.witness = serialize(self.witness)


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        self.info = serialize(self.info)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def add(self, name, passed, detail="", witness=None):
        c = Check(name, passed, detail, witness or {})
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail, c.witness))
        return self

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self):
        return {"title": self.title, "passed": self.passed, "info": self.info,
                "checks": [asdict(c) for c in self.checks]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["title"], [Check(**c) for c in d["checks"]], d.get("info", {}))

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_text(self, show_witness=True):
        lines = [f"== {self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for k in sorted(self.info):
            lines.append(f"   {k}: {_fmt_info(self.info[k])}")
        for c in self.checks:
            mark = "pass" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}" + (f"  ({c.detail})" if c.detail else ""))
            if show_witness and not c.passed:
                for wk, wv in c.witness.items():
                    lines.append(f"         {wk}: {json.dumps(wv)}")
        return "\n".join(lines)


def _fmt_info(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v)
    return str(v)
