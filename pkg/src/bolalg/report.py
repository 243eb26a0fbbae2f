"""Check results shared by every verifier in the package.

A :class:`Check` is one named identity or property with its verdict.  Failing
checks carry a witness (1-based basis indices, or a symbol binding for
operator identities) and the nonzero residual found there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: tuple | None = None
    residual: tuple | None = None
    detail: str = ""

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class CheckReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: "CheckReport | Iterable[Check]") -> "CheckReport":
        items = other.checks if isinstance(other, CheckReport) else list(other)
        self.checks.extend(items)
        return self


def scan(name: str, tuples: Iterable[tuple], residual_fn, detail: str = "") -> Check:
    """Evaluate ``residual_fn`` over ``tuples`` in order; the first nonzero residual is the witness.

    ``tuples`` must be produced in lexicographic order so the witness is the
    smallest failing one.  Indices are reported 1-based.
    """
    for idx in tuples:
        res = residual_fn(*idx)
        if any(_flat_nonzero(res)):
            return Check(name, False, tuple(i + 1 for i in idx), tuple(_flatten(res)), detail)
    return Check(name, True, detail=detail)


def _flatten(x):
    if isinstance(x, (tuple, list)):
        for y in x:
            yield from _flatten(y)
    elif hasattr(x, "rows"):
        for r in x.rows:
            yield from r
    else:
        yield Fraction(x)


def _flat_nonzero(x):
    return (a != 0 for a in _flatten(x))


# -- command reports ------------------------------------------------------------------

SCHEMA = "bolalg-report/1"
STATUSES = ("pass", "fail", "error")
EXIT_CODES = {"pass": 0, "fail": 1, "error": 2}


def _encode(x):
    """JSON-safe form of a witness component; rationals are tagged so they decode exactly."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return {"q": str(x)}
    if isinstance(x, (tuple, list)):
        return [_encode(y) for y in x]
    if hasattr(x, "rows"):
        return [_encode(r) for r in x.rows]
    raise TypeError(f"cannot encode {type(x).__name__} in a report")


def _decode(x):
    if isinstance(x, list):
        return tuple(_decode(y) for y in x)
    if isinstance(x, dict):
        return Fraction(x["q"])
    return x


def _normalize_check(c: Check) -> Check:
    return Check(
        c.name,
        bool(c.passed),
        None if c.witness is None else _decode(_encode(c.witness)),
        None if c.residual is None else tuple(Fraction(a) for a in c.residual),
        c.detail,
    )


@dataclass(frozen=True)
class Report:
    """Outcome of one command: its checks, extra data and the derived status.

    ``data`` must be JSON-native (strings, numbers, booleans, lists, dicts);
    it is normalized through JSON on construction so that serialization is
    lossless.
    """

    command: str
    checks: tuple = ()
    data: dict = field(default_factory=dict)
    timing: float = 0.0
    status: str = ""

    def __post_init__(self):
        import json

        object.__setattr__(self, "checks", tuple(_normalize_check(c) for c in self.checks))
        object.__setattr__(self, "data", json.loads(json.dumps(self.data)))
        object.__setattr__(self, "timing", float(self.timing))
        if not self.status:
            object.__setattr__(self, "status", "pass" if all(c.passed for c in self.checks) else "fail")
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @classmethod
    def error(cls, command: str, message: str, timing: float = 0.0) -> "Report":
        return cls(command, (), {"error": message}, timing, "error")

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "status": self.status,
            "timing": self.timing,
            "checks": [
                {
                    "name": c.name,
                    "verdict": c.verdict,
                    "witness": None if c.witness is None else _encode(c.witness),
                    "residual": None if c.residual is None else [str(a) for a in c.residual],
                    "detail": c.detail,
                }
                for c in self.checks
            ],
            "data": self.data,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        checks = []
        for c in d["checks"]:
            if c["verdict"] not in ("pass", "fail"):
                raise ValueError(f"bad verdict {c['verdict']!r}")
            checks.append(Check(
                c["name"],
                c["verdict"] == "pass",
                None if c["witness"] is None else _decode(c["witness"]),
                None if c["residual"] is None else tuple(Fraction(a) for a in c["residual"]),
                c.get("detail", ""),
            ))
        return cls(d["command"], tuple(checks), d.get("data", {}), d["timing"], d["status"])
