"""Outcome records for verification routines."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import VerificationFailure


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


@dataclass
class CheckResult:
    check: str
    block: str
    status: str = "pass"
    assertions: int = 0
    witness: object = None

    def to_json(self) -> dict:
        return {"check": self.check, "block": self.block, "status": self.status,
                "assertions": self.assertions, "witness": _plain(self.witness)}


class Checker:
    """Counts assertions for one named check; the first failure raises."""

    def __init__(self, check: str, block):
        self.result = CheckResult(check, str(block))

    def expect(self, ok: bool, **witness):
        self.result.assertions += 1
        if not ok:
            self.result.status = "fail"
            self.result.witness = witness
            raise VerificationFailure(self.result.check, {"block": self.result.block, **witness})

    def equal(self, actual, expected, **witness):
        self.expect(actual == expected, expected=expected, actual=actual, **witness)

    def done(self) -> CheckResult:
        return self.result
