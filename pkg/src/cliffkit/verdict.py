"""Pass/fail records for computational identity checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of one exact identity check.

    `lhs`/`rhs` carry printable dumps of both sides when the identity
    fails; on success they stay None.
    """

    identity: str
    holds: bool
    lhs: str | None = None
    rhs: str | None = None

    def to_json(self) -> dict:
        return {"identity": self.identity, "holds": self.holds, "lhs": self.lhs, "rhs": self.rhs}


def compare(identity: str, lhs, rhs) -> Verdict:
    """Build a verdict from two values supporting exact equality."""
    if lhs == rhs:
        return Verdict(identity, True)
    return Verdict(identity, False, lhs=str(lhs), rhs=str(rhs))


def merge(identity: str, verdicts: list[Verdict]) -> Verdict:
    """Combine sub-checks; the first failure is reported."""
    for v in verdicts:
        if not v.holds:
            return Verdict(identity, False, lhs=v.lhs, rhs=v.rhs)
    return Verdict(identity, True)
