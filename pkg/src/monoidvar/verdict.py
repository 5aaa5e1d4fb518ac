from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Outcome(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Three-valued answer of a bounded procedure.

    A failing verdict always carries a replayable witness (an assignment,
    a word or an identity); an unknown one says which cap was hit.
    """

    outcome: Outcome
    witness: object = None
    reason: str = ""

    @classmethod
    def holds(cls, reason: str = "") -> "Verdict":
        return cls(Outcome.HOLDS, None, reason)

    @classmethod
    def fails(cls, witness, reason: str = "") -> "Verdict":
        if witness is None:
            raise ValueError("a failing verdict needs a witness")
        return cls(Outcome.FAILS, witness, reason)

    @classmethod
    def unknown(cls, reason: str) -> "Verdict":
        return cls(Outcome.UNKNOWN, None, reason)

    @property
    def is_holds(self):
        return self.outcome is Outcome.HOLDS

    @property
    def is_fails(self):
        return self.outcome is Outcome.FAILS

    @property
    def is_unknown(self):
        return self.outcome is Outcome.UNKNOWN

    @property
    def decisive(self):
        return self.outcome is not Outcome.UNKNOWN

    @property
    def exit_code(self) -> int:
        return {Outcome.HOLDS: 0, Outcome.FAILS: 1, Outcome.UNKNOWN: 2}[self.outcome]

    def __str__(self):
        out = self.outcome.value.upper()
        if self.witness is not None:
            out += f" witness: {self.witness}"
        if self.reason:
            out += f" ({self.reason})"
        return out


def conjoin(verdicts) -> Verdict:
    """Fails on the first failure; holds only if every part holds."""
    unknown = None
    for v in verdicts:
        if v.is_fails:
            return v
        if v.is_unknown and unknown is None:
            unknown = v
    return unknown if unknown is not None else Verdict.holds()
