import enum
from dataclasses import dataclass
from typing import Any


class Outcome(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Result of a bounded search.

    ``certificate`` holds the witness for YES or the counterexample for NO;
    ``bound`` is the search window that was used.
    """

    outcome: Outcome
    certificate: Any = None
    bound: int | None = None

    @classmethod
    def yes(cls, certificate=None, bound=None):
        return cls(Outcome.YES, certificate, bound)

    @classmethod
    def no(cls, certificate=None, bound=None):
        return cls(Outcome.NO, certificate, bound)

    @classmethod
    def unknown(cls, bound):
        return cls(Outcome.UNKNOWN, None, bound)

    @property
    def is_yes(self) -> bool:
        return self.outcome is Outcome.YES

    @property
    def is_no(self) -> bool:
        return self.outcome is Outcome.NO

    @property
    def is_unknown(self) -> bool:
        return self.outcome is Outcome.UNKNOWN
