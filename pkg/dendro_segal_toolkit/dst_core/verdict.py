"""
Outcome records.

CheckResult is what the predicate operations (``validate_*``, ``check_*``)
return: it is truthy iff the condition holds and carries the bounds it was
checked within. Verdict is one line of a suite report.
"""

import time
import traceback
import logging
from dataclasses import dataclass, asdict
from typing import Any, Callable, Dict, Optional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    scope: str = ""
    counterexample: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def ok(cls, scope: str = "") -> "CheckResult":
        return cls(True, scope)

    @classmethod
    def fail(cls, counterexample: str, scope: str = "") -> "CheckResult":
        return cls(False, scope, counterexample)


@dataclass
class Verdict:
    """Result of one named acceptance check."""

    check: str
    scope: str
    result: bool
    counterexample: Optional[str] = None
    wall_time: float = 0.0

    def __post_init__(self):
        if self.result and self.counterexample is not None:
            raise ValueError(f"Passing check '{self.check}' carries a counterexample")
        if not self.result and self.counterexample is None:
            raise ValueError(f"Failing check '{self.check}' has no counterexample")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def run_check(name: str, scope: str, check: Callable[[], Optional[str]]) -> Verdict:
    """
    Run a check callable and time it.

    The callable returns None on success or a counterexample description.
    An exception counts as a failure and its message becomes the trace.
    """
    started = time.perf_counter()
    try:
        counterexample = check()
    except Exception as e:
        logger.debug(traceback.format_exc())
        counterexample = f"{type(e).__name__}: {e}"
    elapsed = time.perf_counter() - started
    if counterexample is not None:
        logger.warning(f"Check {name} failed: {counterexample}")
    return Verdict(
        check=name,
        scope=scope,
        result=counterexample is None,
        counterexample=counterexample,
        wall_time=round(elapsed, 4),
    )
