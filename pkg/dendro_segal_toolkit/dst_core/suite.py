"""
Acceptance-suite runner.

Suite modules are sequenced by ModuleSequencer, initialized with their
merged configuration and executed one after another. Every module yields
named checks; the report is sorted by check name so that its order does not
depend on scheduling.
"""

import logging
import random
from abc import abstractmethod
from typing import Any, Callable, Dict, List, Optional, Tuple

from .module_sequencer import DSTModule, ModuleSequencer, ModuleState
from .verdict import Verdict, run_check

logger = logging.getLogger("dst.suite")

CheckSpec = Tuple[str, str, Callable[[], Optional[str]]]


class CheckModule(DSTModule):
    """A suite module whose execution is a list of named checks."""

    def initialize(self, config: Dict[str, Any]) -> None:
        self.config = dict(config)

    def bounds(self, context: Dict[str, Any], section: str) -> Any:
        """Bounds for ``section`` with this module's overrides applied."""
        value = context.get("bounds", {}).get(section, {})
        override = getattr(self, "config", {}).get("bounds", {}).get(section)
        if not isinstance(value, dict):
            return value if override is None else override
        merged = dict(value)
        if isinstance(override, dict):
            merged.update(override)
        return merged

    def rng(self, context: Dict[str, Any]) -> random.Random:
        return random.Random(f"{context.get('seed', 0)}:{self.name}")

    @abstractmethod
    def checks(self, context: Dict[str, Any]) -> List[CheckSpec]:
        """Named check callables returning None or a counterexample."""
        pass

    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        verdicts = [run_check(name, scope, fn) for name, scope, fn in self.checks(context)]
        return {
            "module_name": self.name,
            "version": self.version,
            "verdicts": verdicts,
            "success": all(v.result for v in verdicts),
        }


def run_suite(
    module_config: Dict[str, Any],
    context: Dict[str, Any],
    user_config: Optional[Dict[str, Any]] = None,
    cli_overrides: Optional[Dict[str, bool]] = None,
) -> Tuple[List[Verdict], List[str]]:
    """
    Discover, sequence and run the suite modules.

    Returns:
        Tuple of (verdicts sorted by check name, sequencing errors)
    """
    sequencer = ModuleSequencer()
    sequencer.load_configurations(module_config, user_config)
    sequencer.discover_modules()
    resolutions, errors = sequencer.sequence_modules(cli_overrides)

    verdicts: List[Verdict] = []
    for resolution in resolutions:
        if resolution.state != ModuleState.ENABLED:
            errors.append(resolution.error_message or f"Module {resolution.name} failed")
            continue
        module = sequencer.get_module(resolution.name)
        logger.info(f"Running {resolution.name} v{resolution.version}")
        try:
            module.initialize(resolution.config)
            outcome = module.execute(dict(context))
            verdicts.extend(outcome.get("verdicts", []))
        except Exception as e:
            errors.append(f"Module {resolution.name} crashed: {e}")
            logger.error(f"Module {resolution.name} crashed: {e}")
        finally:
            module.cleanup()

    verdicts.sort(key=lambda v: v.check)
    return verdicts, errors
