"""
ModuleSequencer implementation for the acceptance suite.

Suite modules are discovered through entry points, ordered by their
dependencies and filtered by user preferences before the runner executes
them. Each module bundles the acceptance checks of one library package.
"""

import importlib
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Set, Tuple

try:
    from importlib.metadata import entry_points
except ImportError:  # pragma: no cover
    entry_points = None

from .exceptions import (
    CircularDependencyError,
    ModuleNotFoundError,
    MissingDependencyError,
)

ENTRY_POINT_GROUP = "dst.modules"

# Same registry as the entry points in pyproject.toml, for source checkouts.
BUILTIN_MODULES = {
    "Trees": "dendro_segal_toolkit.modules.trees:TreesModule",
    "TreeHom": "dendro_segal_toolkit.modules.tree_hom:TreeHomModule",
    "SimplexTargets": "dendro_segal_toolkit.modules.simplex_targets:SimplexTargetsModule",
    "Localization": "dendro_segal_toolkit.modules.localization:LocalizationModule",
    "Presheaves": "dendro_segal_toolkit.modules.presheaves:PresheavesModule",
    "Operads": "dendro_segal_toolkit.modules.operads:OperadsModule",
    "Equivalence": "dendro_segal_toolkit.modules.equivalence:EquivalenceModule",
}


class ModuleState(Enum):
    """Possible states for a module."""

    ENABLED = "enabled"
    DISABLED = "disabled"
    FAILED = "failed"
    PENDING = "pending"


@dataclass
class ModuleResolution:
    """Result of module resolution process."""

    name: str
    state: ModuleState
    version: str
    dependencies: List[str]
    init_order: int
    config: Dict[str, Any]
    error_message: Optional[str] = None


class DSTModule(ABC):
    """Base class for suite modules."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Module name identifier."""
        pass

    @property
    @abstractmethod
    def version(self) -> str:
        """Module version (semantic versioning)."""
        pass

    @property
    def dependencies(self) -> List[str]:
        """List of required module names."""
        return []

    @abstractmethod
    def initialize(self, config: Dict[str, Any]) -> None:
        """Initialize the module with configuration."""
        pass

    @abstractmethod
    def execute(self, context: Dict[str, Any]) -> Dict[str, Any]:
        """Run the module's checks; the result carries a "verdicts" list."""
        pass

    def cleanup(self) -> None:
        """Clean up module resources."""
        pass


def _load_object(spec: str):
    module_path, _, attribute = spec.partition(":")
    return getattr(importlib.import_module(module_path), attribute)


class ModuleSequencer:
    """
    Discovers suite modules and resolves their execution order.

    Order follows the dependency graph; ties keep the declaration order of
    the configuration so that reports are reproducible.
    """

    def __init__(self):
        self.available_modules: Dict[str, DSTModule] = {}
        self.dev_config: Dict[str, Any] = {}
        self.user_config: Dict[str, Any] = {}
        self.logger = logging.getLogger("dst.sequencer")

    def load_configurations(
        self, dev_config: Dict[str, Any], user_config: Optional[Dict[str, Any]] = None
    ) -> None:
        """Take the module section of the toolkit config and the user overrides."""
        self.dev_config = dev_config or {}
        self.user_config = user_config or {}
        if not self.user_config:
            self.logger.info("No user config found, using defaults")

    def discover_modules(self) -> None:
        """Discover available modules via entry points, or the built-in registry."""
        self.available_modules = {}
        candidates: List[Tuple[str, Any]] = []

        if entry_points is not None:
            try:
                eps = entry_points()
                group = (
                    eps.select(group=ENTRY_POINT_GROUP)
                    if hasattr(eps, "select")
                    else eps.get(ENTRY_POINT_GROUP, [])
                )
                candidates = [(ep.name, ep.load) for ep in group]
            except Exception as e:
                self.logger.error(f"Error during module discovery: {e}")

        if not candidates:
            self.logger.info("No installed entry points, using built-in module registry")
            candidates = [
                (name, (lambda spec=spec: _load_object(spec)))
                for name, spec in BUILTIN_MODULES.items()
            ]

        for entry_name, loader in candidates:
            try:
                module_instance = loader()()
                if not isinstance(module_instance, DSTModule):
                    self.logger.warning(f"Module {entry_name} does not inherit from DSTModule")
                    continue
                self.available_modules[module_instance.name] = module_instance
                self.logger.info(
                    f"Discovered module: {module_instance.name} v{module_instance.version}"
                )
            except Exception as e:
                self.logger.error(f"Failed to load module {entry_name}: {e}")

        self.logger.info(f"Discovered {len(self.available_modules)} modules")

    def _configured_names(self) -> List[str]:
        configured = [m["name"] for m in self.dev_config.get("modules", [])]
        if configured:
            return configured
        return list(self.available_modules)

    def _module_config(self, module_name: str) -> Dict[str, Any]:
        for config in self.dev_config.get("modules", []):
            if config["name"] == module_name:
                return config
        return {}

    def sequence_modules(
        self, cli_overrides: Optional[Dict[str, bool]] = None
    ) -> Tuple[List[ModuleResolution], List[str]]:
        """
        Sequence modules with dependency handling.

        Returns:
            Tuple of (resolved_modules, error_messages)
        """
        errors = []
        resolutions = []

        try:
            dep_graph = self._build_dependency_graph()
            self._detect_circular_dependencies(dep_graph)
            sorted_modules = self._topological_sort(dep_graph)
            final_modules = self._apply_user_preferences(sorted_modules, cli_overrides)
            resolutions = self._validate_final_config(final_modules)
        except (CircularDependencyError, MissingDependencyError) as e:
            errors.append(str(e))
            self.logger.error(f"Module sequencing failed: {e}")

        return resolutions, errors

    def _dependencies_of(self, module_name: str) -> Set[str]:
        deps = set(self._module_config(module_name).get("dependencies", []))
        if module_name in self.available_modules:
            deps.update(self.available_modules[module_name].dependencies)
        return deps

    def _build_dependency_graph(self) -> Dict[str, List[str]]:
        """Adjacency list: if A depends on B, then B -> A."""
        names = self._configured_names()
        graph: Dict[str, List[str]] = {name: [] for name in names}
        for name in names:
            for dep in sorted(self._dependencies_of(name)):
                if dep not in self.available_modules or dep not in graph:
                    raise MissingDependencyError(
                        f"Module '{name}' depends on missing module '{dep}'"
                    )
                graph[dep].append(name)
        return graph

    def _detect_circular_dependencies(self, graph: Dict[str, List[str]]) -> None:
        """Detect circular dependencies using DFS."""
        WHITE, GRAY, BLACK = 0, 1, 2
        colors = {node: WHITE for node in graph}

        def dfs(node: str, path: List[str]) -> None:
            if colors[node] == GRAY:
                cycle = path[path.index(node) :] + [node]
                raise CircularDependencyError(
                    f"Circular dependency detected: {' -> '.join(cycle)}"
                )
            if colors[node] == BLACK:
                return
            colors[node] = GRAY
            path.append(node)
            for neighbor in graph.get(node, []):
                dfs(neighbor, path.copy())
            colors[node] = BLACK

        for node in graph:
            if colors[node] == WHITE:
                dfs(node, [])

    def _topological_sort(self, graph: Dict[str, List[str]]) -> List[str]:
        """Kahn's algorithm, ties broken by declaration order."""
        in_degree = {node: 0 for node in graph}
        for node in graph:
            for neighbor in graph[node]:
                in_degree[neighbor] += 1

        order = {node: i for i, node in enumerate(graph)}
        queue = [node for node in graph if in_degree[node] == 0]
        result = []
        while queue:
            queue.sort(key=order.get)
            current = queue.pop(0)
            result.append(current)
            for neighbor in graph[current]:
                in_degree[neighbor] -= 1
                if in_degree[neighbor] == 0:
                    queue.append(neighbor)
        return result

    def _apply_user_preferences(
        self, sorted_modules: List[str], cli_overrides: Optional[Dict[str, bool]]
    ) -> List[str]:
        """Apply user preferences while respecting requirements."""
        enabled_modules = []
        user_enabled = set(self.user_config.get("enabledModules", []))
        user_disabled = set(self.user_config.get("disabledModules", []))
        cli_overrides = cli_overrides or {}

        for module_name in sorted_modules:
            is_required = self._module_config(module_name).get("required", False)
            state = determine_module_state(
                module_name, is_required, user_enabled, user_disabled, cli_overrides
            )
            if state == ModuleState.ENABLED:
                enabled_modules.append(module_name)
                if is_required and module_name in user_disabled:
                    self.logger.warning(
                        f"Ignoring user disable for required module: {module_name}"
                    )
        return enabled_modules

    def _validate_final_config(self, enabled_modules: List[str]) -> List[ModuleResolution]:
        """Create final module resolutions with merged configuration."""
        resolutions = []
        global_config = self.dev_config.get("global_config", {})

        for i, module_name in enumerate(enabled_modules):
            if module_name not in self.available_modules:
                resolutions.append(
                    ModuleResolution(
                        name=module_name,
                        state=ModuleState.FAILED,
                        version="unknown",
                        dependencies=[],
                        init_order=i,
                        config={},
                        error_message=f"Module '{module_name}' not found",
                    )
                )
                continue

            module = self.available_modules[module_name]
            module_config = dict(self._module_config(module_name).get("config", {}))
            module_config.update(
                self.user_config.get("moduleOverrides", {}).get(module_name, {})
            )
            resolutions.append(
                ModuleResolution(
                    name=module_name,
                    state=ModuleState.ENABLED,
                    version=module.version,
                    dependencies=sorted(self._dependencies_of(module_name)),
                    init_order=i,
                    config={**global_config, **module_config},
                )
            )

        return resolutions

    def get_module(self, name: str) -> DSTModule:
        try:
            return self.available_modules[name]
        except KeyError:
            raise ModuleNotFoundError(f"Module '{name}' not found") from None

    def get_module_status(self) -> Dict[str, Any]:
        """Current state of every configured or discovered module."""
        resolutions, errors = self.sequence_modules()
        status = {"modules": [], "total_enabled": 0, "total_failed": 0, "errors": errors}
        resolved = set()
        for resolution in resolutions:
            resolved.add(resolution.name)
            status["modules"].append(
                {
                    "name": resolution.name,
                    "state": resolution.state.value,
                    "version": resolution.version,
                    "dependencies": resolution.dependencies,
                    "init_order": resolution.init_order,
                    "error_message": resolution.error_message,
                }
            )
            if resolution.state == ModuleState.ENABLED:
                status["total_enabled"] += 1
            elif resolution.state == ModuleState.FAILED:
                status["total_failed"] += 1
        for name in self._configured_names():
            if name not in resolved:
                status["modules"].append(
                    {"name": name, "state": ModuleState.DISABLED.value, "init_order": -1}
                )
        return status


def determine_module_state(
    module_name: str,
    is_required: bool,
    user_enabled,
    user_disabled,
    cli_overrides: Optional[Dict[str, bool]] = None,
) -> ModuleState:
    """
    Determine final module state based on configuration hierarchy.

    Priority (High → Low):
    1. CLI selection (``--only``)
    2. Required status (cannot be disabled)
    3. User explicit enable/disable
    4. Default: enabled
    """
    cli_overrides = cli_overrides or {}

    if module_name in cli_overrides:
        return ModuleState.ENABLED if cli_overrides[module_name] else ModuleState.DISABLED
    if is_required:
        return ModuleState.ENABLED
    if module_name in user_disabled and module_name not in user_enabled:
        return ModuleState.DISABLED
    return ModuleState.ENABLED
