"""Workbench: the set of configured engines a session computes with."""
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .component import Component

logger = logging.getLogger(__name__)

CONFIG_FILENAME = "tentacle.yaml"


def default_components(
    overrides: Optional[Dict[str, Dict[str, Any]]] = None
) -> Dict[str, Component]:
    """One instance of every engine, configured from ``overrides[name]``."""
    from ..cones.basis import ConeBasisSolver
    from ..keyforms.lab import KeyFormLab
    from ..oracle.sampling import GrowthOracle
    from ..puiseux.expansion import PuiseuxExpander
    from ..semidegree.engine import SemidegreeEngine
    from ..witness.search import WitnessSearch

    overrides = overrides or {}
    components = [
        PuiseuxExpander(overrides.get("puiseux")),
        SemidegreeEngine(overrides.get("semidegree")),
        KeyFormLab(overrides.get("keyforms")),
        ConeBasisSolver(overrides.get("cones")),
        WitnessSearch(overrides.get("witness")),
        GrowthOracle(overrides.get("oracle")),
    ]
    return {component.name: component for component in components}


class Workbench:
    """Registry of engines with their configuration.

    The configuration lives in a YAML file with a ``project`` section and one
    ``components`` entry per engine.
    """

    def __init__(self, name: str, workbench_dir: Optional[Path] = None):
        """Create an empty workbench.

        Args:
            name: Workbench name
            workbench_dir: Directory holding the configuration file
        """
        self.name = name
        self.workbench_dir = workbench_dir or Path.cwd()
        self.components: Dict[str, Component] = {}
        self.metadata: Dict[str, Any] = {
            "name": name,
            "created_at": datetime.now().isoformat(),
            "version": "0.1.0",
        }
        self._initialized = False

    @classmethod
    def with_defaults(
        cls,
        name: str,
        workbench_dir: Optional[Path] = None,
        overrides: Optional[Dict[str, Dict[str, Any]]] = None,
    ) -> "Workbench":
        bench = cls(name, workbench_dir)
        for component in default_components(overrides).values():
            bench.add_component(component)
        return bench

    def add_component(self, component: Component) -> None:
        self.components[component.name] = component

    def remove_component(self, name: str) -> None:
        if name in self.components:
            self.components[name].cleanup()
            del self.components[name]

    def get_component(self, name: str) -> Optional[Component]:
        return self.components.get(name)

    def engine(self, name: str) -> Component:
        """The enabled engine called ``name``.

        Raises:
            KeyError: If it is missing or disabled
        """
        component = self.components.get(name)
        if component is None or not component.is_enabled():
            raise KeyError(f"engine {name!r} is not available on workbench {self.name!r}")
        return component

    def initialize(self) -> bool:
        """Initialize every component.

        Returns:
            True if every configuration is valid
        """
        if self._initialized:
            return True

        success = True
        for component in self.components.values():
            if not component.initialize():
                success = False
                logger.error(
                    "invalid configuration for %s: %s",
                    component.name,
                    "; ".join(component.config_errors()),
                )

        self._initialized = success
        return success

    def validate(self) -> Dict[str, bool]:
        return {name: component.validate() for name, component in self.components.items()}

    def get_status(self) -> Dict[str, Any]:
        """Workbench and component status.

        Returns:
            Dictionary with the workbench name, its initialization state,
            per-component status and metadata
        """
        return {
            "workbench": self.name,
            "initialized": self._initialized,
            "components": {
                name: component.get_status() for name, component in self.components.items()
            },
            "metadata": self.metadata,
        }

    def save_config(self, config_path: Optional[Path] = None) -> Path:
        """Write the configuration as YAML.

        Args:
            config_path: Target file, defaults to ``workbench_dir/tentacle.yaml``

        Returns:
            The path written
        """
        if config_path is None:
            config_path = self.workbench_dir / CONFIG_FILENAME

        config = {
            "project": {
                "name": self.name,
                "metadata": self.metadata,
            },
            "components": {
                name: {
                    "type": component.__class__.__name__,
                    "config": component.config,
                    "enabled": component.is_enabled(),
                }
                for name, component in self.components.items()
            },
        }

        config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(config_path, "w", encoding="utf-8") as f:
            yaml.dump(config, f, default_flow_style=False)
        return config_path

    @classmethod
    def load_config(cls, config_path: Path) -> "Workbench":
        """Rebuild a workbench from a YAML file written by ``save_config``.

        Unknown component names are ignored; missing ones get defaults.
        """
        with open(config_path, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f) or {}

        project_config = config.get("project", {})
        sections = config.get("components", {}) or {}
        overrides = {name: (section or {}).get("config", {}) for name, section in sections.items()}
        bench = cls.with_defaults(
            name=project_config.get("name", "unnamed"),
            workbench_dir=config_path.parent,
            overrides=overrides,
        )
        bench.metadata.update(project_config.get("metadata", {}))
        for name, section in sections.items():
            component = bench.get_component(name)
            if component is not None and not (section or {}).get("enabled", True):
                component.disable()
        return bench

    def cleanup(self) -> None:
        for component in self.components.values():
            component.cleanup()

    def __repr__(self) -> str:
        return f"Workbench(name={self.name}, components={len(self.components)})"
