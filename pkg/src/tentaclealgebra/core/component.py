"""Base class for the computational engines registered on a workbench."""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional


class Component(ABC):
    """Base class for all engines.

    Every engine owns a configuration dictionary. ``defaults`` lists the keys
    an engine understands together with their default values; values passed in
    ``config`` override them.
    """

    defaults: Dict[str, Any] = {}

    def __init__(self, name: str, config: Optional[Dict[str, Any]] = None):
        """Initialize a component.

        Args:
            name: Unique identifier for the component
            config: Optional configuration dictionary
        """
        self.name = name
        self.config = dict(self.defaults)
        self.config.update(config or {})
        self._initialized = False
        self._enabled = True

    def setting(self, key: str, override: Any = None) -> Any:
        """Value of a configuration key, unless a per-call override is given."""
        if override is not None:
            return override
        return self.config.get(key, self.defaults.get(key))

    def initialize(self) -> bool:
        """Check the configuration and mark the component ready.

        Returns:
            True if the configuration is usable, False otherwise
        """
        self._initialized = self.validate()
        return self._initialized

    def validate(self) -> bool:
        """Validate component configuration.

        Returns:
            True if there are no configuration errors
        """
        return not self.config_errors()

    @abstractmethod
    def config_errors(self) -> List[str]:
        """Describe every problem with the current configuration.

        Returns:
            List of human-readable error messages (empty when valid)
        """

    def get_status(self) -> Dict[str, Any]:
        """Get current status of the component.

        Returns:
            Dictionary containing status information
        """
        return {
            "name": self.name,
            "type": self.__class__.__name__,
            "enabled": self._enabled,
            "initialized": self._initialized,
            "config": dict(self.config),
            "errors": self.config_errors(),
        }

    def enable(self) -> None:
        """Enable this component."""
        self._enabled = True

    def disable(self) -> None:
        """Disable this component."""
        self._enabled = False

    def is_enabled(self) -> bool:
        return self._enabled

    def is_initialized(self) -> bool:
        return self._initialized

    def cleanup(self) -> None:
        """Release cached state. Engines holding caches override this."""

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self.name}, enabled={self._enabled})"


def positive_int_errors(config: Dict[str, Any], *keys: str) -> List[str]:
    """Error messages for every key whose value is not a positive integer."""
    errors = []
    for key in keys:
        value = config.get(key)
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            errors.append(f"{key} must be a positive integer, got {value!r}")
    return errors
