"""Tests for core components."""
import pytest
from pathlib import Path
from tentaclealgebra.core.component import Component, positive_int_errors
from tentaclealgebra.core.workbench import CONFIG_FILENAME, Workbench


class MockComponent(Component):
    """Mock component for testing."""

    defaults = {"limit": 4}

    def config_errors(self):
        return positive_int_errors(self.config, "limit")


def test_component_creation():
    """Test component creation and initialization."""
    comp = MockComponent("test_component", {"key": "value"})
    assert comp.name == "test_component"
    assert comp.config["key"] == "value"
    assert comp.config["limit"] == 4
    assert not comp.is_initialized()
    assert comp.is_enabled()


def test_component_initialization():
    """Test component initialization."""
    comp = MockComponent("test")
    assert comp.initialize()
    assert comp.is_initialized()


def test_component_invalid_config():
    """Test that a bad setting fails initialization with a message."""
    comp = MockComponent("test", {"limit": 0})
    assert not comp.initialize()
    assert comp.config_errors() == ["limit must be a positive integer, got 0"]


def test_component_setting_override():
    """Test per-call overrides of configured settings."""
    comp = MockComponent("test", {"limit": 7})
    assert comp.setting("limit") == 7
    assert comp.setting("limit", 2) == 2


def test_component_enable_disable():
    """Test component enable/disable."""
    comp = MockComponent("test")
    comp.initialize()

    assert comp.is_enabled()
    comp.disable()
    assert not comp.is_enabled()
    comp.enable()
    assert comp.is_enabled()


def test_workbench_creation():
    """Test Workbench creation."""
    bench = Workbench("test-bench")
    assert bench.name == "test-bench"
    assert len(bench.components) == 0


def test_workbench_defaults():
    """Test that the default workbench registers every engine."""
    bench = Workbench.with_defaults("test-bench")
    assert set(bench.components) == {
        "puiseux",
        "semidegree",
        "keyforms",
        "cones",
        "witness",
        "oracle",
    }
    assert bench.initialize()


def test_workbench_add_remove_component():
    """Test adding and removing components."""
    bench = Workbench("test-bench")
    comp1 = MockComponent("comp1")
    comp2 = MockComponent("comp2")

    bench.add_component(comp1)
    bench.add_component(comp2)
    assert bench.get_component("comp1") == comp1

    bench.remove_component("comp1")
    assert len(bench.components) == 1
    assert bench.get_component("comp1") is None


def test_workbench_engine_disabled():
    """Test that a disabled engine is not handed out."""
    bench = Workbench.with_defaults("test-bench")
    bench.get_component("oracle").disable()
    with pytest.raises(KeyError):
        bench.engine("oracle")
    assert bench.engine("cones").name == "cones"


def test_workbench_initialization_failure():
    """Test that one invalid component fails initialization."""
    bench = Workbench.with_defaults("test-bench", overrides={"cones": {"search_bound": -1}})
    assert not bench.initialize()
    results = bench.validate()
    assert not results["cones"]
    assert results["puiseux"]


def test_workbench_status():
    """Test workbench status reporting."""
    bench = Workbench("test-bench")
    bench.add_component(MockComponent("comp"))
    bench.initialize()

    status = bench.get_status()
    assert status["workbench"] == "test-bench"
    assert status["initialized"]
    assert status["components"]["comp"]["config"] == {"limit": 4}


def test_workbench_config_save_load(tmp_path):
    """Test saving and loading workbench configuration."""
    config_path = tmp_path / CONFIG_FILENAME

    bench = Workbench.with_defaults("test-bench", tmp_path, {"oracle": {"seed": 11}})
    bench.get_component("witness").disable()
    assert bench.save_config() == config_path
    assert config_path.exists()

    loaded = Workbench.load_config(config_path)
    assert loaded.name == "test-bench"
    assert loaded.workbench_dir == tmp_path
    assert loaded.get_component("oracle").config["seed"] == 11
    assert not loaded.get_component("witness").is_enabled()
    assert loaded.get_component("cones").is_enabled()


def test_workbench_load_missing_sections(tmp_path):
    """Test that components missing from the file get defaults."""
    config_path = tmp_path / "partial.yaml"
    config_path.write_text("project:\n  name: partial\n", encoding="utf-8")
    loaded = Workbench.load_config(config_path)
    assert loaded.name == "partial"
    assert loaded.get_component("keyforms").config["max_forms"] == 16


def test_workbench_cleanup():
    """Test workbench cleanup."""
    bench = Workbench.with_defaults("test-bench", Path("."))
    bench.initialize()

    # Should not raise any errors
    bench.cleanup()
