"""Shipped run configurations for the reference targets."""

from importlib import resources

from ..config import load_config

__all__ = ["NAMES", "config_text", "load"]

NAMES = ("x7", "x44", "x17", "x24", "x24-ambient", "quintic")


def config_text(name):
    if name not in NAMES:
        raise KeyError("unknown corpus target %r (have %s)" % (name, ", ".join(NAMES)))
    return resources.files(__name__).joinpath(name + ".json").read_text()


def load(name, **overrides):
    """RunConfig for a shipped target, with field overrides."""
    return load_config(config_text(name)).with_overrides(**overrides)
