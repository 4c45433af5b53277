"""Loaders for the bundled fixtures."""

from __future__ import annotations

from importlib.resources import files

from .netfile import parse_net, parse_polytope


def _read(name: str) -> str:
    return (files(__package__) / "fixtures" / name).read_text()


def load_net(name: str):
    """Bundled quotient graph by name (e.g. "wakatsuki", "dia", "z2")."""
    return parse_net(_read(f"{name}.net"))


def load_polytope(name: str):
    """Bundled polytope by name; returns (hull, name)."""
    return parse_polytope(_read(f"{name}.poly"))


def fixture_path(name: str):
    return files(__package__) / "fixtures" / name
