"""Bundled tope sets: ``paper28`` (six elements, 28 topes) and ``hex``."""

from importlib.resources import files

from ..signs import ToposSet, parse_topes


def fixture_path(name: str):
    return files(__name__) / f"{name}.topes"


def load_fixture(name: str) -> ToposSet:
    return parse_topes(fixture_path(name).read_text(encoding="utf-8"))
