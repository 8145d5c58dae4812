"""Bundled 512x512 test images (from the scikit-image data collection)."""

from importlib import resources
from pathlib import Path

NAMES = ("astronaut", "camera", "moon", "brick")


def path(name: str) -> Path:
    for ext in (".ppm", ".pgm"):
        p = resources.files(__name__) / (name + ext)
        if p.is_file():
            return Path(str(p))
    raise KeyError(f"no bundled image named {name!r}")


def load(name: str):
    from ..io import load as _load

    return _load(path(name))
