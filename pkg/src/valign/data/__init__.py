"""Bundled sample inputs: scenarios, plans, polls, ballots, and arguments."""

from importlib.resources import files
from pathlib import Path

from ..errors import InputError


def bundled(name: str) -> Path:
    """Filesystem path of a bundled sample file."""
    resource = files(__package__).joinpath(name)
    if not resource.is_file():
        raise InputError(f"no bundled sample named {name!r}")
    return Path(str(resource))
