"""Set-orbit counts of permutation groups, with exact Burnside arithmetic."""

from pathlib import Path

from ._setorbits import (
    Groups,
    InconsistencyError,
    limit_enclosure,
    partitions,
    sequence,
    verify_paper,
)

_here = Path(__file__).resolve().parent


def data_dir() -> Path:
    """Directory holding catalog.txt, table3.txt and the M12 orbit fixtures."""
    installed = _here / "data"
    if (installed / "catalog.txt").exists():
        return installed
    return _here.parents[1] / "data"


def load(catalog=None) -> Groups:
    return Groups(Path(catalog) if catalog else data_dir() / "catalog.txt")


__all__ = [
    "Groups",
    "InconsistencyError",
    "data_dir",
    "limit_enclosure",
    "load",
    "partitions",
    "sequence",
    "verify_paper",
]
