"""Tabular results and their CSV serialization.

The CSV dialect is chosen for lossless, reproducible round-trips:
comma-separated, '.' decimal, floats rendered with Python's shortest
round-trip repr (up to 17 significant digits).  Layout:

    # lvbec <version>
    # spec-sha256: <hash of the sweep spec, when known>
    # generated: <timestamp>
    col_a,col_b,...
    # units: unit_a,unit_b,...
    <data rows>

Every line starting with '#' is a comment, so comment-aware CSV readers
see a plain header + data table.  Two runs of the same computation differ
only in the '# generated:' line; ``numeric_payload`` strips it for
byte-identity checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from datetime import datetime, timezone

from . import __version__

__all__ = ["CurveTable", "format_value"]


def format_value(v) -> str:
    """Shortest round-trip rendering; non-floats pass through as str."""
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        return repr(v)
    if isinstance(v, (int,)):
        return repr(v)
    return str(v)


@dataclass
class CurveTable:
    """Rectangular table of sampled curve values with a units row.

    rows hold floats (nan only in rows whose flag column says why) and
    short strings for flag columns.
    """

    columns: tuple[str, ...]
    units: tuple[str, ...]
    rows: list[tuple]
    spec_sha256: str | None = None
    provenance_extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.columns = tuple(self.columns)
        self.units = tuple(self.units)
        if len(self.units) != len(self.columns):
            raise ValueError(
                f"units row has {len(self.units)} entries for {len(self.columns)} columns"
            )
        for i, row in enumerate(self.rows):
            if len(row) != len(self.columns):
                raise ValueError(f"row {i} has {len(row)} fields, expected {len(self.columns)}")

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def to_csv(self) -> str:
        lines = [f"# lvbec {__version__}"]
        if self.spec_sha256:
            lines.append(f"# spec-sha256: {self.spec_sha256}")
        for key, val in sorted(self.provenance_extra.items()):
            lines.append(f"# {key}: {val}")
        lines.append(f"# generated: {datetime.now(timezone.utc).isoformat()}")
        lines.append(",".join(self.columns))
        lines.append("# units: " + ",".join(self.units))
        for row in self.rows:
            lines.append(",".join(format_value(v) for v in row))
        return "\n".join(lines) + "\n"

    def numeric_payload(self) -> str:
        """CSV text minus the timestamp line; identical across reruns."""
        return "\n".join(
            line for line in self.to_csv().splitlines()
            if not line.startswith("# generated:")
        ) + "\n"

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_csv())
