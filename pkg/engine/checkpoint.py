"""
JSONL checkpoints for the minimax search: one line per completed index.

    {"engine_version": "1.0.0", "i": 7, "n": 9, "status": "improved", "worst_case_or_bound": 29}

Statuses: improved (new best, exact value), exact (fully evaluated, no
improvement), pruned (reached the running bound, value is that bound),
lower_bound (budget ran out, value is the largest count seen).
"""
import json
import logging
import os
from dataclasses import dataclass

from engine import ENGINE_VERSION
from engine.errors import CheckpointError

logger = logging.getLogger(__name__)

STATUSES = ("improved", "exact", "pruned", "lower_bound")


@dataclass(frozen=True)
class CheckpointEntry:
    n: int
    i: int
    worst_case_or_bound: int
    status: str
    engine_version: str = ENGINE_VERSION

    def to_json(self):
        return json.dumps(
            {
                "engine_version": self.engine_version,
                "i": self.i,
                "n": self.n,
                "status": self.status,
                "worst_case_or_bound": self.worst_case_or_bound,
            },
            sort_keys=True,
        )


def read_checkpoint(path):
    """Entries in file order; a missing file reads as empty."""
    if not os.path.exists(path):
        return []
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
                entry = CheckpointEntry(
                    n=int(raw["n"]),
                    i=int(raw["i"]),
                    worst_case_or_bound=int(raw["worst_case_or_bound"]),
                    status=str(raw["status"]),
                    engine_version=str(raw["engine_version"]),
                )
            except (ValueError, KeyError, TypeError) as exc:
                raise CheckpointError(f"{path}:{lineno}: unreadable checkpoint line") from exc
            if entry.status not in STATUSES:
                raise CheckpointError(f"{path}:{lineno}: unknown status {entry.status!r}")
            if entry.engine_version != ENGINE_VERSION:
                raise CheckpointError(
                    f"{path}:{lineno}: written by engine {entry.engine_version}, "
                    f"this is {ENGINE_VERSION}"
                )
            entries.append(entry)
    return entries


class CheckpointWriter:
    """Appends entries and flushes after each one."""

    def __init__(self, path, n, append=False):
        self.path = path
        self.n = n
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        self._fh = open(path, "a" if append else "w", encoding="utf-8")

    def write(self, i, value, status):
        entry = CheckpointEntry(n=self.n, i=i, worst_case_or_bound=value, status=status)
        self._fh.write(entry.to_json() + "\n")
        self._fh.flush()

    def close(self):
        self._fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
