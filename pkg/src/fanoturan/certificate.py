"""Machine-checkable run certificates and binary checkpoint files.

Every verification routine returns a Certificate whose JSON form has exactly
the keys claim, verdict, space, visited, witnesses, seed, elapsed_ms and
tool_version, in that order.  A passing certificate for an exhaustive claim
must have visited == space (pruned mass is charged where it is cut, so the
books always balance); a failing certificate must carry at least one witness.

Checkpoint files are a one byte format version followed by fixed-size frames
(frontier index, states accounted, survivors found), little endian.
"""

from __future__ import annotations

import json
import struct
import time
from dataclasses import dataclass, field
from typing import Any

from .errors import FormatError, ParameterError

PASS = "pass"
FAIL = "fail"

_FIELDS = ("claim", "verdict", "space", "visited", "witnesses", "seed", "elapsed_ms", "tool_version")


@dataclass
class Certificate:
    claim: str
    verdict: str
    space: int
    visited: int
    witnesses: list[Any] = field(default_factory=list)
    seed: int = 0
    elapsed_ms: int = 0
    tool_version: str = "0.1.0"

    def __post_init__(self) -> None:
        if self.verdict not in (PASS, FAIL):
            raise ParameterError(f"verdict must be {PASS!r} or {FAIL!r}, got {self.verdict!r}")
        if self.verdict == FAIL and not self.witnesses:
            raise ParameterError("failing certificate must carry at least one witness")
        if self.space < 0 or self.visited < 0:
            raise ParameterError("space and visited must be nonnegative")

    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json_dict(self) -> dict[str, Any]:
        return {name: getattr(self, name) for name in _FIELDS}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "Certificate":
        if not isinstance(d, dict) or set(d) != set(_FIELDS):
            raise FormatError(f"certificate object must have exactly the keys {list(_FIELDS)}")
        return cls(**{name: d[name] for name in _FIELDS})


class Stopwatch:
    """Wall-clock helper so every verifier stamps elapsed_ms the same way."""

    def __init__(self) -> None:
        self._t0 = time.monotonic()

    def elapsed_ms(self) -> int:
        return int((time.monotonic() - self._t0) * 1000)


# ---------------------------------------------------------------------------
# Checkpoints.
# ---------------------------------------------------------------------------

CHECKPOINT_VERSION = 1
_FRAME = struct.Struct("<QQQ")  # frontier index, states accounted, survivors


class CheckpointWriter:
    """Appends (frontier, accounted, found) frames at a configurable stride."""

    def __init__(self, path: str, every: int = 10_000_000) -> None:
        if every <= 0:
            raise ParameterError("checkpoint stride must be positive")
        self.path = path
        self.every = every
        self._next = every
        self._fh = open(path, "wb")
        self._fh.write(bytes([CHECKPOINT_VERSION]))

    def maybe_write(self, frontier: int, accounted: int, found: int) -> None:
        if accounted >= self._next:
            self.write(frontier, accounted, found)
            while self._next <= accounted:
                self._next += self.every

    def write(self, frontier: int, accounted: int, found: int) -> None:
        self._fh.write(_FRAME.pack(frontier, accounted, found))
        self._fh.flush()

    def close(self) -> None:
        self._fh.close()

    def __enter__(self) -> "CheckpointWriter":
        return self

    def __exit__(self, *exc: object) -> None:
        self.close()


def read_checkpoint(path: str) -> list[tuple[int, int, int]]:
    """All frames of a checkpoint file as (frontier, accounted, found)."""
    with open(path, "rb") as fh:
        blob = fh.read()
    if not blob or blob[0] != CHECKPOINT_VERSION:
        raise FormatError(f"unsupported checkpoint header in {path}")
    body = blob[1:]
    if len(body) % _FRAME.size:
        raise FormatError(f"truncated checkpoint frame in {path}")
    return [_FRAME.unpack_from(body, off) for off in range(0, len(body), _FRAME.size)]
