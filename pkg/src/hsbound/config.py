"""Run configuration shared by the estimator, the bound and the CLI."""

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional

from .errors import InvalidArgumentError, InvalidDimensionError

MODES = ("mean", "conservative")


@dataclass(frozen=True)
class RunConfig:
    d: int = 2
    samples_per_k: int = 10**7
    master_seed: int = 42
    chunk_size: int = 10**5
    confidence_level: float = 0.95
    mode: str = "mean"
    search_cap: float = 1e3
    curve_samples: int = 0
    output_path: Optional[str] = None
    # entries whose std_error / mean exceeds this get a warning in the table note
    rel_error_target: float = 0.5

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 1:
            raise InvalidDimensionError(f"d must be a positive integer, got {self.d!r}")
        if self.samples_per_k < 1:
            raise InvalidArgumentError("samples_per_k must be >= 1")
        if self.chunk_size < 1:
            raise InvalidArgumentError("chunk_size must be >= 1")
        if not 0.0 < self.confidence_level < 1.0:
            raise InvalidArgumentError("confidence_level must lie in (0, 1)")
        if self.mode not in MODES:
            raise InvalidArgumentError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.search_cap > 0:
            raise InvalidArgumentError("search_cap must be positive")
        if self.curve_samples < 0:
            raise InvalidArgumentError("curve_samples must be >= 0")
        if not self.rel_error_target > 0:
            raise InvalidArgumentError("rel_error_target must be positive")

    def echo(self):
        """Fields that determine the table contents (no output path)."""
        out = asdict(self)
        out.pop("output_path")
        return out

    @classmethod
    def field_names(cls):
        return [f.name for f in fields(cls)]

    @classmethod
    def from_sources(cls, file_path=None, **overrides):
        """Defaults, then a JSON config file, then non-None keyword overrides."""
        values = {}
        if file_path is not None:
            raw = json.loads(Path(file_path).read_text())
            if not isinstance(raw, dict):
                raise InvalidArgumentError("config file must hold a JSON object")
            unknown = set(raw) - set(cls.field_names())
            if unknown:
                raise InvalidArgumentError(f"unknown config keys: {sorted(unknown)}")
            values.update(raw)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
