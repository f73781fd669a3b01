"""Run configuration with flag > environment > config file > default precedence."""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

from .errors import UsageError
from .intervention import InterventionPolicy
from .model import SymmetrizeRule

OUT_DIR_ENV = "COHORTNET_OUT_DIR"


@dataclass(frozen=True)
class RunConfig:
    high_t: float = 70.0
    low_t: float = 60.0
    k_max: int = 15
    bin_width: int = 5
    min_group: int = 1
    max_group: int = 18
    keep_low_subgroups: bool = True
    symmetrize: SymmetrizeRule = SymmetrizeRule.UNION
    out_dir: Path = Path("out")

    def __post_init__(self) -> None:
        if not self.low_t < self.high_t:
            raise UsageError(f"need low_t < high_t, got {self.low_t} >= {self.high_t}")
        if self.k_max < 2:
            raise UsageError(f"k_max must be >= 2, got {self.k_max}")
        if self.bin_width < 1:
            raise UsageError(f"bin_width must be >= 1, got {self.bin_width}")
        if not 1 <= self.min_group <= self.max_group:
            raise UsageError(
                f"need 1 <= min_group <= max_group, got {self.min_group}..{self.max_group}"
            )

    def policy(self) -> InterventionPolicy:
        return InterventionPolicy(
            high_t=self.high_t,
            low_t=self.low_t,
            min_group=self.min_group,
            max_group=self.max_group,
            keep_low_subgroups=self.keep_low_subgroups,
        )


_PARSERS = {
    "high_t": float,
    "low_t": float,
    "k_max": int,
    "bin_width": int,
    "min_group": int,
    "max_group": int,
    "keep_low_subgroups": lambda s: _parse_bool(s),
    "symmetrize": SymmetrizeRule,
    "out_dir": Path,
}


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def load_config_file(path: Path) -> dict[str, object]:
    """Parse a plain `key=value` file; `#` lines and blanks are skipped."""
    values: dict[str, object] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _PARSERS:
            raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
        try:
            values[key] = _PARSERS[key](value.strip())
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {exc}") from None
    return values


def build_config(
    file_values: dict[str, object],
    env_out_dir: str | None,
    flag_values: dict[str, object],
) -> RunConfig:
    """Merge the three layers; flags win, then the environment, then the file."""
    merged: dict[str, object] = {}
    merged.update(file_values)
    if env_out_dir:
        merged["out_dir"] = Path(env_out_dir)
    merged.update({k: v for k, v in flag_values.items() if v is not None})
    known = {f.name for f in fields(RunConfig)}
    assert set(merged) <= known, f"unexpected config keys: {set(merged) - known}"
    return RunConfig(**merged)  # type: ignore[arg-type]
