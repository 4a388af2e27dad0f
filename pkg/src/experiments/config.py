"""
Experiment configuration - pydantic model plus the `key = value` file loader
"""
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    ValidationInfo,
    field_validator,
    model_validator,
)

from config.settings import settings
from src.utils.errors import ConfigurationError
from src.utils.logger import app_logger

PATH_KEYS = ("dataset_path", "labels_path", "output_path")


def _split_list(value: Any) -> List[str]:
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return [str(item).strip() for item in value]


def _as_ints(value: Any) -> List[int]:
    if isinstance(value, (int, float)):
        return [int(value)]
    try:
        return [int(item) for item in _split_list(value)]
    except ValueError as e:
        raise ValueError(f"expected comma-separated integers, got {value!r}") from e


def _as_floats(value: Any) -> List[float]:
    if isinstance(value, (int, float)):
        return [float(value)]
    try:
        return [float(item) for item in _split_list(value)]
    except ValueError as e:
        raise ValueError(f"expected comma-separated numbers, got {value!r}") from e


class ExperimentConfig(BaseModel):
    """Protocol knobs for one experiment run"""
    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    dataset_path: Path
    labels_path: Path
    task: Literal["cluster", "classify"] = "classify"
    scheme: List[str] = Field(default_factory=lambda: ["binary"])
    framework: List[str] = Field(default_factory=lambda: ["zhou"])
    k_list: List[int] = Field(default_factory=lambda: list(settings.DEFAULT_K_LIST))
    cluster_k_list: Optional[List[int]] = None
    mu: float = Field(default=settings.DEFAULT_MU, gt=0)
    lam: float = Field(default=settings.DEFAULT_LAMBDA, gt=0, alias="lambda")
    llre_aggregator: str = "seed"
    sum_aggregator: str = "sum"
    folds: int = Field(default=settings.DEFAULT_FOLDS, ge=2)
    seed: int = settings.DEFAULT_SEED
    restarts: int = Field(default=settings.KMEANS_RESTARTS, ge=1)
    output_path: Optional[Path] = None
    dataset: Optional[str] = None
    mu_grid: Optional[List[float]] = None
    train_fraction: Optional[float] = Field(default=None, gt=0, lt=1)
    record_seconds: bool = False
    preset: Optional[str] = None

    @field_validator("scheme", mode="before")
    @classmethod
    def _expand_schemes(cls, value: Any) -> List[str]:
        names = _split_list(value)
        if names == ["all"]:
            return list(settings.SCHEMES)
        if names == ["paper"]:
            return list(settings.PAPER_SCHEMES)
        unknown = [name for name in names if not settings.validate_scheme(name)]
        if unknown or not names:
            raise ValueError(f"unknown weighting scheme(s) {unknown}; choose from {settings.SCHEMES}")
        return list(dict.fromkeys(settings.normalize_scheme(name) for name in names))

    @field_validator("framework", mode="before")
    @classmethod
    def _expand_frameworks(cls, value: Any) -> List[str]:
        names = [name.lower() for name in _split_list(value)]
        if names == ["all"]:
            return list(settings.FRAMEWORKS)
        unknown = [name for name in names if not settings.validate_framework(name)]
        if unknown or not names:
            raise ValueError(f"unsupported framework(s) {unknown}; choose from {settings.FRAMEWORKS}")
        return list(dict.fromkeys(names))

    @field_validator("llre_aggregator", "sum_aggregator")
    @classmethod
    def _known_aggregator(cls, value: str, info: ValidationInfo) -> str:
        if not settings.validate_aggregator(info.field_name, value):
            raise ValueError(
                f"unknown {info.field_name} '{value}'; choose from {settings.aggregators(info.field_name)}"
            )
        return value.strip().lower()

    @field_validator("k_list", "cluster_k_list", mode="before")
    @classmethod
    def _parse_ints(cls, value: Any) -> Optional[List[int]]:
        return None if value is None else _as_ints(value)

    @field_validator("mu_grid", mode="before")
    @classmethod
    def _parse_floats(cls, value: Any) -> Optional[List[float]]:
        return None if value is None else _as_floats(value)

    @field_validator("mu_grid")
    @classmethod
    def _positive_grid(cls, value: Optional[List[float]]) -> Optional[List[float]]:
        if value is not None and any(mu <= 0 for mu in value):
            raise ValueError(f"mu_grid values must be positive, got {value}")
        return value

    @model_validator(mode="after")
    def _files_exist(self) -> "ExperimentConfig":
        for key in ("dataset_path", "labels_path"):
            path = getattr(self, key)
            if not path.is_file():
                raise ValueError(f"{key} '{path}' does not exist")
        return self

    @property
    def dataset_name(self) -> str:
        return self.dataset or self.dataset_path.stem

    @property
    def task_k_list(self) -> List[int]:
        """Neighborhood sizes for the configured task"""
        if self.task == "cluster" and self.cluster_k_list:
            return list(self.cluster_k_list)
        return list(self.k_list)

    def replace(self, **changes) -> "ExperimentConfig":
        """Validated copy with some fields changed"""
        values = self.model_dump(by_alias=True)
        values.update({("lambda" if key == "lam" else key): value for key, value in changes.items()})
        return build_config(values)


def build_config(values: Dict[str, Any]) -> ExperimentConfig:
    """Validate raw values, converting pydantic errors to ConfigurationError"""
    try:
        return ExperimentConfig.model_validate(values)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or 'config'}: {err['msg']}"
            for err in e.errors()
        )
        raise ConfigurationError(f"invalid configuration: {problems}") from e


def _known_keys() -> set:
    keys = set(ExperimentConfig.model_fields)
    keys.discard("lam")
    keys.add("lambda")
    return keys


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, str]:
    """
    Parse `key = value` lines; `#` starts a comment

    Args:
        text: File contents
        source: Name used in error messages

    Returns:
        Raw string values by key
    """
    values: Dict[str, str] = {}
    known = _known_keys()
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" not in content:
            raise ConfigurationError(f"{source}, line {number}: expected 'key = value', got {content!r}")
        key, value = (part.strip() for part in content.split("=", 1))
        if key not in known:
            raise ConfigurationError(f"{source}, line {number}: unknown key '{key}'")
        if key in values:
            app_logger.warning(f"[CLI] {source}, line {number}: '{key}' set twice; last value wins")
        values[key] = value
    return values


def load_config(path=None, overrides: Optional[Dict[str, Any]] = None) -> ExperimentConfig:
    """
    Load an experiment configuration

    Preset values come first, then file keys, then non-None overrides (CLI flags).
    Relative paths in the file resolve against the file's directory.

    Args:
        path: Config file path, or None to use overrides only
        overrides: Values taking precedence over the file

    Returns:
        ExperimentConfig
    """
    values: Dict[str, Any] = {}
    if path is not None:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigurationError(f"cannot read config '{path}': {str(e)}") from e
        values = parse_config_text(text, source=str(path))
        for key in PATH_KEYS:
            if key in values and not Path(values[key]).is_absolute():
                values[key] = str(path.parent / values[key])

    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value

    preset_name = values.get("preset")
    if preset_name:
        preset = settings.get_preset(str(preset_name))
        if not preset:
            raise ConfigurationError(
                f"unknown preset '{preset_name}'; choose from {sorted(settings.DATASET_PRESETS)}"
            )
        values = {**preset, **values}
        values.setdefault("dataset", str(preset_name).lower())

    config = build_config(values)
    app_logger.debug(f"[CLI] configuration: {config.model_dump(mode='json', by_alias=True)}")
    return config
