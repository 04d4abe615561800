import json
import logging
from pathlib import Path
from typing import Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.errors import DocumentError
from src.harness.experiment import ExperimentConfig
from src.model.instance import ChannelSpec, DirectCapacities, Instance

logger = logging.getLogger(__name__)

Doc = TypeVar("Doc", bound=BaseModel)


# ======================================================
# INSTANCE DOCUMENT
# ======================================================

class InstanceFile(BaseModel):
    """
    {"K": 5, "t": 2, "T_lim": 10, "capacities": [...]}
    or {"K": ..., "t": ..., "T_lim": ..., "channels": [[re, im], ...], "P_T": ..., "N_0": ..., "log_base": 2}
    """

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    k: int = Field(alias="K", ge=2)
    t: int = Field(ge=1)
    t_lim: float = Field(alias="T_lim", ge=0)
    capacities: Optional[list[float]] = None
    channels: Optional[list[tuple[float, float]]] = None
    p_t: Optional[float] = Field(default=None, alias="P_T", gt=0)
    n_0: Optional[float] = Field(default=None, alias="N_0", gt=0)
    log_base: Optional[float] = Field(default=None, gt=0)
    m: Optional[float] = Field(default=None, alias="M", ge=0)
    n: Optional[int] = Field(default=None, alias="N", ge=1)

    @model_validator(mode="after")
    def _one_capacity_source(self) -> "InstanceFile":
        if (self.capacities is None) == (self.channels is None):
            raise ValueError("give exactly one of 'capacities' or 'channels'")
        if self.capacities is not None:
            if any(v is not None for v in (self.p_t, self.n_0, self.log_base)):
                raise ValueError("'P_T', 'N_0' and 'log_base' only apply to 'channels'")
            if len(self.capacities) != self.k:
                raise ValueError(f"'capacities' needs {self.k} entries, got {len(self.capacities)}")
        else:
            if self.p_t is None or self.n_0 is None:
                raise ValueError("'channels' requires 'P_T' and 'N_0'")
            if len(self.channels) != self.k:
                raise ValueError(f"'channels' needs {self.k} entries, got {len(self.channels)}")
        return self

    def to_instance(self) -> Instance:
        if self.capacities is not None:
            spec = DirectCapacities(tuple(self.capacities))
        else:
            spec = ChannelSpec(
                coefficients=tuple(complex(re, im) for re, im in self.channels),
                p_t=self.p_t,
                n_0=self.n_0,
                log_base=self.log_base if self.log_base is not None else 2.0,
            )
        return Instance(k=self.k, t=self.t, t_lim=self.t_lim, capacity_spec=spec, m=self.m, n=self.n)


# ======================================================
# LOADERS
# ======================================================

def _read_document(path: Path, model: Type[Doc]) -> Doc:
    path = Path(path)
    if not path.is_file():
        raise DocumentError(f"File not found: {path}")
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path} is not valid JSON: {e}")
    try:
        return model.model_validate(payload)
    except ValidationError as e:
        raise DocumentError(f"{path} failed validation:\n{e}")


def load_instance(path: Path) -> Instance:
    instance = _read_document(path, InstanceFile).to_instance()
    logger.info(f"loaded instance K={instance.k} t={instance.t} T_lim={instance.t_lim} from {path}")
    return instance


def load_experiment(path: Path) -> ExperimentConfig:
    config = _read_document(path, ExperimentConfig)
    logger.info(f"loaded experiment with {len(config.grid())} (K, t) cells from {path}")
    return config
