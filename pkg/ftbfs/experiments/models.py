"""Experiment row model and the fixed CSV schema."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..errors import InvalidParameterError

COLUMNS = [
    "family",
    "params",
    "n",
    "m",
    "sources",
    "built_edges",
    "approx_edges",
    "ratio",
    "bound",
    "forced_edges",
    "verified",
    "wall_ms",
]


def format_params(params: Dict[str, Any]) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def parse_params(text: str) -> Dict[str, str]:
    return dict(item.split("=", 1) for item in text.split() if "=" in item)


class ExperimentRow(BaseModel):
    """One (family, parameter value) cell of a sweep."""

    family: str = Field(..., description="Family name")
    params: str = Field("", description="Space-separated key=value generator parameters")
    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    sources: str = Field("", description="Space-separated source vertices")
    built_edges: int = Field(..., description="Size of the exact builder's structure", ge=0)
    approx_edges: Optional[int] = Field(None, description="Size of the approximation's structure")
    ratio: Optional[float] = Field(None, description="built_edges / approx_edges")
    bound: Optional[int] = Field(None, description="Analytic size bound, where one applies")
    forced_edges: Optional[int] = Field(
        None,
        description=(
            "Edges of the family's forced sets confirmed necessary, "
            "or all necessary edges for families without forced sets"
        ),
    )
    verified: bool = Field(..., description="Every built structure passed verify_ft")
    wall_ms: float = Field(..., description="Wall-clock time of the cell", ge=0.0)

    def to_csv(self) -> Dict[str, str]:
        data = self.model_dump()
        out = {}
        for key in COLUMNS:
            value = data[key]
            if value is None:
                out[key] = ""
            elif isinstance(value, bool):
                out[key] = "true" if value else "false"
            elif key == "ratio":
                out[key] = f"{value:.6f}"
            elif key == "wall_ms":
                out[key] = f"{value:.1f}"
            else:
                out[key] = str(value)
        return out

    @classmethod
    def from_csv(cls, record: Dict[str, str]) -> "ExperimentRow":
        data: Dict[str, Any] = {k: (v if v != "" else None) for k, v in record.items()}
        data["verified"] = str(record.get("verified", "")).lower() == "true"
        data["params"] = record.get("params", "")
        data["sources"] = record.get("sources", "")
        return cls(**data)

    def param(self, key: str) -> Optional[str]:
        return parse_params(self.params).get(key)


def value_range(text: str) -> List[int]:
    """Parse LO:HI (inclusive) or LO:HI:STEP."""
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise InvalidParameterError(f"range must be LO:HI or LO:HI:STEP, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
        step = int(parts[2]) if len(parts) == 3 else 1
    except ValueError:
        raise InvalidParameterError(f"range bounds must be integers, got {text!r}")
    if step < 1 or hi < lo:
        raise InvalidParameterError(f"empty or backwards range {text!r}")
    return list(range(lo, hi + 1, step))
