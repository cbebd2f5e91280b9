"""YAML sidecar for generated instance metadata."""

from pathlib import Path
from typing import Union

import yaml
from pydantic import ValidationError

from .models import GeneratedInstance, InstanceMetadata


def write_metadata(instance: Union[GeneratedInstance, InstanceMetadata]) -> str:
    if isinstance(instance, GeneratedInstance):
        instance = instance.metadata()
    return yaml.dump(instance.model_dump(), default_flow_style=None, sort_keys=False)


def read_metadata(text: str) -> InstanceMetadata:
    try:
        data = yaml.safe_load(text) or {}
        return InstanceMetadata(**data)
    except yaml.YAMLError as e:
        raise ValueError(f"Invalid YAML in metadata: {e}")
    except (TypeError, ValidationError) as e:
        raise ValueError(f"Invalid metadata: {e}")


def save_metadata(instance: Union[GeneratedInstance, InstanceMetadata], path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(write_metadata(instance))


def load_metadata(path: Path) -> InstanceMetadata:
    return read_metadata(Path(path).read_text())
