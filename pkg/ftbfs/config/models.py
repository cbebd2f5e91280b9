"""Configuration models."""

from pydantic import BaseModel, Field


class ParallelConfig(BaseModel):
    """Worker pool configuration."""

    threads: int = Field(1, description="Worker processes; FTBFS_THREADS overrides", ge=1)


class OracleConfig(BaseModel):
    """Exhaustive search limits."""

    free_limit: int = Field(25, description="Largest free-edge count brute force accepts", ge=0)


class GeneratorDefaults(BaseModel):
    """Default generator parameters."""

    reduction_r: int = Field(2, description="Y-block size of reduction graphs", ge=1)
    lb_x_factor: int = Field(8, description="|X| = factor * d^2 for lower-bound graphs", ge=1)
    multi_sigma: int = Field(2, description="Copies in multi-source lower-bound graphs", ge=1)
    random_p: float = Field(0.3, description="Edge probability of random graphs", ge=0.0, le=1.0)
    seed: int = Field(0, description="Seed of random graphs", ge=0)


class ExperimentDefaults(BaseModel):
    """Experiment harness defaults."""

    workspace_root: str = Field("~/ftbfs-experiments", description="Root directory for outputs")
    save_stats: bool = Field(True, description="Write a JSON run record next to each CSV")


class ConfigModel(BaseModel):
    """Main configuration model."""

    parallel: ParallelConfig = Field(default_factory=ParallelConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    generators: GeneratorDefaults = Field(default_factory=GeneratorDefaults)
    experiments: ExperimentDefaults = Field(default_factory=ExperimentDefaults)
