"""Depth-based classification of functional data."""

from ._fastdd import (
    Dataset,
    DegenerateData,
    Error,
    IncompatibleModel,
    InvalidConfig,
    InvalidInput,
    Model,
    NoiseSpec,
    ParseError,
    SingularScatter,
    ValidationError,
    count_separations,
    depth,
    load_dataset,
    loo,
    ls_transform,
    model1,
    model2,
    train,
    vc_bound,
)

__all__ = [
    "Dataset",
    "DegenerateData",
    "Error",
    "IncompatibleModel",
    "InvalidConfig",
    "InvalidInput",
    "Model",
    "NoiseSpec",
    "ParseError",
    "SingularScatter",
    "ValidationError",
    "count_separations",
    "depth",
    "load_dataset",
    "loo",
    "ls_transform",
    "model1",
    "model2",
    "train",
    "vc_bound",
]
