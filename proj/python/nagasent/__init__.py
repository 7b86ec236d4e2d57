"""Sentiment polarity and emotion classification for Nagamese text."""

import os
from pathlib import Path

_DATA = Path(__file__).with_name("data")
if _DATA.is_dir():
    os.environ.setdefault("NAGASENT_DATA_DIR", str(_DATA))

from ._core import (  # noqa: E402
    ComputeError,
    Featurizer,
    InputError,
    Model,
    feature_names,
    generate_synthetic,
    metrics,
    normalize,
    run,
    tokenize,
    train_nb,
    train_svm,
)


def data_dir() -> Path:
    """Directory holding the bundled seed lexicon and intensity lists."""
    return Path(os.environ["NAGASENT_DATA_DIR"]) if "NAGASENT_DATA_DIR" in os.environ else _DATA


def default_featurizer() -> Featurizer:
    d = data_dir()
    return Featurizer(d / "seed_lexicon.tsv", d / "intensity_starter.tsv")


__all__ = [
    "ComputeError",
    "Featurizer",
    "InputError",
    "Model",
    "data_dir",
    "default_featurizer",
    "feature_names",
    "generate_synthetic",
    "metrics",
    "normalize",
    "run",
    "tokenize",
    "train_nb",
    "train_svm",
]
