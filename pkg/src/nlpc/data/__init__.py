"""Bundled sample audio so every experiment runs offline."""

from importlib import resources
from pathlib import Path

SAMPLE_FILENAME = "sample.wav"


def sample_path() -> Path:
    """Filesystem path of the bundled speech-like WAV."""
    return Path(resources.files(__package__) / SAMPLE_FILENAME)
