from pathlib import Path


def ensure_dir(path: str | Path) -> Path:
    """Create the directory (and parents) if missing and return it as a Path."""
    directory = Path(path)
    directory.mkdir(parents=True, exist_ok=True)
    return directory


def sorted_files(directory: str | Path, suffix: str) -> list[Path]:
    """Files in ``directory`` with the given suffix, in name order."""
    return sorted(path for path in Path(directory).iterdir() if path.is_file() and path.suffix.lower() == suffix)
