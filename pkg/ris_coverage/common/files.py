from os import PathLike
from pathlib import Path


def to_path(path_like: PathLike | str) -> Path:
    path = Path(path_like)
    if not path.is_absolute():
        path = Path.cwd() / path
    return path.resolve()


def save_text(text: str, file_path: Path) -> None:
    # write through a temporary sibling so readers never see a partial file
    file_path.parent.mkdir(parents=True, exist_ok=True)
    temp_path = file_path.with_name(file_path.name + ".tmp")
    try:
        with open(temp_path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        temp_path.replace(file_path)
    except Exception as err:
        if temp_path.exists():
            temp_path.unlink()
        raise err


def sibling_path(file_path: Path, tag: str) -> Path:
    """``out.csv`` -> ``out.<tag>.csv``."""
    return file_path.with_name(f"{file_path.stem}.{tag}{file_path.suffix or '.csv'}")
