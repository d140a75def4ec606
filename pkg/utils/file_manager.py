# k3census/utils/file_manager.py
import io
import os
from typing import List

import pandas as pd


def ensure_folder(path: str):
    if path and not os.path.exists(path):
        os.makedirs(path, exist_ok=True)


def read_lines(path: str) -> List[str]:
    with open(path, "r", encoding="utf-8") as f:
        return f.read().splitlines()


def read_csv_frame(path: str, comment_prefix: str = "#") -> pd.DataFrame:
    """
    Read a catalog-style CSV keeping every field as a string. Lines starting
    with ``comment_prefix`` and blank lines are dropped before parsing; the
    prefix may still appear inside fields.
    """
    kept = [line for line in read_lines(path) if line.strip() and not line.lstrip().startswith(comment_prefix)]
    return pd.read_csv(
        io.StringIO("\n".join(kept) + "\n"),
        dtype=str,
        index_col=False,
        keep_default_na=False,
    )


def write_text_atomic(path: str, text: str):
    ensure_folder(os.path.dirname(path))
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    os.replace(tmp, path)
