"""Save the given table or text to the given path."""

import os
from typing import Optional

import pandas as pd


def save_text(path: str, text: str):
    """Write the given text to the given path, creating its directory.

    Parameters
    ----------
    path: str,
        Path where to save the text.
    text: str,
        Content of the file.
    """
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", newline="") as handle:
        handle.write(text)


def save_table(path: str, frame: pd.DataFrame, header: Optional[str] = None):
    """Save the given table as CSV to the given path.

    Parameters
    ----------
    path: str,
        Path where to save the table.
    frame: pd.DataFrame,
        Table to save.
    header: Optional[str] = None,
        Comment line written before the column names, without the leading '#'.
    """
    save_text(path, render_table(frame, header))


def render_table(frame: pd.DataFrame, header: Optional[str] = None) -> str:
    """Return the CSV text of the table, optionally preceded by a comment line."""
    text = frame.to_csv(index=False, lineterminator="\n")
    if header is not None:
        text = f"# {header}\n{text}"
    return text
