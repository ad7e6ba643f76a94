"""Deterministic JSON/CSV export and re-import of coloring tables.

All formatting is locale-independent and byte-exact across platforms: CSV is
plain comma-joined decimal integers with LF line endings, JSON uses sorted
keys and no trailing whitespace.
"""

from __future__ import annotations

import json
import sys
from typing import IO, Optional, Sequence

from .coloring import GroundSet
from .kneser import enumerate_vertices

CSV_HEADER = "vertex_index,mask,color_index"


def coloring_document(
    X: GroundSet, k: int, r: int, rows: Sequence[tuple[int, int]], distinct: int
) -> dict:
    masks = enumerate_vertices(X.n, k)
    return {
        "ground": X.to_json(),
        "k": k,
        "r": r,
        "distinct_colors": distinct,
        "rows": [[idx, masks[idx], color] for idx, color in rows],
    }


def write_json(doc: dict, out: IO[str]) -> None:
    json.dump(doc, out, sort_keys=True, separators=(",", ":"))
    out.write("\n")


def write_csv(doc: dict, out: IO[str]) -> None:
    out.write(CSV_HEADER + "\n")
    for idx, mask, color in doc["rows"]:
        out.write(f"{idx},{mask},{color}\n")


def export_coloring(
    X: GroundSet,
    k: int,
    r: int,
    rows: Sequence[tuple[int, int]],
    distinct: int,
    fmt: str = "json",
    path: Optional[str] = None,
) -> None:
    """Write the coloring table to path, or standard output when path is empty."""
    doc = coloring_document(X, k, r, rows, distinct)
    writer = write_json if fmt == "json" else write_csv
    if not path:
        writer(doc, sys.stdout)
        return
    try:
        with open(path, "w", newline="") as fh:
            writer(doc, fh)
    except OSError as exc:
        raise OSError(f"cannot write coloring to {path}: {exc}") from exc


def load_coloring_csv(path: str) -> tuple[list[int], list[int]]:
    """(masks, colors) in row order from an exported CSV."""
    masks, colors = [], []
    with open(path) as fh:
        header = fh.readline().strip()
        if header != CSV_HEADER:
            raise ValueError(f"{path}: unexpected header {header!r}")
        for line in fh:
            _, mask, color = line.strip().split(",")
            masks.append(int(mask))
            colors.append(int(color))
    return masks, colors
