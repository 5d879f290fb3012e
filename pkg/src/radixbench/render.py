"""Plain-text rendering of response table blocks.

Every response model carries a list of TableBlock values; md and csv
renderers only look at those, so the CLI can print any response the
same way. JSON output comes straight from the pydantic model instead.
"""

from __future__ import annotations

import csv
import io
from typing import Iterable

from .service.schemas import TableBlock

__all__ = ["render_blocks_md", "render_blocks_csv"]


def _md_row(cells: Iterable[str]) -> str:
    return "| " + " | ".join(str(c) for c in cells) + " |"


def render_blocks_md(blocks: list[TableBlock]) -> str:
    """Render blocks as GitHub-style Markdown tables."""
    parts: list[str] = []
    for block in blocks:
        lines = [f"## {block.title}", ""]
        if block.headers:
            lines.append(_md_row(block.headers))
            lines.append(_md_row("---" for _ in block.headers))
        for row in block.rows:
            lines.append(_md_row(row))
        for note in block.notes:
            lines.append("")
            lines.append(f"note: {note}")
        parts.append("\n".join(lines))
    return "\n\n".join(parts) + "\n"


def render_blocks_csv(blocks: list[TableBlock]) -> str:
    """Render blocks as CSV with '#' comment lines for titles and notes."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    for i, block in enumerate(blocks):
        if i:
            out.write("\n")
        out.write(f"# {block.title}\n")
        if block.headers:
            writer.writerow(block.headers)
        for row in block.rows:
            writer.writerow(row)
        for note in block.notes:
            out.write(f"# note: {note}\n")
    return out.getvalue()
