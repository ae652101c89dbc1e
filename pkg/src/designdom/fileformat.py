"""Plain-text design files.

Format::

    # comment lines start with '#'; blank lines are ignored
    7 3 1          <- header: v k lambda
    1 2 3          <- one block per line, k 1-based point indices
    1 4 5
    ...

Repeated block lines are kept as separate blocks.
"""

from __future__ import annotations

from pathlib import Path

from .design import Design, validate_design
from .errors import DesignSyntaxError


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    col = 1
    for tok in line.split():
        col = line.index(tok, col - 1) + 1
        try:
            out.append(int(tok))
        except ValueError:
            raise DesignSyntaxError(f"expected an integer, found {tok!r}", lineno, col) from None
        col += len(tok)
    return out


def parse_design_file(text: str, name: str = "") -> Design:
    header = None
    blocks: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        nums = _ints(raw, lineno)
        if header is None:
            if len(nums) != 3:
                raise DesignSyntaxError("header must be 'v k lambda'", lineno)
            header = nums
            continue
        if len(nums) != header[1]:
            raise DesignSyntaxError(
                f"block line has {len(nums)} entries, header says k={header[1]}", lineno
            )
        for x in nums:
            if not 1 <= x <= header[0]:
                col = raw.index(str(x)) + 1
                raise DesignSyntaxError(f"point {x} outside 1..{header[0]}", lineno, col)
        blocks.append(nums)
    if header is None:
        raise DesignSyntaxError("missing 'v k lambda' header", 1)
    v, k, lam = header
    return validate_design(v, blocks, k, lam, one_based=True, name=name)


def load_design(path: str | Path) -> Design:
    p = Path(path)
    return parse_design_file(p.read_text(), name=p.stem)


def format_design(d: Design, comment: str | None = None) -> str:
    lines = []
    if comment is None and d.name:
        comment = d.name
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{d.v} {d.k} {d.lam}")
    for blk in d.sorted_blocks():
        lines.append(" ".join(str(x + 1) for x in blk))
    return "\n".join(lines) + "\n"
