"""
Text rendering of Hodge diamonds.

Row k of the picture holds h^{p,q} with p + q = k, h^{k,0} on the left,
the same layout as the usual printed diamond:

          1
        0   0
      1   20  1
        0   0
          1
"""

from ..core.hodge import HodgeDiamond


def diamond_rows(diamond: HodgeDiamond, hide_zeroes: bool = False) -> list[list[str]]:
    """Entries per row, top (k = 0) first, each row running h^{k,0} .. h^{0,k}."""
    n = diamond.dim
    rows = []
    for k in range(2 * n + 1):
        entries = []
        for p in range(min(k, n), max(0, k - n) - 1, -1):
            value = diamond[p, k - p]
            entries.append("" if hide_zeroes and value == 0 else str(value))
        rows.append(entries)
    return rows


def render_diamond(diamond: HodgeDiamond, hide_zeroes: bool = False) -> str:
    rows = diamond_rows(diamond, hide_zeroes)
    cell = max((len(e) for row in rows for e in row), default=1)
    cell = max(cell, 1)
    widest = max(len(row) for row in rows)
    lines = []
    for row in rows:
        indent = (widest - len(row)) * (cell + 1) // 2
        body = " ".join(e.center(cell) for e in row)
        lines.append((" " * indent + body).rstrip())
    return "\n".join(lines)
