"""Hasse diagrams: Graphviz DOT text and matplotlib figures."""
from __future__ import annotations

from typing import Callable, Sequence

from .order import covers, heights


def hasse_dot(elements: Sequence, leq: Callable, label: Callable = str, name: str = "hasse") -> str:
    """DOT source drawing only the cover relation, bottom to top."""
    ids = {x: f"n{i}" for i, x in enumerate(elements)}
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];", "  edge [arrowhead=none];"]
    for x in elements:
        text = label(x).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  {ids[x]} [label="{text}"];')
    for a, b in covers(elements, leq):
        lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def layered_positions(elements: Sequence, leq: Callable) -> dict:
    """x = slot within a height layer (centred), y = height."""
    h = heights(elements, leq)
    layers: dict[int, list] = {}
    for x in elements:
        layers.setdefault(h[x], []).append(x)
    pos = {}
    for level, xs in layers.items():
        for i, x in enumerate(xs):
            pos[x] = (i - (len(xs) - 1) / 2.0, float(level))
    return pos


def plot_hasse(elements: Sequence, leq: Callable, path, label: Callable = str, title: str | None = None):
    """Render the Hasse diagram to an image file (format from the suffix)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    pos = layered_positions(elements, leq)
    width = max(4.0, 1.6 * max((sum(1 for p in pos.values() if p[1] == y) for y in {p[1] for p in pos.values()}), default=1))
    height = max(3.0, 1.1 * (max((p[1] for p in pos.values()), default=0) + 1))
    fig, ax = plt.subplots(figsize=(width, height))
    for a, b in covers(elements, leq):
        (x0, y0), (x1, y1) = pos[a], pos[b]
        ax.plot([x0, x1], [y0, y1], color="0.4", lw=1, zorder=1)
    for x, (px, py) in pos.items():
        ax.text(px, py, label(x), ha="center", va="center", fontsize=9,
                bbox=dict(boxstyle="round,pad=0.25", fc="white", ec="0.3", lw=0.8), zorder=2)
    xs = [p[0] for p in pos.values()] or [0.0]
    ys = [p[1] for p in pos.values()] or [0.0]
    ax.set_xlim(min(xs) - 1, max(xs) + 1)
    ax.set_ylim(min(ys) - 0.6, max(ys) + 0.6)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
