"""Arc-diagram rendering: vertices on a baseline, edges as semicircles above.

Plain string assembly, no drawing dependency; the output is a standalone
SVG document.
"""

from __future__ import annotations

from .metrics import cost
from .trees import Arrangement, FreeTree, RootedTree

UNIT = 40.0  # horizontal distance between adjacent positions
MARGIN = 30.0
DOT_RADIUS = 5.0


def render_svg(
    tree: FreeTree | RootedTree,
    arr: Arrangement,
    *,
    root: int | None = None,
    labels: bool = True,
) -> str:
    """SVG arc diagram of an arrangement; the root, if given, is ring-marked."""
    n = tree.n
    if arr.n != n:
        raise ValueError(f"arrangement covers {arr.n} vertices, tree has {n}")
    if root is None and isinstance(tree, RootedTree):
        root = tree.root

    def x_of(position: int) -> float:
        return MARGIN + (position - 1) * UNIT

    max_span = max((abs(arr[u] - arr[v]) for u, v in tree.edges), default=0)
    baseline = MARGIN + max_span * UNIT / 2.0
    width = 2 * MARGIN + (n - 1) * UNIT
    height = baseline + MARGIN + (20.0 if labels else 0.0)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'  <line x1="{x_of(1):.1f}" y1="{baseline:.1f}" x2="{x_of(n):.1f}" '
        f'y2="{baseline:.1f}" stroke="#bbbbbb" stroke-width="1"/>',
    ]
    for u, v in tree.edges:
        left = x_of(min(arr[u], arr[v]))
        right = x_of(max(arr[u], arr[v]))
        radius = (right - left) / 2.0
        parts.append(
            f'  <path d="M {left:.1f} {baseline:.1f} A {radius:.1f} {radius:.1f} '
            f'0 0 1 {right:.1f} {baseline:.1f}" fill="none" stroke="#336699" '
            f'stroke-width="1.5"/>'
        )
    for vertex in range(1, n + 1):
        x = x_of(arr[vertex])
        if vertex == root:
            parts.append(
                f'  <circle cx="{x:.1f}" cy="{baseline:.1f}" r="{DOT_RADIUS + 3:.1f}" '
                f'fill="none" stroke="#cc3333" stroke-width="1.5"/>'
            )
        parts.append(
            f'  <circle cx="{x:.1f}" cy="{baseline:.1f}" r="{DOT_RADIUS:.1f}" '
            f'fill="#222222"/>'
        )
        if labels:
            parts.append(
                f'  <text x="{x:.1f}" y="{baseline + 18:.1f}" font-size="12" '
                f'text-anchor="middle" font-family="sans-serif">{vertex}</text>'
            )
    parts.append(
        f'  <text x="{MARGIN:.1f}" y="{16:.1f}" font-size="12" '
        f'font-family="sans-serif">D={cost(tree, arr)}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
