"""Link-graph figures: render a workspace's documents and links to a file.

Nodes sit on a circle in address order, so the same workspace always draws
the same picture. Unidirectional links get an arrowhead, bidirectional ones
a plain line; edges carry their link type as a label.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .workspace import Workspace, link_graph


def render_link_graph(ws: Workspace, path: str) -> None:
    doc_nodes, foreign, edges = link_graph(ws)
    names = doc_nodes + foreign
    fig, ax = plt.subplots(figsize=(7, 7))
    ax.set_aspect("equal")
    ax.axis("off")

    if not names:
        ax.text(0.5, 0.5, "empty workspace", ha="center", va="center",
                transform=ax.transAxes, color="gray")
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)
        return

    pos = {}
    for i, name in enumerate(names):
        angle = 2 * math.pi * i / len(names) + math.pi / 2
        pos[name] = (math.cos(angle), math.sin(angle))

    seen_pairs: dict[tuple[str, str], int] = {}
    for e in edges:
        tail, head = pos[e["tail"]], pos[e["head"]]
        count = seen_pairs.get((e["tail"], e["head"]), 0)
        seen_pairs[(e["tail"], e["head"])] = count + 1
        if e["tail"] == e["head"]:
            # a self link: a small loop beside the node
            x, y = tail
            loop = plt.Circle((x * 1.14, y * 1.14), 0.07, fill=False,
                              color="tab:gray", linewidth=1.0)
            ax.add_patch(loop)
            ax.annotate(e["label"], (x * 1.3, y * 1.3), fontsize=6,
                        ha="center", color="tab:gray")
            continue
        rad = 0.12 + 0.1 * count
        style = "-" if e["bidirectional"] else "-|>"
        arrow = FancyArrowPatch(tail, head, arrowstyle=style, mutation_scale=12,
                                connectionstyle=f"arc3,rad={rad}",
                                color="tab:blue" if not e["bidirectional"] else "tab:green",
                                linewidth=1.0, shrinkA=14, shrinkB=14)
        ax.add_patch(arrow)
        mx, my = (tail[0] + head[0]) / 2, (tail[1] + head[1]) / 2
        ax.annotate(e["label"], (mx + rad * (head[1] - tail[1]) / 2,
                                 my - rad * (head[0] - tail[0]) / 2),
                    fontsize=6, ha="center", color="dimgray")

    for name in names:
        x, y = pos[name]
        is_doc = name in doc_nodes
        ax.plot([x], [y], marker="o", markersize=26,
                color="lightsteelblue" if is_doc else "whitesmoke",
                markeredgecolor="steelblue" if is_doc else "silver")
        ax.annotate(name, (x, y), fontsize=7, ha="center", va="center")

    ax.set_xlim(-1.5, 1.5)
    ax.set_ylim(-1.5, 1.5)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
