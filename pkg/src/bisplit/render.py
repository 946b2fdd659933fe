"""SVG rendering of layout documents.

The drawing convention matches the interactive viewer: the top layer is the
left column (blue), the bottom layer the right column (red), edges are
straight lines between vertex centers, and vertices sit at uniform vertical
slots given by their order index.  Labels are truncated to 10 characters;
the full label, id and degree live in the hover title.  The document's
crossing count is printed in the top-left corner.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from bisplit.model import LayoutDocument

TOP_COLOR = "#2b6cb0"
BOTTOM_COLOR = "#c53030"
EDGE_COLOR = "#9aa2ad"
LABEL_LIMIT = 10


def _truncate(label: str) -> str:
    return label if len(label) <= LABEL_LIMIT else label[:LABEL_LIMIT]


def render_svg(
    doc: LayoutDocument,
    *,
    width: int = 900,
    row_gap: int = 26,
    margin: int = 48,
    radius: int = 5,
) -> str:
    """Render a layout document as a standalone SVG string."""
    graph = doc.graph
    n_rows = max(len(doc.order.top), len(doc.order.bottom), 1)
    height = 2 * margin + (n_rows - 1) * row_gap
    x_left = margin + 110
    x_right = width - margin - 110

    def y_at(index: int) -> int:
        return margin + index * row_gap

    top_y = {v: y_at(i) for i, v in enumerate(doc.order.top)}
    bottom_y = {v: y_at(i) for i, v in enumerate(doc.order.bottom)}

    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(width),
        "height": str(height),
        "viewBox": f"0 0 {width} {height}",
    })

    edges = ET.SubElement(svg, "g", {"class": "edges", "stroke": EDGE_COLOR,
                                     "stroke-width": "1"})
    for t, b in graph.edges:
        ET.SubElement(edges, "line", {
            "x1": str(x_left), "y1": str(top_y[t]),
            "x2": str(x_right), "y2": str(bottom_y[b]),
            "data-top": t, "data-bottom": b,
        })

    degree = {v: len(n) for v, n in graph.top_neighbors.items()}
    degree.update({v: len(n) for v, n in graph.bottom_neighbors.items()})

    def draw_column(ids, x, color, anchor, dx):
        group = ET.SubElement(svg, "g", {"class": "vertices"})
        ys = top_y if anchor == "end" else bottom_y
        for vid in ids:
            rec = graph.vertex_by_id[vid]
            node = ET.SubElement(group, "g", {"data-id": vid})
            title = ET.SubElement(node, "title")
            title.text = f"{rec.label} (id: {vid}, degree: {degree[vid]})"
            ET.SubElement(node, "circle", {
                "cx": str(x), "cy": str(ys[vid]), "r": str(radius), "fill": color,
            })
            text = ET.SubElement(node, "text", {
                "x": str(x + dx), "y": str(ys[vid] + 4),
                "text-anchor": anchor, "font-size": "12",
                "font-family": "sans-serif",
            })
            text.text = _truncate(rec.label)

    draw_column(doc.order.top, x_left, TOP_COLOR, "end", -12)
    draw_column(doc.order.bottom, x_right, BOTTOM_COLOR, "start", 12)

    note = ET.SubElement(svg, "text", {
        "class": "crossings", "x": str(margin), "y": str(margin - 24),
        "font-size": "13", "font-family": "sans-serif",
    })
    note.text = f"crossings: {doc.crossings}"

    return ET.tostring(svg, encoding="unicode")
