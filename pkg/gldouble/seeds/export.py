"""DOT and JSON renderings of quivers."""
from gldouble.seeds.quiver import Quiver

KIND_SHAPES = {"mutable": "ellipse", "stable": "box", "isolated": "box"}


def to_dot(quiver: Quiver, name: str = "Q") -> str:
    """One node per vertex, one edge line per unit of multiplicity."""
    dot = f"digraph {name} {{\n"
    for v in quiver.vertices:
        shape = "hexagon" if v.special else KIND_SHAPES[v.kind]
        attrs = f'shape={shape}, label="{v.label}"'
        if v.special:
            attrs += f', xlabel="d={v.order}"'
        if v.kind == "isolated":
            attrs += ", style=dashed"
        dot += f"    {v.label} [{attrs}];\n"
    for source, target, multiplicity in quiver.arrows():
        for _ in range(multiplicity):
            dot += f"    {source} -> {target};\n"
    dot += "}\n"
    return dot


def to_json(quiver: Quiver) -> dict:
    return {
        "vertices": [{"label": v.label, "kind": v.kind, "order": v.order} for v in quiver.vertices],
        "arrows": [{"source": s, "target": t, "multiplicity": m} for s, t, m in quiver.arrows()],
        "counts": {
            "vertices": len(quiver.labels),
            "mutable": len(quiver.mutable),
            "stable": len(quiver.stable),
            "isolated": len(quiver.isolated),
            "arrows": quiver.arrow_count,
        },
    }
