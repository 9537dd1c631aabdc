"""
JSON and Graphviz DOT renderings of quivers.

JSON is the pydantic dump of `Quiver`: nodes, edges with frozen flags and
superpotential terms whose coefficients are rational strings such as
``"-1"`` or ``"1/2"``. DOT draws framed nodes as boxes, gauge nodes as
circles labelled by rank, and frozen edges dashed.
"""
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from quiverdual.quiver.exceptions import QuiverDefinitionError
from quiverdual.quiver.models import NodeKind, Quiver


def quiver_to_json(quiver: Quiver) -> str:
    return quiver.to_json()


def quiver_from_json(text: str) -> Quiver:
    """
    Raises:
        QuiverDefinitionError: If ``text`` is not a valid quiver.
    """
    try:
        return Quiver.from_json(text)
    except ValidationError as e:
        raise QuiverDefinitionError(f"Invalid quiver JSON: {e}") from e


def load_quiver(file_path: Union[Path, str]) -> Quiver:
    return quiver_from_json(Path(file_path).read_text())


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(quiver: Quiver, name: str = "quiver") -> str:
    lines = [f"digraph {_quote(name)} {{"]
    for node in quiver.nodes:
        if node.kind is NodeKind.FRAMED:
            label = f"{node.label} ({node.rank})"
            shape = "box"
        else:
            label = str(node.rank)
            shape = "circle"
        lines.append(f"  {_quote(node.id)} [shape={shape}, label={_quote(label)}];")
    for edge in quiver.edges:
        style = ", style=dashed" if edge.frozen else ""
        lines.append(
            f"  {_quote(edge.src)} -> {_quote(edge.dst)} "
            f"[label={_quote(edge.id)}{style}];"
        )
    if quiver.superpotential:
        terms = " ".join(
            f"{'+' if term.coefficient >= 0 else '-'} {abs(term.coefficient)}*"
            f"tr({' '.join(term.cycle)})"
            for term in quiver.superpotential
        )
        lines.append(f"  label={_quote('W = ' + terms)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
