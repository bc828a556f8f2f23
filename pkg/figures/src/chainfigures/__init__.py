"""Figure rendering for qdchain sweep CSVs."""

__version__ = "0.1.0"

from .render import FIGURE_IDS, Deformation, FigureSpec, SchemaError, load_rows, make_figure, render

__all__ = [
    "FIGURE_IDS",
    "Deformation",
    "FigureSpec",
    "SchemaError",
    "load_rows",
    "make_figure",
    "render",
]
