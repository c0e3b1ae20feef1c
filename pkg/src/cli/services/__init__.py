from .pipeline import ToricPipeline
from .dot import render_dot

__all__ = ["ToricPipeline", "render_dot"]
