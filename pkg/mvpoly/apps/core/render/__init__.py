from .exceptions import RenderError, RenderTemplateNotFoundError
from .service import RenderService, get_render_service, render_artifact
from .types import RenderFormat

__all__ = [
    "RenderService",
    "RenderFormat",
    "RenderError",
    "RenderTemplateNotFoundError",
    "render_artifact",
    "get_render_service",
]
