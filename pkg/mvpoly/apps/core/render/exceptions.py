class RenderError(Exception):
    """Base exception for rendering errors."""

    pass


class RenderTemplateNotFoundError(RenderError):
    """Raised when a render template cannot be found."""

    pass
