import logging
from typing import Any

from django.conf import settings
from django.template import TemplateDoesNotExist
from django.template.loader import render_to_string

from .exceptions import RenderTemplateNotFoundError
from .types import RenderFormat

logger = logging.getLogger(__name__)


class RenderService:
    """
    Renders text artifacts (DOT graphs, reports) from templates.

    Usage:
        service = RenderService()
        dot = service.render(
            template_name="graph/crystal",
            fmt=RenderFormat.DOT,
            context={"nodes": nodes, "edges": edges},
        )
    """

    def __init__(self, project_name: str | None = None):
        self.project_name = project_name or getattr(settings, "MV_PROJECT_NAME", "mvpoly")

    def render(
        self,
        template_name: str,
        fmt: RenderFormat = RenderFormat.TEXT,
        context: dict[str, Any] | None = None,
    ) -> str:
        """
        Render a template to a string.

        Args:
            template_name: Template path without extension (e.g., "report/verify")
            fmt: Output format, which selects the template extension
            context: Template context variables

        Returns:
            The rendered text, always ending with a single newline

        Raises:
            RenderTemplateNotFoundError: If the template doesn't exist
        """
        template_path = f"render/{template_name}.{fmt.value}"
        full_context = self._build_context(context or {})
        try:
            text = render_to_string(template_path, full_context)
        except TemplateDoesNotExist:
            logger.error(f"Render template not found: {template_path}")
            raise RenderTemplateNotFoundError(
                f"Render template not found: {template_path}"
            )
        return self._normalize(text)

    def _build_context(self, context: dict[str, Any]) -> dict[str, Any]:
        """Build template context with default variables."""
        defaults = {
            "project_name": self.project_name,
        }
        return {**defaults, **context}

    @staticmethod
    def _normalize(text: str) -> str:
        """Drop blank lines left by template tags and end with one newline."""
        lines = [line.rstrip() for line in text.splitlines()]
        return "\n".join(line for line in lines if line) + "\n"


_default_service: RenderService | None = None


def get_render_service() -> RenderService:
    """Get or create the default render service instance."""
    global _default_service
    if _default_service is None:
        _default_service = RenderService()
    return _default_service


def render_artifact(
    template_name: str,
    context: dict[str, Any] | None = None,
    fmt: RenderFormat = RenderFormat.TEXT,
) -> str:
    """
    Convenience function to render a template using the default service.

    Example:
        from mvpoly.apps.core.render import render_artifact

        text = render_artifact("report/scan", {"summary": summary})
    """
    return get_render_service().render(
        template_name=template_name,
        fmt=fmt,
        context=context,
    )
