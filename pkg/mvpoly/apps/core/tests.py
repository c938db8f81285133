from django.test import SimpleTestCase

from mvpoly.apps.core.render import (
    RenderFormat,
    RenderService,
    RenderTemplateNotFoundError,
    get_render_service,
    render_artifact,
)


class RenderServiceTests(SimpleTestCase):
    """Test template rendering of text artifacts."""

    def test_footer_and_blank_lines(self):
        """Test that the base layout renders only the footer line."""
        self.assertEqual(RenderService(project_name="demo").render("base/base"), "-- demo\n")

    def test_missing_template(self):
        """Test RenderTemplateNotFoundError for an unknown template."""
        with self.assertRaises(RenderTemplateNotFoundError):
            RenderService().render("report/missing", fmt=RenderFormat.DOT)

    def test_default_service(self):
        """Test that render_artifact goes through the shared service."""
        self.assertIs(get_render_service(), get_render_service())
        self.assertEqual(render_artifact("base/base"), get_render_service().render("base/base"))
