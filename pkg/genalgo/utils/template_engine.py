"""Report rendering with Jinja2.

Console reports (worked-example reproduction, run summaries) are plain-text
Jinja2 templates shipped in ``genalgo/templates``.
"""

from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader, StrictUndefined, Template

from genalgo.utils.config import config_manager


def format_number(value: float, digits: int = 9) -> str:
    """Format a number compactly: integers without decimals, others to ``digits``."""
    value = float(value)
    if value.is_integer():
        return str(int(value))
    return f"{value:.{digits}f}".rstrip("0").rstrip(".")


class TemplateEngine:
    """Template rendering engine using Jinja2.

    Attributes:
        templates_dir: Directory the templates are loaded from.
        env (Environment): Jinja2 environment for template processing.
    """

    def __init__(self, templates_dir: str | Path | None = None) -> None:
        self.templates_dir = Path(templates_dir or config_manager.get("templates_dir"))
        self.env = Environment(
            loader=FileSystemLoader(self.templates_dir),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
            undefined=StrictUndefined,
        )
        self.env.filters["num"] = format_number

    def get_template(self, template_name: str) -> Template:
        """Get a Jinja2 template by name.

        Raises:
            TemplateNotFound: If the template doesn't exist.
        """
        return self.env.get_template(template_name)

    def render_template(self, template_name: str, context: dict[str, Any]) -> str:
        """Render a template with the provided context.

        Args:
            template_name: Name of the template file.
            context: Dictionary containing context data for template rendering.

        Returns:
            The rendered template as a string.

        Raises:
            TemplateNotFound: If the template doesn't exist.
            UndefinedError: If the template references a missing context key.
        """
        template = self.get_template(template_name)
        return template.render(**context)
