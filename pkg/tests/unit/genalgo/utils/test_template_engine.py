"""Unit tests for template_engine.py module.

Tests for the TemplateEngine class and the number filter.
"""

import pytest
from jinja2 import TemplateNotFound, UndefinedError

from genalgo.utils.template_engine import TemplateEngine, format_number


class TestFormatNumber:
    """Test class for format_number."""

    @pytest.mark.parametrize(
        "value, expected",
        [(22.0, "22"), (29, "29"), (0.127889597, "0.127889597"), (0.5, "0.5"), (1e-10, "0")],
    )
    def test_format(self, value, expected):
        assert format_number(value) == expected


class TestTemplateEngine:
    """Test class for the TemplateEngine."""

    def test_packaged_templates(self):
        engine = TemplateEngine()

        assert engine.templates_dir.name == "templates"
        assert engine.get_template("run_summary.j2") is not None

    def test_render_custom_template(self, tmp_path):
        """Test rendering from a custom directory.

        Given: A template using the num filter
        When: render_template is called with a context
        Then: It should substitute and format the values.
        """
        # Setup
        (tmp_path / "t.j2").write_text("best {{ value | num }}\n")
        engine = TemplateEngine(tmp_path)

        # Execute
        result = engine.render_template("t.j2", {"value": 22.0})

        # Assert
        assert result == "best 22\n"

    def test_missing_template(self, tmp_path):
        with pytest.raises(TemplateNotFound):
            TemplateEngine(tmp_path).get_template("absent.j2")

    def test_missing_context_key(self, tmp_path):
        (tmp_path / "t.j2").write_text("{{ absent }}")

        with pytest.raises(UndefinedError):
            TemplateEngine(tmp_path).render_template("t.j2", {})
