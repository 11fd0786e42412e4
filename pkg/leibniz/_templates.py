import typing

import jinja2
from jinja2 import sandbox


_TEMPLATES = {
    'report': """\
{{ report.kind }}: {{ 'valid' if report.succeeded else 'INVALID' }}
{% for name, value in report.flags.items() %}
  {{ name.ljust(width) }}  {{ value | flag }}\
{% if name in report.informational %}  (informational){% endif %}

{% endfor %}
{% if report.note %}
note: {{ report.note }}
{% endif %}
""",
    'isomorphism': """\
{{ title }}: verified
{% for name, value in maps.items() %}
{{ name }}:
{{ value | matrix }}
{% endfor %}
""",
    'vector': """\
{{ value | vector }}
""",
    'names': """\
{% for name in names %}
{{ name }}
{% endfor %}
""",
}


class Environment(sandbox.SandboxedEnvironment):
    """A templating environment for human-readable output."""

    def __init__(self):
        super().__init__(autoescape=False,
                         loader=jinja2.DictLoader(_TEMPLATES),
                         trim_blocks=True,
                         keep_trailing_newline=True,
                         undefined=jinja2.StrictUndefined)

    def render(self, name: str, **context: typing.Any) -> str:
        """Render a named template."""
        if name == 'report':
            flags = context['report'].flags
            context.setdefault('width', max(map(len, flags), default=0))
        return self.get_template(name).render(**context)
