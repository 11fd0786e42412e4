"""Filters available in report templates.

.. code-block:: jinja

    {{ report.flags.leibniz_ok | flag }}
    {{ maps.theta | matrix }}
"""

import typing

try:
    import jmespath  # type: ignore
except ImportError:  # pragma: no cover
    jmespath = None


__all__ = ['flag', 'json_query', 'matrix', 'scalar', 'vector']


def scalar(value: typing.Any) -> str:
    """Canonical text of a scalar: ``n``, ``n/d`` or a residue."""
    return str(value)


def vector(value: typing.Sequence[typing.Any]) -> str:
    """A vector as ``(a, b, c)``."""
    return '(' + ', '.join(scalar(item) for item in value) + ')'


def matrix(value: typing.Sequence[typing.Sequence[typing.Any]],
           indent: int = 2) -> str:
    """A matrix as aligned rows, one per line.

    :param indent: Number of spaces before each row.
    """
    rows = [[scalar(item) for item in row] for row in value]
    if not rows or not rows[0]:
        return ' ' * indent + '[]'
    width = max(len(item) for row in rows for item in row)
    return '\n'.join(' ' * indent + '[ '
                     + '  '.join(item.rjust(width) for item in row) + ' ]'
                     for row in rows)


def flag(value: typing.Any) -> str:
    return 'yes' if value else 'NO'


def json_query(value: typing.Any, query: str) -> typing.Any:
    """Run a JSON query against the data.

    Requires the `jmespath <https://pypi.org/project/jmespath/>`_ library.
    See `jmespath examples <https://jmespath.org/examples.html>`_.
    """
    if jmespath is None:
        raise RuntimeError("Queries require the jmespath python package "
                           "to be installed")
    return jmespath.search(query, value)
