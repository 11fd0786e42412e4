"""Named example structures.

Fixtures are addressed by names such as ``A2``, ``Ab(3)``,
``PairGpd(A2)`` or ``IdCover(PairGpd(A2))``; every fixture is validated
when it is built.

.. code-block:: python

    from leibniz import fixtures

    groupoid = fixtures.build('PairGpd(A2)').payload
"""

import re
import typing

from . import _action
from . import _algebra
from . import _covering
from . import _field
from . import _groupoid
from . import _types
from . import _xmod


__all__ = ['Fixture', 'a2', 'ab', 'aff2', 'build', 'canon_act', 'discrete',
           'fixtures', 'id_cover', 'id_x', 'one_obj', 'pair_gpd', 'self_ext']

_NAME_RE = re.compile(r'^([A-Za-z][A-Za-z0-9]*)(?:\((.*)\))?$')

STANDARD = ('Ab(1)', 'Ab(2)', 'A2', 'Aff2', 'SelfExt(A2)', 'SelfExt(Ab(2))',
            'IdX(A2)', 'PairGpd(A2)', 'OneObj(Ab(2))', 'Discrete(A2)',
            'IdCover(PairGpd(A2))', 'IdCover(OneObj(Ab(2)))',
            'CanonAct(PairGpd(A2))')
"""Names of the fixtures returned by :func:`fixtures`."""


class Fixture:
    """A named structure."""

    __slots__ = ('name', 'payload')

    name: str
    """The fixture name, e.g. ``PairGpd(A2)``."""

    payload: typing.Any
    """The structure itself."""

    def __init__(self, name: str, payload: typing.Any) -> None:
        self.name = name
        self.payload = payload

    def __repr__(self):
        return f"Fixture({self.name!r}, {self.payload!r})"


def ab(n: int, field: _field.FieldSpec) -> _algebra.LeibnizAlgebra:
    return _algebra.abelian(field, n)


def a2(field: _field.FieldSpec) -> _algebra.LeibnizAlgebra:
    """``[e1, e1] = e2``, all other brackets vanish."""
    return _algebra.LeibnizAlgebra.from_brackets(field, 2, {(0, 0): {1: 1}})


def aff2(field: _field.FieldSpec) -> _algebra.LeibnizAlgebra:
    """The non-abelian two-dimensional Lie algebra."""
    return _algebra.LeibnizAlgebra.from_brackets(
        field, 2, {(0, 1): {1: 1}, (1, 0): {1: -1}})


def self_ext(algebra: _algebra.LeibnizAlgebra) -> _action.SplitExtension:
    """``L x| L`` for the action of L on itself."""
    return _action.canonical_extension(_action.bracket_action(algebra))


def id_x(algebra: _algebra.LeibnizAlgebra) -> _xmod.CrossedModule:
    return _xmod.identity_xmod(algebra)


def pair_gpd(algebra: _algebra.LeibnizAlgebra) -> _groupoid.InternalGroupoid:
    return _groupoid.pair_groupoid(algebra)


def one_obj(algebra: _algebra.LeibnizAlgebra) -> _groupoid.InternalGroupoid:
    return _groupoid.one_object_groupoid(algebra)


def discrete(algebra: _algebra.LeibnizAlgebra) -> _groupoid.InternalGroupoid:
    return _groupoid.discrete_groupoid(algebra)


def id_cover(
        groupoid: _groupoid.InternalGroupoid) -> _groupoid.GroupoidMorphism:
    return _groupoid.GroupoidMorphism.identity(groupoid)


def canon_act(
        groupoid: _groupoid.InternalGroupoid) -> _covering.GroupoidAction:
    return _covering.canonical_action(groupoid)


_ON_ALGEBRAS = {
    'SelfExt': self_ext,
    'IdX': id_x,
    'PairGpd': pair_gpd,
    'OneObj': one_obj,
    'Discrete': discrete,
}

_ON_GROUPOIDS = {
    'IdCover': id_cover,
    'CanonAct': canon_act,
}

_VALIDATORS = {
    _action.SplitExtension: _action.validate_split_extension,
    _xmod.CrossedModule: _xmod.validate_xmod,
    _groupoid.InternalGroupoid: _groupoid.validate_groupoid,
    _groupoid.GroupoidMorphism: _groupoid.validate_gpd_morphism,
    _covering.GroupoidAction: _covering.validate_gpd_action,
}


def _build(name: str, field: _field.FieldSpec) -> typing.Any:
    match = _NAME_RE.match(name.strip())
    if match is None:
        raise _types.Error(f"Invalid fixture name {name}")
    head, argument = match.groups()

    if head == 'Ab':
        if argument is None or not argument.isdigit():
            raise _types.Error(f"Ab needs a dimension, got {name}")
        return ab(int(argument), field)
    elif head in ('A2', 'Aff2'):
        if argument is not None:
            raise _types.Error(f"{head} takes no argument")
        return a2(field) if head == 'A2' else aff2(field)

    if argument is None:
        raise _types.Error(f"Unknown fixture {name}")
    inner = _build(argument, field)
    if head in _ON_ALGEBRAS:
        if not isinstance(inner, _algebra.LeibnizAlgebra):
            raise _types.Error(f"{head} needs an algebra, got {argument}")
        return _ON_ALGEBRAS[head](inner)
    elif head in _ON_GROUPOIDS:
        if not isinstance(inner, _groupoid.InternalGroupoid):
            raise _types.Error(f"{head} needs a groupoid, got {argument}")
        return _ON_GROUPOIDS[head](inner)
    raise _types.Error(f"Unknown fixture {head}")


def build(name: str,
          field: typing.Optional[_field.FieldSpec] = None) -> Fixture:
    """Build and validate a fixture by name.

    :param name: Fixture name, e.g. ``OneObj(Ab(2))``.
    :param field: The ground field, the rationals by default.
    :raises: :class:`Error` on unknown names,
        :class:`InvalidStructure` if the result does not validate.
    """
    payload = _build(name, field or _field.FieldSpec.rational())
    validator = _VALIDATORS.get(type(payload))
    if validator is not None:
        report = validator(payload)
        if report.failed:
            raise _types.InvalidStructure(
                f"Fixture {name} does not validate", report=report)
    return Fixture(name, payload)


def fixtures(field: typing.Optional[_field.FieldSpec] = None
             ) -> typing.Dict[str, Fixture]:
    """All standard fixtures by name."""
    return {name: build(name, field) for name in STANDARD}
