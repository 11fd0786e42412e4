"""Crossed modules of Leibniz algebras and their morphisms."""

import itertools
import typing

from . import _action
from . import _algebra
from . import _field
from . import _linalg
from . import _report
from . import _types


Vector = _field.Vector

CONDITIONS = ('lxm1', 'lxm2')


class CrossedModule:
    """A crossed module ``d: L1 -> L0`` with an action of L0 on L1.

    :param boundary: The boundary morphism ``L1 -> L0``.
    :param action: An action whose actor is L0 and actee is L1.
    :raises: :class:`InvalidStructure` if the pieces do not fit together.
    """

    __slots__ = ('boundary', 'action')

    boundary: _algebra.LinearMorphism
    """The boundary map."""

    action: _action.LeibnizAction
    """The action of L0 on L1."""

    def __init__(self, boundary: _algebra.LinearMorphism,
                 action: _action.LeibnizAction) -> None:
        _field.check_same(boundary.field, action.field)
        if action.actor != boundary.target or action.actee != boundary.source:
            raise _types.InvalidStructure(
                "The action must be an action of the boundary target on the "
                "boundary source")
        self.boundary = boundary
        self.action = action

    @property
    def l1(self) -> _algebra.LeibnizAlgebra:
        return self.boundary.source

    @property
    def l0(self) -> _algebra.LeibnizAlgebra:
        return self.boundary.target

    @property
    def field(self) -> _field.FieldSpec:
        return self.boundary.field

    def __eq__(self, other):
        if not isinstance(other, CrossedModule):
            return NotImplemented
        return (self.boundary == other.boundary
                and self.action == other.action)

    def __hash__(self):
        return hash((self.boundary, self.action))

    def __repr__(self):
        return (f"CrossedModule({self.l1.dim} -> {self.l0.dim} "
                f"over {self.field})")


def condition_residuals(x: CrossedModule,
                        condition: str) -> typing.Iterator[Vector]:
    """Differences of both sides of LXM1 or LXM2 on basis pairs.

    For a fixed boundary both conditions are linear in the action.
    """
    d = x.boundary
    act = x.action
    l0_units, l1_units = x.l0.units(), x.l1.units()
    if condition == 'lxm1':
        for y, m in itertools.product(l0_units, l1_units):
            yield _linalg.sub(d(act.left(y, m)), x.l0.bracket(y, d(m)))
            yield _linalg.sub(d(act.right(m, y)), x.l0.bracket(d(m), y))
    elif condition == 'lxm2':
        for m, n in itertools.product(l1_units, repeat=2):
            yield _linalg.sub(act.right(m, d(n)), x.l1.bracket(m, n))
            yield _linalg.sub(act.left(d(n), m), x.l1.bracket(n, m))
    else:
        raise ValueError(f"Unknown crossed module condition {condition}")


def validate_xmod(x: CrossedModule) -> _report.Report:
    return _report.Report('xmod', {
        'morphism_ok': _algebra.check_morphism(x.boundary),
        'action_ok': bool(_action.validate_action(x.action)),
        'lxm1': all(not any(r) for r in condition_residuals(x, 'lxm1')),
        'lxm2': all(not any(r) for r in condition_residuals(x, 'lxm2')),
    })


def require_xmod(x: CrossedModule) -> None:
    """:raises: :class:`InvalidStructure` unless ``x`` is valid."""
    validate_xmod(x).require('crossed module')


def kernel_of_boundary(
        x: CrossedModule) -> typing.Tuple[_linalg.Subspace, bool]:
    """``ker d`` and whether all brackets of its basis vectors vanish."""
    kernel, _image = _linalg.kernel_image(x.boundary.matrix)
    abelian = all(not any(x.l1.bracket(u, v))
                  for u, v in itertools.product(kernel.basis, repeat=2))
    return kernel, abelian


def identity_xmod(algebra: _algebra.LeibnizAlgebra) -> CrossedModule:
    """``(L, L, id)`` with the bracket action."""
    return CrossedModule(_algebra.LinearMorphism.identity(algebra),
                         _action.bracket_action(algebra))


def zero_xmod(field: _field.FieldSpec) -> CrossedModule:
    zero = _algebra.abelian(field, 0)
    return CrossedModule(_algebra.LinearMorphism.identity(zero),
                         _action.trivial_action(zero, zero))


def trivial_xmod(l1: _algebra.LeibnizAlgebra,
                 l0: _algebra.LeibnizAlgebra) -> CrossedModule:
    """``(L1, L0, 0)`` with the trivial action; valid iff L1 is abelian."""
    return CrossedModule(_algebra.LinearMorphism.zero(l1, l0),
                         _action.trivial_action(l0, l1))


class XModMorphism:
    """A pair of maps ``(f1, f0)`` between two crossed modules."""

    __slots__ = ('source', 'target', 'f1', 'f0')

    source: CrossedModule
    target: CrossedModule

    f1: _algebra.LinearMorphism
    """The component on L1."""

    f0: _algebra.LinearMorphism
    """The component on L0."""

    def __init__(self, source: CrossedModule, target: CrossedModule,
                 f1: _algebra.LinearMorphism,
                 f0: _algebra.LinearMorphism) -> None:
        _field.check_same(source.field, target.field, f1.field, f0.field)
        if (f1.source != source.l1 or f1.target != target.l1
                or f0.source != source.l0 or f0.target != target.l0):
            raise _types.InvalidStructure(
                "Crossed module morphism components do not match the "
                "source and target")
        self.source = source
        self.target = target
        self.f1 = f1
        self.f0 = f0

    @property
    def field(self) -> _field.FieldSpec:
        return self.source.field

    @classmethod
    def identity(cls, x: CrossedModule) -> 'XModMorphism':
        return cls(x, x, _algebra.LinearMorphism.identity(x.l1),
                   _algebra.LinearMorphism.identity(x.l0))

    def compose(self, other: 'XModMorphism') -> 'XModMorphism':
        """``self`` after ``other``."""
        if other.target != self.source:
            raise _types.NotComposable(
                "The target of the inner morphism is not the source of the "
                "outer one")
        return XModMorphism(other.source, self.target,
                            self.f1.compose(other.f1),
                            self.f0.compose(other.f0))

    def is_bijective(self) -> bool:
        return self.f1.is_bijective() and self.f0.is_bijective()

    def __eq__(self, other):
        if not isinstance(other, XModMorphism):
            return NotImplemented
        return ((self.source, self.target, self.f1, self.f0)
                == (other.source, other.target, other.f1, other.f0))

    def __hash__(self):
        return hash((self.f1, self.f0))

    def __repr__(self):
        return f"XModMorphism({self.source!r} -> {self.target!r})"


def validate_xmod_morphism(m: XModMorphism) -> _report.Report:
    """Check that ``(f1, f0)`` commutes with the boundaries and the actions.

    :raises: :class:`InvalidStructure` if the source or target is invalid.
    """
    require_xmod(m.source)
    require_xmod(m.target)
    src, dst = m.source, m.target
    f1, f0 = m.f1, m.f0
    pairs = list(itertools.product(src.l0.units(), src.l1.units()))
    return _report.Report('xmod_morphism', {
        'morphisms_ok': (_algebra.check_morphism(f1)
                         and _algebra.check_morphism(f0)),
        'boundary_ok': (f0.matrix @ src.boundary.matrix
                        == dst.boundary.matrix @ f1.matrix),
        'left_ok': all(f1(src.action.left(y, n))
                       == dst.action.left(f0(y), f1(n))
                       for y, n in pairs),
        'right_ok': all(f1(src.action.right(n, y))
                        == dst.action.right(f1(n), f0(y))
                        for y, n in pairs),
    })


def check_covering_xmod_morphism(f: XModMorphism, p: XModMorphism,
                                 q: XModMorphism) -> bool:
    """Whether ``f`` is a morphism of coverings over a common base.

    ``p`` and ``q`` cover the same crossed module, ``f`` runs from the
    source of ``p`` to the source of ``q`` and ``q f = p``.
    """
    if p.target != q.target:
        raise _types.NotComposable(
            "Both coverings must have the same base crossed module")
    if f.source != p.source or f.target != q.source:
        raise _types.NotComposable(
            "The morphism must run between the two covering sources")
    return bool(validate_xmod_morphism(f)) and q.compose(f) == p
