"""Covering morphisms, groupoid actions and covering crossed modules."""

import logging
import typing

from . import _algebra
from . import _field
from . import _groupoid
from . import _linalg
from . import _report
from . import _types
from . import _xmod


LOG = logging.getLogger(__name__)

Vector = _field.Vector
Matrix = _linalg.Matrix
InternalGroupoid = _groupoid.InternalGroupoid
GroupoidMorphism = _groupoid.GroupoidMorphism


def pullback_algebra(
    first: _algebra.LinearMorphism,
    second: _algebra.LinearMorphism,
) -> typing.Tuple[_algebra.LeibnizAlgebra, _linalg.Subspace]:
    """The subalgebra ``{(u, v) : first(u) = second(v)}`` of the product.

    Operations are componentwise; the subalgebra uses the coordinates of
    the canonical basis of the returned subspace.

    :raises: :class:`InvalidStructure` if the maps are not morphisms and
        the subspace is not closed.
    """
    space = _linalg.pullback_basis(first.matrix, second.matrix)
    product = _algebra.direct_product(first.source, second.source)
    algebra, _inclusion = _algebra.subalgebra(product, space)
    return algebra, space


class GroupoidAction:
    """An action of an internal groupoid on an algebra over ``omega``.

    ``act`` maps the pullback ``{(g, l) : d0(g) = omega(l)}`` to the
    algebra, in the coordinates of the canonical basis of the pullback
    (see :attr:`GroupoidAction.pullback`).

    :param groupoid: The acting groupoid G.
    :param algebra: The algebra L acted upon.
    :param omega: The anchor ``L -> Ob(G)``.
    :param act: A ``dim L x dim P`` matrix.
    """

    __slots__ = ('groupoid', 'algebra', 'omega', 'act', 'pullback')

    groupoid: InternalGroupoid
    algebra: _algebra.LeibnizAlgebra
    omega: _algebra.LinearMorphism
    act: Matrix

    pullback: _linalg.Subspace
    """The pullback of ``d0`` and ``omega`` inside ``G + L``."""

    def __init__(self, groupoid: InternalGroupoid,
                 algebra: _algebra.LeibnizAlgebra,
                 omega: _algebra.LinearMorphism, act: Matrix) -> None:
        _field.check_same(groupoid.field, algebra.field, omega.field,
                          act.field)
        if omega.source != algebra or omega.target != groupoid.objects:
            raise _types.InvalidStructure(
                "The anchor must map the algebra to the objects")
        self.pullback = _linalg.pullback_basis(groupoid.d0.matrix,
                                               omega.matrix)
        if (act.rows, act.cols) != (algebra.dim, self.pullback.dim):
            raise _types.DimensionMismatch(
                f"The action needs a {algebra.dim}x{self.pullback.dim} "
                f"matrix, got {act.rows}x{act.cols}")
        self.groupoid = groupoid
        self.algebra = algebra
        self.omega = omega
        self.act = act

    @property
    def field(self) -> _field.FieldSpec:
        return self.algebra.field

    def pair(self, arrow: Vector, element: Vector) -> typing.Optional[Vector]:
        """Pullback coordinates of ``(arrow, element)`` or `None`."""
        joined = tuple(arrow) + tuple(element)
        if not self.pullback.contains(joined):
            return None
        return self.pullback.coordinates(joined)

    def apply(self, arrow: Vector, element: Vector) -> Vector:
        """``arrow . element``

        :raises: :class:`NotComposable` unless ``d0(arrow) = omega(element)``.
        """
        coordinates = self.pair(arrow, element)
        if coordinates is None:
            raise _types.NotComposable(
                "The arrow does not start at the anchor of the element")
        return self.act.apply(coordinates)

    def __eq__(self, other):
        if not isinstance(other, GroupoidAction):
            return NotImplemented
        return ((self.groupoid, self.algebra, self.omega, self.act)
                == (other.groupoid, other.algebra, other.omega, other.act))

    def __hash__(self):
        return hash((self.groupoid, self.omega, self.act))

    def __repr__(self):
        return (f"GroupoidAction({self.groupoid!r} on "
                f"{self.algebra.dim}-dim algebra)")


def _act_or_none(a: GroupoidAction, arrow: Vector,
                 element: Vector) -> typing.Optional[Vector]:
    coordinates = a.pair(arrow, element)
    return None if coordinates is None else a.act.apply(coordinates)


def _associativity(a: GroupoidAction) -> bool:
    g = a.groupoid
    n, dim = g.arrows.dim, a.algebra.dim
    field = a.field
    zero_l = Matrix.zero(field, g.objects.dim, dim)
    zero_g = Matrix.zero(field, g.objects.dim, n)
    # triples (h, k, l) with d0 h = d1 k and d0 k = omega l
    constraints = Matrix.vstack(
        Matrix.hstack(g.d0.matrix, -g.d1.matrix, zero_l),
        Matrix.hstack(zero_g, g.d0.matrix, -a.omega.matrix))
    triples = constraints.solver().kernel()
    for triple in triples.basis:
        h, k, l = triple[:n], triple[n:2 * n], triple[2 * n:]
        first = _act_or_none(a, _groupoid.compose(g, h, k), l)
        inner = _act_or_none(a, k, l)
        second = None if inner is None else _act_or_none(a, h, inner)
        if first is None or first != second:
            return False
    return True


def validate_gpd_action(a: GroupoidAction) -> _report.Report:
    """Check the anchor, unit and associativity laws and that the action
    is a Leibniz morphism on the pullback algebra.
    """
    g = a.groupoid
    n = g.arrows.dim
    columns = a.act.columns()
    a1 = all(a.omega(value) == g.d1(vector[:n])
             for vector, value in zip(a.pullback.basis, columns))
    a2 = all(_act_or_none(a, g.eps(a.omega(l)), l) == l
             for l in a.algebra.units())

    morphism_ok = _algebra.check_morphism(a.omega)
    if morphism_ok:
        try:
            domain, _space = pullback_algebra(g.d0, a.omega)
        except _types.InvalidStructure:
            morphism_ok = False
        else:
            morphism_ok = _algebra.check_morphism(
                _algebra.LinearMorphism(domain, a.algebra, a.act))

    return _report.Report('gpd_action', {
        'a1': a1,
        'a2': a2,
        'a3': _associativity(a),
        'morphism_ok': morphism_ok,
    })


def canonical_action(g: InternalGroupoid) -> GroupoidAction:
    """``G`` acting on ``Ob(G)`` over the identity by ``g . x = d1(g)``."""
    omega = _algebra.LinearMorphism.identity(g.objects)
    space = _linalg.pullback_basis(g.d0.matrix, omega.matrix)
    n = g.arrows.dim
    act = Matrix.from_columns(
        g.field, [g.d1(vector[:n]) for vector in space.basis],
        g.objects.dim)
    return GroupoidAction(g, g.objects, omega, act)


def action_groupoid(a: GroupoidAction) -> typing.Tuple[
        InternalGroupoid, GroupoidMorphism]:
    """The groupoid ``G x| L`` of pairs ``(g, l)`` with ``d0(g, l) = l``,
    ``d1(g, l) = g . l`` and ``eps(l) = (eps omega(l), l)``, and its
    projection to G.

    :raises: :class:`InvalidStructure` if the action is invalid.
    """
    validate_gpd_action(a).require('groupoid action')
    g, L = a.groupoid, a.algebra
    field = a.field
    arrows, space = pullback_algebra(g.d0, a.omega)
    inclusion = space.inclusion()
    to_l = Matrix.hstack(Matrix.zero(field, L.dim, g.arrows.dim),
                         Matrix.identity(field, L.dim))
    to_g = Matrix.hstack(Matrix.identity(field, g.arrows.dim),
                         Matrix.zero(field, g.arrows.dim, L.dim))
    identities = Matrix.from_columns(
        field,
        [space.coordinates(g.eps(a.omega(l)) + l) for l in L.units()],
        space.dim)
    result = InternalGroupoid(
        _algebra.LinearMorphism(arrows, L, to_l @ inclusion),
        _algebra.LinearMorphism(arrows, L, a.act),
        _algebra.LinearMorphism(L, arrows, identities))
    projection = GroupoidMorphism(
        result, g, _algebra.LinearMorphism(arrows, g.arrows,
                                           to_g @ inclusion),
        a.omega)
    LOG.debug('action groupoid with %s arrows', arrows.dim)
    return result, projection


def _joint(p: GroupoidMorphism) -> Matrix:
    """``(p, d0)`` on the arrows of the covering groupoid."""
    return Matrix.vstack(p.on_arrows.matrix, p.source.d0.matrix)


def _covering_pullback(p: GroupoidMorphism) -> _linalg.Subspace:
    return _linalg.pullback_basis(p.target.d0.matrix, p.on_objects.matrix)


def check_covering(p: GroupoidMorphism) -> bool:
    """Whether ``(p, d0)`` is an isomorphism onto the pullback of ``d0``
    and ``p0``.

    :raises: :class:`InvalidStructure` if ``p`` is not a groupoid morphism.
    """
    _groupoid.validate_gpd_morphism(p).require('groupoid morphism')
    dim = p.source.arrows.dim
    return (_joint(p).rank() == dim
            and _covering_pullback(p).dim == dim)


def require_covering(p: GroupoidMorphism) -> None:
    if not check_covering(p):
        raise _types.NotACovering(
            "(p, d0) is not an isomorphism onto the pullback")


def lift(p: GroupoidMorphism, arrow: Vector, at: Vector) -> Vector:
    """The unique arrow starting at ``at`` that ``p`` maps to ``arrow``.

    :raises: :class:`NotACovering` if ``p`` is not a covering.
    :raises: :class:`NotComposable` unless ``d0(arrow) = p0(at)``.
    """
    require_covering(p)
    if p.target.d0(arrow) != p.on_objects(at):
        raise _types.NotComposable(
            "The arrow does not start at the image of the base point")
    result = _joint(p).solver().solve(tuple(arrow) + tuple(at))
    if result is None:
        raise _types.InconsistentStructure("Lifting has no solution")
    return result


def lifting_map(p: GroupoidMorphism) -> _algebra.LinearMorphism:
    """The lifting function as a morphism from the pullback algebra
    ``G x_(d0, p0) Ob`` to the covering arrows.
    """
    require_covering(p)
    domain, space = pullback_algebra(p.target.d0, p.on_objects)
    solver = _joint(p).solver()
    columns = [solver.solve(vector) for vector in space.basis]
    return _algebra.LinearMorphism(
        domain, p.source.arrows,
        Matrix.from_columns(p.field, columns, p.source.arrows.dim))


def covering_to_action(p: GroupoidMorphism) -> GroupoidAction:
    """``g . x = d1(lift(g, x))`` over ``p0``.

    :raises: :class:`NotACovering` if ``p`` is not a covering.
    """
    require_covering(p)
    lifted = lifting_map(p)
    act = p.source.d1.matrix @ lifted.matrix
    return GroupoidAction(p.target, p.source.objects, p.on_objects, act)


def roundtrip_cov_action(p: GroupoidMorphism) -> GroupoidMorphism:
    """The isomorphism ``g -> (p(g), d0(g))`` from the covering groupoid
    onto the action groupoid of :func:`covering_to_action`.

    :raises: :class:`InconsistentStructure` if verification fails.
    """
    ag, projection = action_groupoid(covering_to_action(p))
    space = _covering_pullback(p)
    joint = _joint(p)
    on_arrows = _algebra.LinearMorphism(
        p.source.arrows, ag.arrows,
        Matrix.from_columns(
            p.field,
            [space.coordinates(column) for column in joint.columns()],
            space.dim))
    result = GroupoidMorphism(
        p.source, ag, on_arrows,
        _algebra.LinearMorphism.identity(p.source.objects))
    if not (_groupoid.validate_gpd_morphism(result)
            and result.is_bijective()
            and projection.compose(result) == p):
        raise _types.InconsistentStructure(
            "The covering is not isomorphic to its action groupoid")
    return result


def covering_class(p: GroupoidMorphism) -> typing.Dict[str, bool]:
    """Whether a covering is transitive and universal."""
    require_covering(p)
    transitive = (_groupoid.transitivity_flags(p.source)['transitive']
                  and _groupoid.transitivity_flags(p.target)['transitive'])
    return {
        'transitive': transitive,
        'universal': (transitive and _groupoid.transitivity_flags(
            p.source)['simply_transitive']),
    }


def check_covering_morphism(f: GroupoidMorphism, p: GroupoidMorphism,
                            q: GroupoidMorphism) -> bool:
    """Whether ``f`` is a morphism of coverings: ``q f = p``."""
    if p.target != q.target:
        raise _types.NotComposable(
            "Both coverings must cover the same groupoid")
    return (bool(_groupoid.validate_gpd_morphism(f))
            and q.compose(f) == p)


def check_action_morphism(f: _algebra.LinearMorphism, a: GroupoidAction,
                          b: GroupoidAction) -> bool:
    """Whether ``f`` is equivariant and respects the anchors."""
    if a.groupoid != b.groupoid:
        raise _types.NotComposable(
            "Both actions must be actions of the same groupoid")
    if f.source != a.algebra or f.target != b.algebra:
        raise _types.NotComposable(
            "The map must run between the two acted-upon algebras")
    if not (_algebra.check_morphism(f)
            and b.omega.compose(f) == a.omega):
        return False
    n = a.groupoid.arrows.dim
    return all(
        f(value) == b.apply(vector[:n], f(vector[n:]))
        for vector, value in zip(a.pullback.basis, a.act.columns()))


class CoveringXModMorphism:
    """A crossed module morphism whose L1 component is bijective.

    :raises: :class:`NotACovering` otherwise.
    """

    __slots__ = ('morphism',)

    morphism: _xmod.XModMorphism

    def __init__(self, morphism: _xmod.XModMorphism) -> None:
        if not check_covering_xmod(morphism):
            raise _types.NotACovering(
                "The L1 component of a covering must be bijective")
        self.morphism = morphism

    def __eq__(self, other):
        if not isinstance(other, CoveringXModMorphism):
            return NotImplemented
        return self.morphism == other.morphism

    def __hash__(self):
        return hash(self.morphism)

    def __repr__(self):
        return f"CoveringXModMorphism({self.morphism!r})"


def check_covering_xmod(m: _xmod.XModMorphism) -> bool:
    """:raises: :class:`InvalidStructure` if ``m`` is not a morphism."""
    _xmod.validate_xmod_morphism(m).require('crossed module morphism')
    return m.f1.is_bijective()


def gpd_cov_to_xmod_cov(p: GroupoidMorphism) -> CoveringXModMorphism:
    """Restrict a covering to the stars at zero."""
    require_covering(p)
    source, target = _groupoid.eta(p.source), _groupoid.eta(p.target)
    kernel_src, _image = _linalg.kernel_image(p.source.d0.matrix)
    kernel_dst, _image = _linalg.kernel_image(p.target.d0.matrix)
    columns = [kernel_dst.coordinates(p(vector))
               for vector in kernel_src.basis]
    f1 = _algebra.LinearMorphism(
        source.l1, target.l1,
        Matrix.from_columns(p.field, columns, kernel_dst.dim))
    return CoveringXModMorphism(
        _xmod.XModMorphism(source, target, f1, p.on_objects))


def xmod_cov_to_gpd_cov(m: CoveringXModMorphism) -> GroupoidMorphism:
    """The product map ``f1 x f0`` between the associated groupoids."""
    inner = m.morphism
    source, target = (_groupoid.delta(inner.source),
                      _groupoid.delta(inner.target))
    on_arrows = _algebra.LinearMorphism(
        source.arrows, target.arrows,
        Matrix.block_diagonal(inner.f1.matrix, inner.f0.matrix))
    result = GroupoidMorphism(source, target, on_arrows, inner.f0)
    if not check_covering(result):
        raise _types.InconsistentStructure(
            "The product map of a covering crossed module is not a covering")
    return result


def xmod_lifting_map(m: CoveringXModMorphism) -> _algebra.LinearMorphism:
    """``((x, y), z) -> (f1^-1(x), z)`` on the pullback algebra of
    ``d0`` and ``f0``.
    """
    p = xmod_cov_to_gpd_cov(m)
    inner = m.morphism
    n1 = inner.target.l1.dim
    inverse = inner.f1.matrix.inverse()
    domain, space = pullback_algebra(p.target.d0, p.on_objects)
    offset = p.target.arrows.dim
    columns = [inverse.apply(vector[:n1]) + vector[offset:]
               for vector in space.basis]
    return _algebra.LinearMorphism(
        domain, p.source.arrows,
        Matrix.from_columns(p.field, columns, p.source.arrows.dim))


def roundtrip_coverings(m: CoveringXModMorphism) -> typing.Tuple[
        _xmod.XModMorphism, _xmod.XModMorphism]:
    """Compare ``m`` with its image after a groupoid round trip.

    :return: The comparison isomorphisms on the source and target crossed
        modules, each verified to intertwine ``m`` and its image.
    """
    inner = m.morphism
    image = gpd_cov_to_xmod_cov(xmod_cov_to_gpd_cov(m)).morphism
    source = _groupoid.roundtrip_eta_delta(inner.source)
    target = _groupoid.roundtrip_eta_delta(inner.target)
    if image.compose(source) != target.compose(inner):
        raise _types.InconsistentStructure(
            "The round trip does not commute with the comparison maps")
    return source, target

