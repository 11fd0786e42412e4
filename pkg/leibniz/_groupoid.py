"""Internal groupoids in the category of Leibniz algebras."""

import enum
import itertools
import logging
import typing

from . import _action
from . import _algebra
from . import _field
from . import _linalg
from . import _report
from . import _types
from . import _xmod


LOG = logging.getLogger(__name__)

Vector = _field.Vector
Matrix = _linalg.Matrix


class InternalGroupoid:
    """A groupoid ``(G, Ob, d0, d1, eps)`` with composition derived from
    addition: ``h o k = h - eps d0(h) + k``.

    :param d0: The source map ``G -> Ob``.
    :param d1: The target map ``G -> Ob``.
    :param eps: The identity map ``Ob -> G``.
    :raises: :class:`InvalidStructure` if the maps do not share G and Ob.
    """

    __slots__ = ('d0', 'd1', 'eps')

    d0: _algebra.LinearMorphism
    """The source map."""

    d1: _algebra.LinearMorphism
    """The target map."""

    eps: _algebra.LinearMorphism
    """The identity arrows."""

    def __init__(self, d0: _algebra.LinearMorphism,
                 d1: _algebra.LinearMorphism,
                 eps: _algebra.LinearMorphism) -> None:
        _field.check_same(d0.field, d1.field, eps.field)
        if (d1.source != d0.source or d1.target != d0.target
                or eps.source != d0.target or eps.target != d0.source):
            raise _types.InvalidStructure(
                "d0 and d1 must map the arrows to the objects and eps the "
                "objects to the arrows")
        self.d0 = d0
        self.d1 = d1
        self.eps = eps

    @property
    def arrows(self) -> _algebra.LeibnizAlgebra:
        return self.d0.source

    @property
    def objects(self) -> _algebra.LeibnizAlgebra:
        return self.d0.target

    @property
    def field(self) -> _field.FieldSpec:
        return self.d0.field

    def composable_pairs(self) -> _linalg.Subspace:
        """The pullback ``{(h, k) : d0(h) = d1(k)}`` inside ``G + G``."""
        return _linalg.pullback_basis(self.d0.matrix, self.d1.matrix)

    def split(self, pair: Vector) -> typing.Tuple[Vector, Vector]:
        return tuple(pair[:self.arrows.dim]), tuple(pair[self.arrows.dim:])

    def __eq__(self, other):
        if not isinstance(other, InternalGroupoid):
            return NotImplemented
        return ((self.d0, self.d1, self.eps)
                == (other.d0, other.d1, other.eps))

    def __hash__(self):
        return hash((self.d0, self.d1, self.eps))

    def __repr__(self):
        return (f"InternalGroupoid({self.arrows.dim} arrows over "
                f"{self.objects.dim} objects, {self.field})")


def _compose(g: InternalGroupoid, h: Vector, k: Vector) -> Vector:
    return _linalg.add(_linalg.sub(h, g.eps(g.d0(h))), k)


def compose(g: InternalGroupoid, h: Vector, k: Vector) -> Vector:
    """``h o k``: first ``k``, then ``h``.

    :raises: :class:`NotComposable` unless ``d1(k) = d0(h)``.
    """
    if g.d1(k) != g.d0(h):
        raise _types.NotComposable(
            "The target of the first arrow is not the source of the second")
    return _compose(g, h, k)


def inverse(g: InternalGroupoid, h: Vector) -> Vector:
    """``eps d0(h) - h + eps d1(h)``"""
    return _linalg.add(_linalg.sub(g.eps(g.d0(h)), h), g.eps(g.d1(h)))


def star(g: InternalGroupoid,
         x: Vector) -> typing.Tuple[Vector, _linalg.Subspace]:
    """The arrows starting at ``x`` as ``eps(x) + ker d0``."""
    kernel, _image = _linalg.kernel_image(g.d0.matrix)
    return g.eps(x), kernel


def _kernels(g: InternalGroupoid) -> typing.Tuple[_linalg.Subspace,
                                                  _linalg.Subspace]:
    return (_linalg.kernel_image(g.d0.matrix)[0],
            _linalg.kernel_image(g.d1.matrix)[0])


def _brackets_vanish(a: _algebra.LeibnizAlgebra,
                     first: typing.Iterable[Vector],
                     second: typing.Iterable[Vector]) -> bool:
    second = list(second)
    return all(not any(a.bracket(u, v)) and not any(a.bracket(v, u))
               for u in first for v in second)


def _interchange_bracket(g: InternalGroupoid,
                         pairs: _linalg.Subspace) -> bool:
    G = g.arrows
    for first, second in itertools.product(pairs.basis, repeat=2):
        h, k = g.split(first)
        h2, k2 = g.split(second)
        hb, kb = G.bracket(h, h2), G.bracket(k, k2)
        if g.d0(hb) != g.d1(kb):
            return False
        if (_compose(g, hb, kb)
                != G.bracket(_compose(g, h, k), _compose(g, h2, k2))):
            return False
    return True


def validate_groupoid(g: InternalGroupoid) -> _report.Report:
    """Check the structure maps, sections, kernel brackets and interchange.

    Interchange is checked on a basis of the composable pairs, which
    together with the kernel bracket condition makes the derived
    composition a Leibniz morphism.
    """
    identity = Matrix.identity(g.field, g.objects.dim)
    kernel0, kernel1 = _kernels(g)
    return _report.Report('groupoid', {
        'maps_ok': all(_algebra.check_morphism(f)
                       for f in (g.d0, g.d1, g.eps)),
        'sections_ok': (g.d0.matrix @ g.eps.matrix == identity
                        and g.d1.matrix @ g.eps.matrix == identity),
        'kernel_bracket_ok': _brackets_vanish(g.arrows, kernel0.basis,
                                              kernel1.basis),
        'interchange_ok': _interchange_bracket(g, g.composable_pairs()),
    })


def require_groupoid(g: InternalGroupoid) -> None:
    """:raises: :class:`InvalidStructure` unless ``g`` is valid."""
    validate_groupoid(g).require('groupoid')


def proposition_report(g: InternalGroupoid) -> _report.Report:
    """Structural identities every valid groupoid satisfies."""
    G = g.arrows
    units = G.units()
    kernel0, kernel1 = _kernels(g)
    pairs = g.composable_pairs()

    def sums_interchange() -> bool:
        for first, second in itertools.product(pairs.basis, repeat=2):
            h, k = g.split(first)
            h2, k2 = g.split(second)
            if (_linalg.add(_compose(g, h, k), _compose(g, h2, k2))
                    != _compose(g, _linalg.add(h, h2), _linalg.add(k, k2))):
                return False
        return True

    return _report.Report('groupoid_proposition', {
        'd0_bracket': _algebra.check_morphism(g.d0),
        'd1_bracket': _algebra.check_morphism(g.d1),
        'eps_bracket': _algebra.check_morphism(g.eps),
        'inverse_bracket': all(
            inverse(g, G.bracket(a, b))
            == G.bracket(inverse(g, a), inverse(g, b))
            for a, b in itertools.product(units, repeat=2)),
        'kernel_lemma': _brackets_vanish(G, kernel0.basis, kernel1.basis),
        'section_lemma': all(
            G.bracket(k, g.eps(g.d1(a))) == G.bracket(k, a)
            and G.bracket(g.eps(g.d1(a)), k) == G.bracket(a, k)
            for k in kernel0.basis for a in units),
        'star_ideal': _algebra.is_ideal(G, kernel0),
        'interchange_sum': sums_interchange(),
        'interchange_bracket': _interchange_bracket(g, pairs),
    })


class Transitivity(str, enum.Enum):
    ONE_TRANSITIVE = 'one_transitive'
    TRANSITIVE = 'transitive'
    TOTALLY_INTRANSITIVE = 'totally_intransitive'
    SIMPLY_TRANSITIVE = 'simply_transitive'
    NONE_OF_THESE = 'none_of_these'


def transitivity_flags(g: InternalGroupoid) -> typing.Dict[str, bool]:
    """Linear criteria read off the joint map ``(d0, d1): G -> Ob x Ob``."""
    joint = Matrix.vstack(g.d0.matrix, g.d1.matrix)
    kernel0, kernel1 = _kernels(g)
    transitive = joint.rank() == 2 * g.objects.dim
    simply = kernel0.intersection(kernel1).dim == 0
    return {
        'transitive': transitive,
        'simply_transitive': simply,
        'one_transitive': transitive and simply,
        'totally_intransitive': g.d0.matrix == g.d1.matrix,
    }


def is_transitive(g: InternalGroupoid) -> Transitivity:
    """The strongest applicable transitivity class."""
    flags = transitivity_flags(g)
    for cls in Transitivity:
        if flags.get(cls.value):
            return cls
    return Transitivity.NONE_OF_THESE


class GroupoidMorphism:
    """An internal functor given by its maps on arrows and on objects."""

    __slots__ = ('source', 'target', 'on_arrows', 'on_objects')

    source: InternalGroupoid
    target: InternalGroupoid
    on_arrows: _algebra.LinearMorphism
    on_objects: _algebra.LinearMorphism

    def __init__(self, source: InternalGroupoid, target: InternalGroupoid,
                 on_arrows: _algebra.LinearMorphism,
                 on_objects: _algebra.LinearMorphism) -> None:
        _field.check_same(source.field, target.field)
        if (on_arrows.source != source.arrows
                or on_arrows.target != target.arrows
                or on_objects.source != source.objects
                or on_objects.target != target.objects):
            raise _types.InvalidStructure(
                "Groupoid morphism components do not match the source and "
                "target")
        self.source = source
        self.target = target
        self.on_arrows = on_arrows
        self.on_objects = on_objects

    @property
    def field(self) -> _field.FieldSpec:
        return self.source.field

    @classmethod
    def identity(cls, g: InternalGroupoid) -> 'GroupoidMorphism':
        return cls(g, g, _algebra.LinearMorphism.identity(g.arrows),
                   _algebra.LinearMorphism.identity(g.objects))

    def compose(self, other: 'GroupoidMorphism') -> 'GroupoidMorphism':
        """``self`` after ``other``."""
        if other.target != self.source:
            raise _types.NotComposable(
                "The target of the inner functor is not the source of the "
                "outer one")
        return GroupoidMorphism(other.source, self.target,
                                self.on_arrows.compose(other.on_arrows),
                                self.on_objects.compose(other.on_objects))

    def is_bijective(self) -> bool:
        return self.on_arrows.is_bijective() and self.on_objects.is_bijective()

    def __call__(self, arrow: Vector) -> Vector:
        return self.on_arrows(arrow)

    def __eq__(self, other):
        if not isinstance(other, GroupoidMorphism):
            return NotImplemented
        return ((self.source, self.target, self.on_arrows, self.on_objects)
                == (other.source, other.target, other.on_arrows,
                    other.on_objects))

    def __hash__(self):
        return hash((self.on_arrows, self.on_objects))

    def __repr__(self):
        return f"GroupoidMorphism({self.source!r} -> {self.target!r})"


def validate_gpd_morphism(f: GroupoidMorphism) -> _report.Report:
    src, dst = f.source, f.target
    arrows, objects = f.on_arrows.matrix, f.on_objects.matrix
    return _report.Report('gpd_morphism', {
        'morphisms_ok': (_algebra.check_morphism(f.on_arrows)
                         and _algebra.check_morphism(f.on_objects)),
        'd0_ok': dst.d0.matrix @ arrows == objects @ src.d0.matrix,
        'd1_ok': dst.d1.matrix @ arrows == objects @ src.d1.matrix,
        'eps_ok': arrows @ src.eps.matrix == dst.eps.matrix @ objects,
    })


def pair_groupoid(algebra: _algebra.LeibnizAlgebra) -> InternalGroupoid:
    """Arrows ``(a, b)`` from ``a`` to ``b`` with ``eps(a) = (a, a)``."""
    d0, d1 = _algebra.product_projections(algebra, algebra)
    diagonal = Matrix.vstack(
        Matrix.identity(algebra.field, algebra.dim),
        Matrix.identity(algebra.field, algebra.dim))
    return InternalGroupoid(
        d0, d1, _algebra.LinearMorphism(algebra, d0.source, diagonal))


def one_object_groupoid(
        algebra: _algebra.LeibnizAlgebra) -> InternalGroupoid:
    """An abelian algebra as a groupoid over the zero algebra.

    :raises: :class:`InvalidStructure` if the algebra is not abelian.
    """
    if not algebra.is_abelian():
        raise _types.InvalidStructure(
            "Only an abelian algebra forms a groupoid with one object")
    point = _algebra.abelian(algebra.field, 0)
    to_point = _algebra.LinearMorphism.zero(algebra, point)
    return InternalGroupoid(to_point, to_point,
                            _algebra.LinearMorphism.zero(point, algebra))


def discrete_groupoid(algebra: _algebra.LeibnizAlgebra) -> InternalGroupoid:
    """Only identity arrows: ``d0 = d1 = eps = id``."""
    identity = _algebra.LinearMorphism.identity(algebra)
    return InternalGroupoid(identity, identity, identity)


def eta(g: InternalGroupoid) -> _xmod.CrossedModule:
    """The crossed module ``d1|: ker d0 -> Ob`` with the action by
    bracketing with identity arrows.

    :raises: :class:`InvalidStructure` if the groupoid is invalid.
    """
    require_groupoid(g)
    G = g.arrows
    kernel, _image = _linalg.kernel_image(g.d0.matrix)
    star_alg, inclusion = _algebra.subalgebra(
        G, kernel, basis=[f"k{i + 1}" for i in range(kernel.dim)])
    boundary = _algebra.LinearMorphism(star_alg, g.objects,
                                       g.d1.matrix @ inclusion.matrix)
    identities = [g.eps(x) for x in g.objects.units()]
    lam = [[kernel.coordinates(G.bracket(e, k)) for k in kernel.basis]
           for e in identities]
    rho = [[kernel.coordinates(G.bracket(k, e)) for e in identities]
           for k in kernel.basis]
    LOG.debug('eta: star of dimension %s over %s objects',
              kernel.dim, g.objects.dim)
    return _xmod.CrossedModule(
        boundary, _action.LeibnizAction(g.objects, star_alg, lam, rho))


def delta(x: _xmod.CrossedModule) -> InternalGroupoid:
    """The groupoid on ``L1 x| L0`` with ``d0(m, y) = y``,
    ``d1(m, y) = d(m) + y`` and ``eps(y) = (0, y)``.

    :raises: :class:`InvalidStructure` if the crossed module is invalid.
    """
    _xmod.require_xmod(x)
    arrows, ext = _action.semidirect(x.action)
    field = x.field
    n1, n0 = x.l1.dim, x.l0.dim
    identity = Matrix.identity(field, n0)
    d0 = Matrix.hstack(Matrix.zero(field, n0, n1), identity)
    d1 = Matrix.hstack(x.boundary.matrix, identity)
    LOG.debug('delta: arrows of dimension %s', arrows.dim)
    return InternalGroupoid(
        _algebra.LinearMorphism(arrows, x.l0, d0),
        _algebra.LinearMorphism(arrows, x.l0, d1),
        ext.s)


def roundtrip_eta_delta(x: _xmod.CrossedModule) -> _xmod.XModMorphism:
    """The isomorphism ``x -> eta(delta(x))``, ``m -> (m, 0)`` on L1.

    :raises: :class:`InconsistentStructure` if verification fails.
    """
    image = eta(delta(x))
    # ker d0 of the semidirect product has the (e_i, 0) as canonical basis
    on_l1 = _algebra.LinearMorphism(
        x.l1, image.l1, Matrix.identity(x.field, x.l1.dim))
    result = _xmod.XModMorphism(x, image, on_l1,
                                _algebra.LinearMorphism.identity(x.l0))
    if not (_xmod.validate_xmod_morphism(result) and result.is_bijective()):
        raise _types.InconsistentStructure(
            "The eta-delta comparison is not an isomorphism")
    return result


def roundtrip_delta_eta(g: InternalGroupoid) -> GroupoidMorphism:
    """The isomorphism ``g -> delta(eta(g))``,
    ``h -> (h - eps d0(h), d0(h))`` on arrows and the identity on objects.

    :raises: :class:`InconsistentStructure` if verification fails.
    """
    image = delta(eta(g))
    kernel, _image = _linalg.kernel_image(g.d0.matrix)
    columns = []
    for h in g.arrows.units():
        base = g.d0(h)
        columns.append(kernel.coordinates(_linalg.sub(h, g.eps(base)))
                       + base)
    on_arrows = _algebra.LinearMorphism(
        g.arrows, image.arrows,
        Matrix.from_columns(g.field, columns, image.arrows.dim))
    result = GroupoidMorphism(g, image, on_arrows,
                              _algebra.LinearMorphism.identity(g.objects))
    if not (validate_gpd_morphism(result) and result.is_bijective()):
        raise _types.InconsistentStructure(
            "The delta-eta comparison is not an isomorphism")
    return result
