"""Leibniz actions, split extensions and semidirect products."""

import itertools
import typing

from . import _algebra
from . import _field
from . import _linalg
from . import _report
from . import _types


Vector = _field.Vector
Tensor = typing.Tuple[typing.Tuple[Vector, ...], ...]

AXIOMS = ('axiom_i', 'axiom_ii', 'axiom_iii',
          'axiom_iv', 'axiom_v', 'axiom_vi')
"""Flag names of the six action axioms, in order."""

LINEAR_AXIOMS = AXIOMS[:3]
"""Axioms that are linear in the action tensors."""


def _tensor(field, table, first: int, second: int, size: int) -> Tensor:
    result = tuple(tuple(tuple(field(value) for value in out) for out in row)
                   for row in table)
    if (len(result) != first
            or any(len(row) != second for row in result)
            or any(len(out) != size for row in result for out in row)):
        raise _types.DimensionMismatch(
            f"Expected a {first}x{second}x{size} action tensor")
    return result


def _evaluate(table: Tensor, field: _field.FieldSpec, size: int,
              x: Vector, y: Vector) -> Vector:
    return _linalg.combine(
        field, size,
        ((xi * yj, table[i][j])
         for i, xi in enumerate(x) if xi
         for j, yj in enumerate(y) if yj))


class LeibnizAction:
    """An action of ``actor`` (L) on ``actee`` (L') by two bilinear maps.

    :param actor: The acting algebra L.
    :param actee: The algebra L' acted upon.
    :param lam: ``lam[i][j]`` is ``e_i . f_j`` (an element of L').
    :param rho: ``rho[j][i]`` is ``f_j . e_i`` (an element of L').
    """

    __slots__ = ('actor', 'actee', 'lam', 'rho')

    actor: _algebra.LeibnizAlgebra
    """The acting algebra."""

    actee: _algebra.LeibnizAlgebra
    """The algebra acted upon."""

    lam: Tensor
    """The left action ``(x, m) -> x.m``."""

    rho: Tensor
    """The right action ``(m, x) -> m.x``."""

    def __init__(
        self,
        actor: _algebra.LeibnizAlgebra,
        actee: _algebra.LeibnizAlgebra,
        lam: typing.Sequence[typing.Sequence[typing.Sequence[typing.Any]]],
        rho: typing.Sequence[typing.Sequence[typing.Sequence[typing.Any]]],
    ) -> None:
        field = _field.check_same(actor.field, actee.field)
        self.actor = actor
        self.actee = actee
        self.lam = _tensor(field, lam, actor.dim, actee.dim, actee.dim)
        self.rho = _tensor(field, rho, actee.dim, actor.dim, actee.dim)

    @property
    def field(self) -> _field.FieldSpec:
        return self.actor.field

    def left(self, x: Vector, m: Vector) -> Vector:
        """``x . m``"""
        return _evaluate(self.lam, self.field, self.actee.dim, x, m)

    def right(self, m: Vector, x: Vector) -> Vector:
        """``m . x``"""
        return _evaluate(self.rho, self.field, self.actee.dim, m, x)

    def __eq__(self, other):
        if not isinstance(other, LeibnizAction):
            return NotImplemented
        return (self.actor == other.actor and self.actee == other.actee
                and self.lam == other.lam and self.rho == other.rho)

    def __hash__(self):
        return hash((self.lam, self.rho))

    def __repr__(self):
        return (f"LeibnizAction({self.actor.dim}-dim on "
                f"{self.actee.dim}-dim over {self.field})")


def trivial_action(actor: _algebra.LeibnizAlgebra,
                   actee: _algebra.LeibnizAlgebra) -> LeibnizAction:
    zero = actee.zero_vector()
    return LeibnizAction(actor, actee,
                         [[zero] * actee.dim for _ in range(actor.dim)],
                         [[zero] * actor.dim for _ in range(actee.dim)])


def bracket_action(algebra: _algebra.LeibnizAlgebra) -> LeibnizAction:
    """The action of an algebra on itself by its bracket."""
    return LeibnizAction(algebra, algebra, algebra.table, algebra.table)


def axiom_residuals(act: LeibnizAction,
                    axiom: str) -> typing.Iterator[Vector]:
    """Differences of both sides of an axiom on all basis triples.

    The action satisfies the axiom iff every residual is zero.
    """
    L, M = act.actor, act.actee
    xs, ms = L.units(), M.units()
    left, right = act.left, act.right
    sub = _linalg.sub
    if axiom == 'axiom_i':
        # x.[m,n] = [x.m, n] - [x.n, m]
        for x, m, n in itertools.product(xs, ms, ms):
            yield sub(left(x, M.bracket(m, n)),
                      sub(M.bracket(left(x, m), n),
                          M.bracket(left(x, n), m)))
    elif axiom == 'axiom_ii':
        # [m, x.n] = [m.x, n] - [m,n].x
        for m, x, n in itertools.product(ms, xs, ms):
            yield sub(M.bracket(m, left(x, n)),
                      sub(M.bracket(right(m, x), n),
                          right(M.bracket(m, n), x)))
    elif axiom == 'axiom_iii':
        # [m, n.x] = [m,n].x - [m.x, n]
        for m, n, x in itertools.product(ms, ms, xs):
            yield sub(M.bracket(m, right(n, x)),
                      sub(right(M.bracket(m, n), x),
                          M.bracket(right(m, x), n)))
    elif axiom == 'axiom_iv':
        # x.(y.m) = [x,y].m - (x.m).y
        for x, y, m in itertools.product(xs, xs, ms):
            yield sub(left(x, left(y, m)),
                      sub(left(L.bracket(x, y), m),
                          right(left(x, m), y)))
    elif axiom == 'axiom_v':
        # x.(m.y) = (x.m).y - [x,y].m
        for x, m, y in itertools.product(xs, ms, xs):
            yield sub(left(x, right(m, y)),
                      sub(right(left(x, m), y),
                          left(L.bracket(x, y), m)))
    elif axiom == 'axiom_vi':
        # m.[x,y] = (m.x).y - (m.y).x
        for m, x, y in itertools.product(ms, xs, xs):
            yield sub(right(m, L.bracket(x, y)),
                      sub(right(right(m, x), y),
                          right(right(m, y), x)))
    else:
        raise ValueError(f"Unknown axiom {axiom}")


def validate_action(act: LeibnizAction) -> _report.Report:
    """Check the six action axioms on all basis triples."""
    _field.check_same(act.actor.field, act.actee.field)
    return _report.Report(
        'action',
        {axiom: all(not any(residual)
                    for residual in axiom_residuals(act, axiom))
         for axiom in AXIOMS})


class SplitExtension:
    """A split extension ``0 -> L' -i-> E -p-> L -> 0`` with section ``s``.

    :param i: The kernel inclusion ``L' -> E``.
    :param p: The projection ``E -> L``.
    :param s: The section ``L -> E``.
    :raises: :class:`InvalidStructure` if the maps do not fit together.
    """

    __slots__ = ('i', 'p', 's')

    i: _algebra.LinearMorphism
    """The kernel inclusion."""

    p: _algebra.LinearMorphism
    """The projection."""

    s: _algebra.LinearMorphism
    """The section."""

    def __init__(
        self,
        i: _algebra.LinearMorphism,
        p: _algebra.LinearMorphism,
        s: _algebra.LinearMorphism,
    ) -> None:
        if p.source != i.target or s.target != i.target:
            raise _types.InvalidStructure(
                "The inclusion, projection and section must share the "
                "middle algebra")
        if s.source != p.target:
            raise _types.InvalidStructure(
                "The section must start at the base of the projection")
        self.i = i
        self.p = p
        self.s = s

    @property
    def kernel_alg(self) -> _algebra.LeibnizAlgebra:
        return self.i.source

    @property
    def middle_alg(self) -> _algebra.LeibnizAlgebra:
        return self.i.target

    @property
    def base_alg(self) -> _algebra.LeibnizAlgebra:
        return self.p.target

    def __eq__(self, other):
        if not isinstance(other, SplitExtension):
            return NotImplemented
        return (self.i, self.p, self.s) == (other.i, other.p, other.s)

    def __hash__(self):
        return hash((self.i, self.p, self.s))

    def __repr__(self):
        return (f"SplitExtension({self.kernel_alg.dim} -> "
                f"{self.middle_alg.dim} -> {self.base_alg.dim})")


def validate_split_extension(e: SplitExtension) -> _report.Report:
    """Check exactness, the section identity and the morphism property."""
    field = e.middle_alg.field
    kernel, _image = _linalg.kernel_image(e.p.matrix)
    _kernel, image = _linalg.kernel_image(e.i.matrix)
    return _report.Report('extension', {
        'morphisms_ok': all(_algebra.check_morphism(f)
                            for f in (e.i, e.p, e.s)),
        'i_injective': e.i.matrix.rank() == e.kernel_alg.dim,
        'p_surjective': e.p.matrix.rank() == e.base_alg.dim,
        'exact': kernel == image,
        'section_ok': (e.p.matrix @ e.s.matrix
                       == _linalg.Matrix.identity(field, e.base_alg.dim)),
    })


def derived_action(e: SplitExtension) -> LeibnizAction:
    """The action ``x.m = [s(x), m]``, ``m.x = [m, s(x)]`` on the kernel.

    :raises: :class:`InvalidStructure` if the extension is invalid.
    """
    validate_split_extension(e).require('split extension')
    E = e.middle_alg
    solver = e.i.matrix.solver()

    def pull_back(value: Vector) -> Vector:
        result = solver.solve(value)
        if result is None:
            raise _types.InconsistentStructure(
                "A derived action value escapes the kernel")
        return result

    sections = [e.s(x) for x in e.base_alg.units()]
    kernels = [e.i(m) for m in e.kernel_alg.units()]
    lam = [[pull_back(E.bracket(sx, im)) for im in kernels]
           for sx in sections]
    rho = [[pull_back(E.bracket(im, sx)) for sx in sections]
           for im in kernels]
    return LeibnizAction(e.base_alg, e.kernel_alg, lam, rho)


def semidirect(act: LeibnizAction) -> typing.Tuple[
        _algebra.LeibnizAlgebra, SplitExtension]:
    """The semidirect product ``L' x| L`` and its canonical extension.

    The bracket is ``[(m,x),(n,y)] = ([m,n] + m.y + x.n, [x,y])`` with the
    coordinates of L' first.

    :raises: :class:`InvalidStructure` if the action is invalid.
    """
    validate_action(act).require('action')
    L, M = act.actor, act.actee
    field = act.field
    size = M.dim + L.dim

    def embed(m: Vector = None, x: Vector = None) -> Vector:
        return (tuple(m or M.zero_vector()) + tuple(x or L.zero_vector()))

    table = [[None] * size for _ in range(size)]
    for a, b in itertools.product(range(M.dim), repeat=2):
        table[a][b] = embed(m=M.table[a][b])
    for a, i in itertools.product(range(M.dim), range(L.dim)):
        table[a][M.dim + i] = embed(m=act.rho[a][i])
        table[M.dim + i][a] = embed(m=act.lam[i][a])
    for i, j in itertools.product(range(L.dim), repeat=2):
        table[M.dim + i][M.dim + j] = embed(x=L.table[i][j])

    names = ([f"({name},0)" for name in M.basis]
             + [f"(0,{name})" for name in L.basis])
    product = _algebra.LeibnizAlgebra(field, table, basis=names)

    identity_m = _linalg.Matrix.identity(field, M.dim)
    identity_l = _linalg.Matrix.identity(field, L.dim)
    i = _linalg.Matrix.vstack(identity_m,
                              _linalg.Matrix.zero(field, L.dim, M.dim))
    s = _linalg.Matrix.vstack(_linalg.Matrix.zero(field, M.dim, L.dim),
                              identity_l)
    ext = SplitExtension(_algebra.LinearMorphism(M, product, i),
                         _algebra.LinearMorphism(product, L, s.transpose()),
                         _algebra.LinearMorphism(L, product, s))
    return product, ext


def canonical_extension(act: LeibnizAction) -> SplitExtension:
    return semidirect(act)[1]


def extension_iso(e: SplitExtension) -> typing.Tuple[
        _algebra.LinearMorphism, _algebra.LinearMorphism]:
    """The isomorphisms ``theta: L' x| L -> E`` and its inverse.

    ``theta(m, x) = i(m) + s(x)`` and
    ``theta^-1(e) = (i^-1(e - s p(e)), p(e))``.

    :raises: :class:`InvalidStructure` if the extension is invalid.
    """
    act = derived_action(e)
    product, _ext = semidirect(act)
    E = e.middle_alg
    theta = _algebra.LinearMorphism(
        product, E, _linalg.Matrix.hstack(e.i.matrix, e.s.matrix))

    solver = e.i.matrix.solver()
    columns = []
    for unit in E.units():
        base = e.p(unit)
        kernel = solver.solve(_linalg.sub(unit, e.s(base)))
        if kernel is None:
            raise _types.InconsistentStructure(
                "e - sp(e) is not in the image of i")
        columns.append(kernel + base)
    inverse = _algebra.LinearMorphism(
        E, product, _linalg.Matrix.from_columns(E.field, columns,
                                                product.dim))

    if not (_algebra.check_morphism(theta)
            and _algebra.check_morphism(inverse)):
        raise _types.InconsistentStructure(
            "The extension isomorphism is not bracket-compatible")
    return theta, inverse


def transport_extension(
    e: SplitExtension,
    transform: _linalg.Matrix,
) -> SplitExtension:
    """An isomorphic extension with the middle algebra in a new basis."""
    _middle, iso = _algebra.change_basis(e.middle_alg, transform)
    back = iso.inverse()
    return SplitExtension(iso.compose(e.i), e.p.compose(back),
                          iso.compose(e.s))
