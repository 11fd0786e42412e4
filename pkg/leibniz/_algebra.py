"""Leibniz algebras given by structure constants, and their morphisms."""

import itertools
import typing

from . import _field
from . import _linalg
from . import _report
from . import _types


Vector = _field.Vector

_Sparse = typing.Tuple[typing.Tuple[int, _field.Scalar], ...]


class StructureConstants:
    """A candidate bracket: a rank-3 tensor that has not been validated.

    ``table[i][j][k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.

    :param field: The ground field.
    :param table: An ``n x n x n`` nested sequence of scalars.
    :param basis: Basis labels, ``e1..en`` by default.
    :raises: :class:`DimensionMismatch` if the tensor is not cubic.
    """

    __slots__ = ('field', 'dim', 'table', 'basis', '_sparse')

    verified = False
    """Whether the Leibniz identity has been checked."""

    field: _field.FieldSpec
    """The ground field."""

    dim: int
    """Dimension of the underlying space."""

    table: typing.Tuple[typing.Tuple[Vector, ...], ...]
    """The structure constants, ``table[i][j]`` is ``[e_i, e_j]``."""

    basis: typing.Tuple[str, ...]
    """Basis labels."""

    def __init__(
        self,
        field: _field.FieldSpec,
        table: typing.Sequence[typing.Sequence[typing.Sequence[typing.Any]]],
        basis: typing.Optional[typing.Sequence[str]] = None,
    ) -> None:
        dim = len(table)
        if any(len(row) != dim or any(len(out) != dim for out in row)
               for row in table):
            raise _types.DimensionMismatch(
                f"Structure constants must form a {dim}x{dim}x{dim} tensor")
        if basis is None:
            basis = [f"e{i + 1}" for i in range(dim)]
        elif len(basis) != dim or len(set(basis)) != dim:
            raise _types.DimensionMismatch(
                f"Expected {dim} distinct basis labels, got {list(basis)}")

        self.field = field
        self.dim = dim
        self.table = tuple(tuple(tuple(field(x) for x in out) for out in row)
                           for row in table)
        self.basis = tuple(basis)
        self._sparse: typing.Tuple[typing.Tuple[_Sparse, ...], ...] = tuple(
            tuple(tuple((k, c) for k, c in enumerate(out) if c)
                  for out in row)
            for row in self.table)

    @classmethod
    def from_brackets(
        cls,
        field: _field.FieldSpec,
        dim: int,
        brackets: typing.Mapping[typing.Tuple[int, int],
                                 typing.Mapping[int, typing.Any]],
        basis: typing.Optional[typing.Sequence[str]] = None,
    ):
        """Build from sparse brackets ``{(i, j): {k: coefficient}}``.

        Omitted pairs are zero, indices are 0-based.
        """
        table = [[[field.zero] * dim for _ in range(dim)]
                 for _ in range(dim)]
        for (i, j), out in brackets.items():
            for k, value in out.items():
                table[i][j][k] = field(value)
        return cls(field, table, basis=basis)

    @classmethod
    def zero(cls, field: _field.FieldSpec, dim: int, basis=None):
        return cls.from_brackets(field, dim, {}, basis=basis)

    def unit(self, index: int) -> Vector:
        return _linalg.unit_vector(self.field, self.dim, index)

    def units(self) -> typing.List[Vector]:
        return [self.unit(i) for i in range(self.dim)]

    def zero_vector(self) -> Vector:
        return _linalg.zero_vector(self.field, self.dim)

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """Evaluate ``[x, y]`` by bilinearity."""
        if len(x) != self.dim or len(y) != self.dim:
            raise _types.DimensionMismatch(
                f"Bracket of a {self.dim}-dimensional algebra applied to "
                f"vectors of lengths {len(x)} and {len(y)}")
        result = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._sparse[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                coef = xi * yj
                for k, c in row[j]:
                    result[k] += coef * c
        return tuple(result)

    def is_abelian(self) -> bool:
        return not any(out for row in self._sparse for out in row)

    def __eq__(self, other):
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.field == other.field and self.table == other.table

    def __hash__(self):
        return hash((self.field, self.table))

    def __repr__(self):
        return (f"{self.__class__.__name__}({self.field}, dim {self.dim}, "
                f"basis {list(self.basis)})")


def _leibniz_failures(c: StructureConstants) -> typing.Iterator[
        typing.Tuple[int, int, int]]:
    """Basis triples violating [x,[y,z]] = [[x,y],z] - [[x,z],y]."""
    units = c.units()
    for i, j, k in itertools.product(range(c.dim), repeat=3):
        lhs = c.bracket(units[i], c.table[j][k])
        rhs = _linalg.sub(c.bracket(c.table[i][j], units[k]),
                          c.bracket(c.table[i][k], units[j]))
        if lhs != rhs:
            yield i, j, k


def validate_algebra(c: StructureConstants) -> _report.Report:
    """Check the Leibniz identity and classify a candidate bracket.

    ``lie`` uses the polarized form of ``[x, x] = 0`` (zero diagonal and
    ``[e_i, e_j] + [e_j, e_i] = 0``), which is correct in characteristic 2.
    """
    leibniz_ok = next(_leibniz_failures(c), None) is None
    lie = (all(not any(c.table[i][i]) for i in range(c.dim))
           and all(not any(_linalg.add(c.table[i][j], c.table[j][i]))
                   for i, j in itertools.combinations(range(c.dim), 2)))
    return _report.Report(
        'algebra',
        {'leibniz_ok': leibniz_ok, 'abelian': c.is_abelian(), 'lie': lie},
        informational=('abelian', 'lie'),
        note=f"identity checked on all {c.dim ** 3} basis triples; "
             "bilinearity extends it, no sampling involved")


class LeibnizAlgebra(StructureConstants):
    """A validated Leibniz algebra.

    Accepts the same arguments as :class:`StructureConstants`.

    :raises: :class:`InvalidStructure` if the Leibniz identity fails.
    """

    __slots__ = ()

    verified = True

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        failure = next(_leibniz_failures(self), None)
        if failure is not None:
            raise _types.InvalidStructure(
                "The Leibniz identity fails on basis triple "
                f"{tuple(self.basis[i] for i in failure)}",
                report=validate_algebra(self))

    @classmethod
    def from_constants(cls, c: StructureConstants) -> 'LeibnizAlgebra':
        if isinstance(c, LeibnizAlgebra):
            return c
        return cls(c.field, c.table, basis=c.basis)


def abelian(field: _field.FieldSpec, dim: int,
            basis: typing.Optional[typing.Sequence[str]] = None
            ) -> LeibnizAlgebra:
    """The abelian algebra of the given dimension."""
    return LeibnizAlgebra.from_brackets(field, dim, {}, basis=basis)


def bracket(a: StructureConstants, x: Vector, y: Vector) -> Vector:
    return a.bracket(x, y)


class LinearMorphism:
    """A linear map between the underlying spaces of two algebras.

    :param source: The source algebra.
    :param target: The target algebra.
    :param matrix: A ``target.dim x source.dim`` matrix.
    :raises: :class:`FieldMismatch` or :class:`DimensionMismatch`.
    """

    __slots__ = ('source', 'target', 'matrix')

    source: LeibnizAlgebra
    """The source algebra."""

    target: LeibnizAlgebra
    """The target algebra."""

    matrix: _linalg.Matrix
    """The matrix, columns are images of the source basis."""

    def __init__(
        self,
        source: LeibnizAlgebra,
        target: LeibnizAlgebra,
        matrix: _linalg.Matrix,
    ) -> None:
        _field.check_same(source.field, target.field, matrix.field)
        if (matrix.rows, matrix.cols) != (target.dim, source.dim):
            raise _types.DimensionMismatch(
                f"A map from dimension {source.dim} to {target.dim} needs "
                f"a {target.dim}x{source.dim} matrix, got "
                f"{matrix.rows}x{matrix.cols}")
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, algebra: LeibnizAlgebra) -> 'LinearMorphism':
        return cls(algebra, algebra,
                   _linalg.Matrix.identity(algebra.field, algebra.dim))

    @classmethod
    def zero(cls, source: LeibnizAlgebra,
             target: LeibnizAlgebra) -> 'LinearMorphism':
        return cls(source, target,
                   _linalg.Matrix.zero(source.field, target.dim, source.dim))

    @property
    def field(self) -> _field.FieldSpec:
        return self.source.field

    def __call__(self, vector: Vector) -> Vector:
        return self.matrix.apply(vector)

    def compose(self, other: 'LinearMorphism') -> 'LinearMorphism':
        """``self`` after ``other``."""
        if other.target != self.source:
            raise _types.NotComposable(
                "The target of the inner map is not the source of the outer")
        return LinearMorphism(other.source, self.target,
                              self.matrix @ other.matrix)

    def is_leibniz(self) -> bool:
        return check_morphism(self)

    def is_bijective(self) -> bool:
        return _linalg.is_bijective(self.matrix)

    def inverse(self) -> 'LinearMorphism':
        return LinearMorphism(self.target, self.source,
                              self.matrix.inverse())

    def __eq__(self, other):
        if not isinstance(other, LinearMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return (f"LinearMorphism({self.source.dim} -> {self.target.dim}, "
                f"{self.matrix!r})")


def check_morphism(f: LinearMorphism) -> bool:
    """Whether ``f[x, y] = [f(x), f(y)]`` on all basis pairs."""
    _field.check_same(f.source.field, f.target.field)
    images = f.matrix.columns()
    return all(
        f(f.source.table[i][j])
        == f.target.bracket(images[i], images[j])
        for i, j in itertools.product(range(f.source.dim), repeat=2))


def is_ideal(a: StructureConstants, s: _linalg.Subspace) -> bool:
    """Whether ``[a, s]`` and ``[s, a]`` lie in ``s``."""
    if s.ambient_dim != a.dim:
        raise _types.DimensionMismatch(
            f"A subspace of a {s.ambient_dim}-dimensional space is not in "
            f"a {a.dim}-dimensional algebra")
    units = a.units()
    return all(s.contains(a.bracket(unit, vector))
               and s.contains(a.bracket(vector, unit))
               for unit in units for vector in s.basis)


def subalgebra(
    a: LeibnizAlgebra,
    s: _linalg.Subspace,
    basis: typing.Optional[typing.Sequence[str]] = None,
) -> typing.Tuple[LeibnizAlgebra, LinearMorphism]:
    """Realize a bracket-closed subspace as an algebra.

    The subalgebra is written in the coordinates of the canonical basis of
    ``s``.

    :return: The subalgebra and its inclusion into ``a``.
    :raises: :class:`InvalidStructure` if ``s`` is not closed.
    """
    _field.check_same(a.field, s.field)
    table = []
    for u in s.basis:
        row = []
        for v in s.basis:
            value = a.bracket(u, v)
            if not s.contains(value):
                raise _types.InvalidStructure(
                    "The subspace is not closed under the bracket")
            row.append(s.coordinates(value))
        table.append(row)
    if basis is None:
        basis = [f"s{i + 1}" for i in range(s.dim)]
    sub = LeibnizAlgebra(a.field, table, basis=basis)
    return sub, LinearMorphism(sub, a, s.inclusion())


def direct_product(a: LeibnizAlgebra, b: LeibnizAlgebra) -> LeibnizAlgebra:
    """The componentwise product ``a x b``, ``a`` coordinates first."""
    field = _field.check_same(a.field, b.field)
    dim = a.dim + b.dim
    brackets = {}
    for i, j in itertools.product(range(a.dim), repeat=2):
        brackets[i, j] = dict(enumerate(a.table[i][j]))
    for i, j in itertools.product(range(b.dim), repeat=2):
        brackets[a.dim + i, a.dim + j] = {
            a.dim + k: value for k, value in enumerate(b.table[i][j])}
    names = ([f"({name},0)" for name in a.basis]
             + [f"(0,{name})" for name in b.basis])
    return LeibnizAlgebra.from_brackets(field, dim, brackets, basis=names)


def product_projections(
    a: LeibnizAlgebra,
    b: LeibnizAlgebra,
) -> typing.Tuple[LinearMorphism, LinearMorphism]:
    product = direct_product(a, b)
    field = a.field
    first = _linalg.Matrix.hstack(_linalg.Matrix.identity(field, a.dim),
                                  _linalg.Matrix.zero(field, a.dim, b.dim))
    second = _linalg.Matrix.hstack(_linalg.Matrix.zero(field, b.dim, a.dim),
                                   _linalg.Matrix.identity(field, b.dim))
    return (LinearMorphism(product, a, first),
            LinearMorphism(product, b, second))


def product_injections(
    a: LeibnizAlgebra,
    b: LeibnizAlgebra,
) -> typing.Tuple[LinearMorphism, LinearMorphism]:
    first, second = product_projections(a, b)
    return (LinearMorphism(a, first.source, first.matrix.transpose()),
            LinearMorphism(b, second.source, second.matrix.transpose()))


def change_basis(
    a: LeibnizAlgebra,
    transform: _linalg.Matrix,
) -> typing.Tuple[LeibnizAlgebra, LinearMorphism]:
    """Transport ``a`` along an invertible matrix.

    The new bracket is ``[x, y] = t [t^-1 x, t^-1 y]``.

    :return: The transported algebra and the isomorphism ``t`` onto it.
    """
    inverse = transform.inverse()
    columns = inverse.columns()
    table = [[transform.apply(a.bracket(x, y)) for y in columns]
             for x in columns]
    image = LeibnizAlgebra(a.field, table, basis=a.basis)
    return image, LinearMorphism(a, image, transform)
