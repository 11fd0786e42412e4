"""Exact linear algebra over a :class:`FieldSpec`."""

import typing

from . import _field
from . import _types


Vector = _field.Vector


def zero_vector(field: _field.FieldSpec, size: int) -> Vector:
    return (field.zero,) * size


def unit_vector(field: _field.FieldSpec, size: int, index: int) -> Vector:
    return tuple(field.one if i == index else field.zero
                 for i in range(size))


def add(first: Vector, second: Vector) -> Vector:
    return tuple(a + b for a, b in zip(first, second))


def sub(first: Vector, second: Vector) -> Vector:
    return tuple(a - b for a, b in zip(first, second))


def scale(factor: _field.Scalar, vector: Vector) -> Vector:
    return tuple(factor * a for a in vector)


def combine(
    field: _field.FieldSpec,
    size: int,
    terms: typing.Iterable[typing.Tuple[_field.Scalar, Vector]],
) -> Vector:
    """Linear combination of vectors, skipping zero coefficients."""
    result = [field.zero] * size
    for coef, vector in terms:
        if not coef:
            continue
        for k, value in enumerate(vector):
            if value:
                result[k] += coef * value
    return tuple(result)


def is_zero(vector: Vector) -> bool:
    return not any(vector)


def _rref(
    rows: typing.Sequence[typing.Sequence[_field.Scalar]],
    ncols: int,
) -> typing.Tuple[typing.List[typing.List[_field.Scalar]], typing.List[int]]:
    """Gauss-Jordan elimination.

    Pivots are only searched for in the first ``ncols`` columns, row
    operations apply to whole rows (so augmented blocks are carried along).

    :return: The reduced rows (non-zero pivot rows first) and pivot columns.
    """
    rows = [list(row) for row in rows]
    pivots: typing.List[int] = []
    rank = 0
    for col in range(ncols):
        if rank == len(rows):
            break
        found = next((i for i in range(rank, len(rows)) if rows[i][col]),
                     None)
        if found is None:
            continue
        rows[rank], rows[found] = rows[found], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [value / pivot for value in rows[rank]]
        for i, row in enumerate(rows):
            factor = row[col]
            if i != rank and factor:
                rows[i] = [a - factor * b for a, b in zip(row, rows[rank])]
        pivots.append(col)
        rank += 1
    return rows, pivots


class Matrix:
    """An immutable dense matrix with exact entries.

    :param field: The ground field.
    :param entries: Rows of scalars (anything the field can convert).
    :param rows: Number of rows, required to be consistent with ``entries``.
    :param cols: Number of columns, required when there are no rows.
    :raises: :class:`DimensionMismatch` on ragged or inconsistent input.
    """

    __slots__ = ('field', 'rows', 'cols', 'entries')

    field: _field.FieldSpec
    """The ground field."""

    rows: int
    """Number of rows (the target dimension of a linear map)."""

    cols: int
    """Number of columns (the source dimension of a linear map)."""

    entries: typing.Tuple[Vector, ...]
    """Row-major entries."""

    def __init__(
        self,
        field: _field.FieldSpec,
        entries: typing.Iterable[typing.Iterable[typing.Any]],
        rows: typing.Optional[int] = None,
        cols: typing.Optional[int] = None,
    ) -> None:
        self.field = field
        self.entries = tuple(tuple(field(value) for value in row)
                             for row in entries)
        if rows is not None and rows != len(self.entries):
            raise _types.DimensionMismatch(
                f"Expected {rows} rows, got {len(self.entries)}")
        self.rows = len(self.entries)
        if cols is None:
            if not self.entries:
                raise _types.DimensionMismatch(
                    "The number of columns of an empty matrix must be given")
            cols = len(self.entries[0])
        if any(len(row) != cols for row in self.entries):
            raise _types.DimensionMismatch(
                f"All rows of a matrix must have {cols} entries")
        self.cols = cols

    @classmethod
    def zero(cls, field: _field.FieldSpec, rows: int, cols: int) -> 'Matrix':
        return cls(field, [[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field: _field.FieldSpec, size: int) -> 'Matrix':
        return cls(field, [unit_vector(field, size, i) for i in range(size)],
                   cols=size)

    @classmethod
    def from_columns(
        cls,
        field: _field.FieldSpec,
        columns: typing.Sequence[Vector],
        rows: int,
    ) -> 'Matrix':
        """Build a matrix from its columns (images of basis vectors)."""
        if any(len(column) != rows for column in columns):
            raise _types.DimensionMismatch(
                f"All columns must have {rows} entries")
        return cls(field, [[column[i] for column in columns]
                           for i in range(rows)], cols=len(columns))

    @classmethod
    def hstack(cls, *blocks: 'Matrix') -> 'Matrix':
        field = _field.check_same(*(block.field for block in blocks))
        rows = blocks[0].rows
        if any(block.rows != rows for block in blocks):
            raise _types.DimensionMismatch(
                "Horizontally stacked blocks must have equal row counts")
        return cls(field,
                   [sum((block.entries[i] for block in blocks), ())
                    for i in range(rows)],
                   cols=sum(block.cols for block in blocks))

    @classmethod
    def vstack(cls, *blocks: 'Matrix') -> 'Matrix':
        field = _field.check_same(*(block.field for block in blocks))
        cols = blocks[0].cols
        if any(block.cols != cols for block in blocks):
            raise _types.DimensionMismatch(
                "Vertically stacked blocks must have equal column counts")
        return cls(field, sum((block.entries for block in blocks), ()),
                   cols=cols)

    @classmethod
    def block_diagonal(cls, *blocks: 'Matrix') -> 'Matrix':
        field = _field.check_same(*(block.field for block in blocks))
        cols = sum(block.cols for block in blocks)
        result = []
        offset = 0
        for block in blocks:
            for row in block.entries:
                full = [field.zero] * cols
                full[offset:offset + block.cols] = row
                result.append(full)
            offset += block.cols
        return cls(field, result, cols=cols)

    def column(self, index: int) -> Vector:
        return tuple(row[index] for row in self.entries)

    def columns(self) -> typing.List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def apply(self, vector: Vector) -> Vector:
        """Multiply by a column vector."""
        if len(vector) != self.cols:
            raise _types.DimensionMismatch(
                f"Expected a vector of length {self.cols}, got {len(vector)}")
        return tuple(
            sum((a * b for a, b in zip(row, vector) if a and b),
                self.field.zero)
            for row in self.entries)

    def transpose(self) -> 'Matrix':
        return Matrix(self.field, self.columns(), cols=self.rows)

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if not isinstance(other, Matrix):
            return NotImplemented
        _field.check_same(self.field, other.field)
        if self.cols != other.rows:
            raise _types.DimensionMismatch(
                f"Cannot multiply {self.rows}x{self.cols} by "
                f"{other.rows}x{other.cols}")
        return Matrix.from_columns(
            self.field, [self.apply(column) for column in other.columns()],
            self.rows)

    def _check_shape(self, other: 'Matrix') -> None:
        _field.check_same(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise _types.DimensionMismatch(
                f"Shapes {self.rows}x{self.cols} and "
                f"{other.rows}x{other.cols} differ")

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check_shape(other)
        return Matrix(self.field, [add(a, b) for a, b
                                   in zip(self.entries, other.entries)],
                      cols=self.cols)

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check_shape(other)
        return Matrix(self.field, [sub(a, b) for a, b
                                   in zip(self.entries, other.entries)],
                      cols=self.cols)

    def __neg__(self) -> 'Matrix':
        return Matrix(self.field, [scale(-1, row) for row in self.entries],
                      cols=self.cols)

    def is_zero(self) -> bool:
        return all(is_zero(row) for row in self.entries)

    def rank(self) -> int:
        return len(_rref(self.entries, self.cols)[1])

    def solver(self) -> 'LinearSolver':
        return LinearSolver(self)

    def inverse(self) -> 'Matrix':
        """The inverse of a square matrix.

        :raises: :class:`InvalidStructure` if the matrix is singular.
        """
        if not is_bijective(self):
            raise _types.InvalidStructure(
                f"A {self.rows}x{self.cols} matrix of rank {self.rank()} "
                "is not invertible")
        solver = self.solver()
        return Matrix.from_columns(
            self.field,
            [solver.solve(unit_vector(self.field, self.rows, i))
             for i in range(self.rows)],
            self.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.cols, self.entries))

    def __repr__(self):
        return (f"Matrix({self.field}, {self.rows}x{self.cols}, "
                f"{[[str(x) for x in row] for row in self.entries]})")


class LinearSolver:
    """A Gauss-Jordan factorization of a matrix, reusable for many
    right-hand sides.

    Stores the reduced form ``R`` and the transform ``T`` with ``T m = R``.
    """

    __slots__ = ('matrix', 'pivots', '_reduced', '_transform')

    def __init__(self, matrix: Matrix) -> None:
        field = matrix.field
        augmented = [
            list(row) + list(unit_vector(field, matrix.rows, i))
            for i, row in enumerate(matrix.entries)
        ]
        rows, pivots = _rref(augmented, matrix.cols)
        self.matrix = matrix
        self.pivots = pivots
        self._reduced = [row[:matrix.cols] for row in rows]
        self._transform = Matrix(field, [row[matrix.cols:] for row in rows],
                                 cols=matrix.rows)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, target: Vector) -> typing.Optional[Vector]:
        """A particular solution of ``m x = target`` or `None`.

        Free variables are set to zero.
        """
        if len(target) != self.matrix.rows:
            raise _types.DimensionMismatch(
                f"Expected a right-hand side of length {self.matrix.rows}, "
                f"got {len(target)}")
        reduced = self._transform.apply(target)
        if any(reduced[self.rank:]):
            return None
        result = [self.matrix.field.zero] * self.matrix.cols
        for row, col in enumerate(self.pivots):
            result[col] = reduced[row]
        return tuple(result)

    def kernel(self) -> 'Subspace':
        field = self.matrix.field
        cols = self.matrix.cols
        free = [col for col in range(cols) if col not in self.pivots]
        vectors = []
        for col in free:
            vector = [field.zero] * cols
            vector[col] = field.one
            for row, pivot in enumerate(self.pivots):
                vector[pivot] = -self._reduced[row][col]
            vectors.append(tuple(vector))
        return Subspace(field, cols, vectors)


class Subspace:
    """A linear subspace held by its reduced row-echelon basis.

    The echelon basis is the unique canonical representative, so equality
    does not depend on the spanning vectors given.

    :param field: The ground field.
    :param ambient_dim: Dimension of the ambient space.
    :param vectors: Any spanning vectors.
    """

    __slots__ = ('field', 'ambient_dim', 'basis', 'pivots')

    field: _field.FieldSpec
    """The ground field."""

    ambient_dim: int
    """Dimension of the ambient space."""

    basis: typing.Tuple[Vector, ...]
    """Canonical basis in reduced row-echelon form."""

    pivots: typing.Tuple[int, ...]
    """Pivot column of each basis vector."""

    def __init__(
        self,
        field: _field.FieldSpec,
        ambient_dim: int,
        vectors: typing.Iterable[Vector] = (),
    ) -> None:
        vectors = [tuple(field(value) for value in vector)
                   for vector in vectors]
        if any(len(vector) != ambient_dim for vector in vectors):
            raise _types.DimensionMismatch(
                f"Spanning vectors must have {ambient_dim} entries")
        rows, pivots = _rref(vectors, ambient_dim)
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(row) for row in rows[:len(pivots)])
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, field: _field.FieldSpec, ambient_dim: int) -> 'Subspace':
        return cls(field, ambient_dim)

    @classmethod
    def full(cls, field: _field.FieldSpec, ambient_dim: int) -> 'Subspace':
        return cls(field, ambient_dim,
                   [unit_vector(field, ambient_dim, i)
                    for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _residual(self, vector: Vector) -> Vector:
        return sub(vector, self.vector(self._raw_coordinates(vector)))

    def _raw_coordinates(self, vector: Vector) -> Vector:
        if len(vector) != self.ambient_dim:
            raise _types.DimensionMismatch(
                f"Expected a vector of length {self.ambient_dim}, "
                f"got {len(vector)}")
        return tuple(vector[pivot] for pivot in self.pivots)

    def contains(self, vector: Vector) -> bool:
        return is_zero(self._residual(vector))

    def __contains__(self, vector: Vector) -> bool:
        return self.contains(vector)

    def coordinates(self, vector: Vector) -> Vector:
        """Coordinates of a member in the canonical basis.

        :raises: :class:`InconsistentStructure` if the vector is not in the
            subspace.
        """
        coordinates = self._raw_coordinates(vector)
        if not is_zero(sub(vector, self.vector(coordinates))):
            raise _types.InconsistentStructure(
                f"Vector {[str(x) for x in vector]} is not in the subspace")
        return coordinates

    def vector(self, coordinates: Vector) -> Vector:
        """The member with the given coordinates."""
        return combine(self.field, self.ambient_dim,
                       zip(coordinates, self.basis))

    def inclusion(self) -> Matrix:
        """The ``ambient_dim x dim`` matrix whose columns are the basis."""
        return Matrix.from_columns(self.field, self.basis, self.ambient_dim)

    def projector(self) -> Matrix:
        """The ``dim x ambient_dim`` matrix of :meth:`coordinates`.

        Only meaningful on members of the subspace.
        """
        return Matrix(self.field,
                      [unit_vector(self.field, self.ambient_dim, pivot)
                       for pivot in self.pivots],
                      cols=self.ambient_dim)

    def span(self, other: 'Subspace') -> 'Subspace':
        """The sum of two subspaces."""
        self._check(other)
        return Subspace(self.field, self.ambient_dim,
                        self.basis + other.basis)

    def intersection(self, other: 'Subspace') -> 'Subspace':
        self._check(other)
        combined = Matrix.from_columns(
            self.field,
            list(self.basis) + [scale(-1, vector) for vector in other.basis],
            self.ambient_dim)
        kernel = combined.solver().kernel()
        return Subspace(
            self.field, self.ambient_dim,
            [self.vector(solution[:self.dim]) for solution in kernel.basis])

    def is_subspace_of(self, other: 'Subspace') -> bool:
        self._check(other)
        return all(other.contains(vector) for vector in self.basis)

    def _check(self, other: 'Subspace') -> None:
        _field.check_same(self.field, other.field)
        if self.ambient_dim != other.ambient_dim:
            raise _types.DimensionMismatch(
                f"Subspaces of {self.ambient_dim}- and "
                f"{other.ambient_dim}-dimensional spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return (f"Subspace({self.field}, dim {self.dim} of "
                f"{self.ambient_dim}, "
                f"{[[str(x) for x in row] for row in self.basis]})")


def kernel_image(matrix: Matrix) -> typing.Tuple[Subspace, Subspace]:
    """Kernel and image of a matrix as canonical subspaces."""
    kernel = matrix.solver().kernel()
    image = Subspace(matrix.field, matrix.rows, matrix.columns())
    return kernel, image


def solve(matrix: Matrix, target: Vector) -> typing.Optional[Vector]:
    """A particular solution of ``matrix x = target``.

    :return: The solution or `None` if ``target`` is not in the image.
    :raises: :class:`DimensionMismatch` if ``target`` has the wrong length.
    """
    return matrix.solver().solve(target)


def pullback_basis(first: Matrix, second: Matrix) -> Subspace:
    """The subspace ``{(u, v) : first(u) = second(v)}`` of ``U + V``.

    :raises: :class:`DimensionMismatch` if the targets differ.
    """
    _field.check_same(first.field, second.field)
    if first.rows != second.rows:
        raise _types.DimensionMismatch(
            f"Pullback of maps into {first.rows}- and "
            f"{second.rows}-dimensional spaces")
    return Matrix.hstack(first, -second).solver().kernel()


def is_bijective(matrix: Matrix) -> bool:
    return matrix.rows == matrix.cols and matrix.rank() == matrix.cols
