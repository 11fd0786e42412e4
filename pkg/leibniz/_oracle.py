"""Exhaustive enumeration of small structures over prime fields."""

import functools
import itertools
import logging
import random
import typing

from . import _action
from . import _algebra
from . import _field
from . import _linalg
from . import _types
from . import _xmod


LOG = logging.getLogger(__name__)

DEFAULT_BUDGET = 4096
"""Maximum number of candidates of one enumeration: bracket tables,
boundaries, or linear solutions for the action of one generator."""

Vector = _field.Vector


def _prime_field(p: int) -> _field.FieldSpec:
    return _field.FieldSpec.prime(p)


def _check_budget(count: int, budget: int, what: str) -> None:
    if count > budget:
        raise _types.BudgetExceeded(
            f"Enumerating {what} needs {count} candidates, the budget is "
            f"{budget}")


def naive_leibniz(field: _field.FieldSpec, table) -> bool:
    """Check the Leibniz identity coefficient by coefficient.

    Independent of :func:`validate_algebra`: expands both sides of
    ``[x,[y,z]] = [[x,y],z] - [[x,z],y]`` with plain nested loops.
    """
    n = len(table)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for out in range(n):
                    total = field.zero
                    for m in range(n):
                        total += table[j][k][m] * table[i][m][out]
                        total -= table[i][j][m] * table[m][k][out]
                        total += table[i][k][m] * table[m][j][out]
                    if total:
                        return False
    return True


def enumerate_leibniz(
    dim: int, p: int, budget: int = DEFAULT_BUDGET,
) -> typing.Tuple[int, typing.List[_algebra.LeibnizAlgebra]]:
    """All Leibniz brackets on a ``dim``-dimensional space over GF(p).

    Results are in lexicographic order of the flattened tensor.

    :raises: :class:`BudgetExceeded` if ``p ** dim ** 3`` exceeds the
        budget.
    """
    field = _prime_field(p)
    size = dim ** 3
    _check_budget(p ** size, budget, f"{dim}-dimensional brackets")
    found = []
    for flat in itertools.product(field.elements(), repeat=size):
        table = [[list(flat[(i * dim + j) * dim:(i * dim + j + 1) * dim])
                  for j in range(dim)] for i in range(dim)]
        if naive_leibniz(field, table):
            found.append(_algebra.LeibnizAlgebra(field, table))
    LOG.debug('%s of %s brackets of dimension %s over GF(%s) are Leibniz',
              len(found), p ** size, dim, p)
    return len(found), found


class AffineSpace:
    """The solutions ``point + span(directions)`` of a linear system."""

    __slots__ = ('field', 'point', 'directions')

    def __init__(self, field: _field.FieldSpec, point: Vector,
                 directions: typing.Sequence[Vector]) -> None:
        self.field = field
        self.point = point
        self.directions = tuple(directions)

    @property
    def size(self) -> int:
        return self.field.p ** len(self.directions)

    def __iter__(self) -> typing.Iterator[Vector]:
        elements = self.field.elements()
        for coefficients in itertools.product(elements,
                                              repeat=len(self.directions)):
            result = self.point
            for coefficient, direction in zip(coefficients, self.directions):
                if coefficient:
                    result = _linalg.add(
                        result, _linalg.scale(coefficient, direction))
            yield result


def solve_affine(
    field: _field.FieldSpec,
    unknowns: int,
    residuals: typing.Callable[[Vector], typing.Iterable[Vector]],
) -> typing.Optional[AffineSpace]:
    """Solve ``residuals(u) = 0`` for an affine ``residuals``.

    The system is recovered by evaluating at zero and at unit vectors.

    :return: The solution space or `None` if there is no solution.
    """
    def flatten(vector: Vector) -> Vector:
        return tuple(value for residual in residuals(vector)
                     for value in residual)

    constant = flatten(_linalg.zero_vector(field, unknowns))
    columns = [_linalg.sub(flatten(_linalg.unit_vector(field, unknowns, i)),
                           constant)
               for i in range(unknowns)]
    system = _linalg.Matrix.from_columns(field, columns, len(constant))
    solver = system.solver()
    point = solver.solve(_linalg.scale(-1, constant))
    if point is None:
        return None
    return AffineSpace(field, point, solver.kernel().basis)



def _require_prime(*algebras: _algebra.LeibnizAlgebra) -> _field.FieldSpec:
    field = _field.check_same(*(a.field for a in algebras))
    if not field.is_prime:
        raise _types.Error("Enumeration needs a prime field")
    return field


IntVector = typing.Tuple[int, ...]
IntOperator = typing.Tuple[IntVector, ...]
"""A square matrix of residues; ``op[k][j]`` is coordinate k of op(f_j)."""

Assignment = typing.List[typing.Optional[IntOperator]]
Check = typing.Callable[[Assignment, Assignment], bool]


def _int_table(algebra: _algebra.LeibnizAlgebra) -> typing.Tuple[
        typing.Tuple[IntVector, ...], ...]:
    return tuple(tuple(tuple(int(value) for value in out) for out in row)
                 for row in algebra.table)


def _int_unit(size: int, index: int) -> IntVector:
    return tuple(int(k == index) for k in range(size))


def _bracket(table, size: int, p: int, u: IntVector,
             v: IntVector) -> IntVector:
    result = [0] * size
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if vj:
                for k, value in enumerate(table[i][j]):
                    result[k] += ui * vj * value
    return tuple(value % p for value in result)


def _apply(op: IntOperator, v: IntVector, p: int) -> IntVector:
    return tuple(sum(c * x for c, x in zip(row, v)) % p for row in op)


def _product(first: IntOperator, second: IntOperator,
             p: int) -> IntOperator:
    columns = list(zip(*second))
    return tuple(tuple(sum(x * y for x, y in zip(row, column)) % p
                       for column in columns)
                 for row in first)


def _add(first: IntOperator, second: IntOperator, p: int) -> IntOperator:
    return tuple(tuple((x + y) % p for x, y in zip(row, other))
                 for row, other in zip(first, second))


def _difference(first: IntVector, second: IntVector, p: int) -> IntVector:
    return tuple((x - y) % p for x, y in zip(first, second))


def _combination(coefficients: IntVector, ops: Assignment, size: int,
                 p: int) -> IntOperator:
    result = [[0] * size for _ in range(size)]
    for coefficient, op in zip(coefficients, ops):
        if not coefficient:
            continue
        assert op is not None
        for k in range(size):
            for j in range(size):
                result[k][j] += coefficient * op[k][j]
    return tuple(tuple(value % p for value in row) for row in result)


def _from_columns(columns: typing.Sequence[IntVector],
                  rows: int) -> IntOperator:
    return tuple(tuple(column[k] for column in columns) for k in range(rows))


def _support(vector: IntVector) -> typing.FrozenSet[int]:
    return frozenset(index for index, value in enumerate(vector) if value)


class _ActionSearch:
    """Search for the actions of ``actor`` on ``actee`` over GF(p).

    The generator ``e_a`` of the actor acts by two operators on the actee,
    ``lam[a]`` for ``e_a . m`` and ``rho[a]`` for ``m . e_a``. The linear
    axioms only involve the bracket of the actee, so their solutions are
    computed once and shared by all generators. Every other condition is
    checked as soon as the generators it involves are assigned; conditions
    on a single generator filter its candidates up front.

    :raises: :class:`BudgetExceeded` if the solutions of the linear axioms
        exceed the budget.
    """

    def __init__(self, actor: _algebra.LeibnizAlgebra,
                 actee: _algebra.LeibnizAlgebra, budget: int) -> None:
        self.field = _require_prime(actor, actee)
        self.p = typing.cast(int, self.field.p)
        self.actor = actor
        self.actee = actee
        self.n, self.m = actor.dim, actee.dim
        self.actor_table = _int_table(actor)
        self.actee_table = _int_table(actee)
        self.order = self._generator_order()

        shared: typing.List[typing.List[Check]] = [[] for _ in range(self.n)]
        self.coupled: typing.List[typing.Tuple[typing.FrozenSet[int],
                                               Check]] = []
        for a, b in itertools.product(range(self.n), repeat=2):
            involved = (frozenset((a, b))
                        | _support(self.actor_table[a][b]))
            check = functools.partial(self._axioms_hold, a, b)
            if involved == {a}:
                shared[a].append(check)
            else:
                self.coupled.append((involved, check))

        self.base: typing.List[typing.List[
            typing.Tuple[IntOperator, IntOperator]]] = []
        if self.n:
            space = solve_affine(self.field, 2 * self.m * self.m,
                                 self._linear_residuals)
            assert space is not None, "zero always solves the linear axioms"
            _check_budget(space.size, budget, 'actions')
            operators = [self._split([int(value) for value in vector])
                         for vector in space]
            self.base = [
                [pair for pair in operators
                 if all(check(*self._single(a, pair))
                        for check in shared[a])]
                for a in range(self.n)]
            LOG.debug('%s linear solutions, %s candidates per generator',
                      space.size, [len(found) for found in self.base])

    def _generator_order(self) -> typing.List[int]:
        # generators occurring in brackets first, so that the conditions
        # they appear in are checked early
        counts = [sum(1 for row in self.actor_table for out in row
                      if out[a])
                  for a in range(self.n)]
        return sorted(range(self.n), key=lambda a: -counts[a])

    def _split(self, values: typing.Sequence[int]) -> typing.Tuple[
            IntOperator, IntOperator]:
        m = self.m
        lam = tuple(tuple(values[k * m + j] for j in range(m))
                    for k in range(m))
        rho = tuple(tuple(values[m * m + k * m + j] for j in range(m))
                    for k in range(m))
        return lam, rho

    def _single(self, a: int, pair: typing.Tuple[IntOperator, IntOperator]
                ) -> typing.Tuple[Assignment, Assignment]:
        lam: Assignment = [None] * self.n
        rho: Assignment = [None] * self.n
        lam[a], rho[a] = pair
        return lam, rho

    def _linear_residuals(self, unknowns: Vector) -> typing.Iterator[Vector]:
        lam, rho = self._split([int(value) for value in unknowns])
        p, m, table = self.p, self.m, self.actee_table

        def bracket(u, v):
            return _bracket(table, m, p, u, v)

        units = [_int_unit(m, j) for j in range(m)]
        for u, v in itertools.product(units, repeat=2):
            uv = bracket(u, v)
            lu, lv = _apply(lam, u, p), _apply(lam, v, p)
            ru = _apply(rho, u, p)
            residuals = (
                # x.[u,v] = [x.u, v] - [x.v, u]
                _difference(_apply(lam, uv, p),
                            _difference(bracket(lu, v), bracket(lv, u), p),
                            p),
                # [u, x.v] = [u.x, v] - [u,v].x
                _difference(bracket(u, lv),
                            _difference(bracket(ru, v), _apply(rho, uv, p),
                                        p),
                            p),
                # [u, v.x] = [u,v].x - [u.x, v]
                _difference(bracket(u, _apply(rho, v, p)),
                            _difference(_apply(rho, uv, p), bracket(ru, v),
                                        p),
                            p),
            )
            for residual in residuals:
                yield tuple(self.field(value) for value in residual)

    def _axioms_hold(self, a: int, b: int, lam: Assignment,
                     rho: Assignment) -> bool:
        """The quadratic axioms for ``x = e_a`` and ``y = e_b``."""
        p, m = self.p, self.m
        coefficients = self.actor_table[a][b]
        lam_ab = _combination(coefficients, lam, m, p)
        rho_ab = _combination(coefficients, rho, m, p)
        la, lb, ra, rb = lam[a], lam[b], rho[a], rho[b]
        assert la is not None and lb is not None
        assert ra is not None and rb is not None
        rb_la = _product(rb, la, p)
        # x.(y.m) = [x,y].m - (x.m).y
        if _add(_product(la, lb, p), rb_la, p) != lam_ab:
            return False
        # x.(m.y) = (x.m).y - [x,y].m
        if _add(_product(la, rb, p), lam_ab, p) != rb_la:
            return False
        # m.[x,y] = (m.x).y - (m.y).x
        return _add(rho_ab, _product(ra, rb, p), p) == _product(rb, ra, p)

    def _equivariant(self, a: int, boundary: IntOperator, left: IntOperator,
                     right: IntOperator, lam: Assignment,
                     rho: Assignment) -> bool:
        """``d(y.m) = [y, d m]`` and ``d(m.y) = [d m, y]`` for ``y = e_a``.
        """
        la, ra = lam[a], rho[a]
        assert la is not None and ra is not None
        return (_product(boundary, la, self.p) == left
                and _product(boundary, ra, self.p) == right)

    def _peiffer(self, image: IntVector, left: IntOperator,
                 right: IntOperator, lam: Assignment,
                 rho: Assignment) -> bool:
        """``d(n).m = [n, m]`` and ``m.d(n) = [m, n]`` for a fixed n."""
        return (_combination(image, lam, self.m, self.p) == left
                and _combination(image, rho, self.m, self.p) == right)

    def _boundary_conditions(self, boundary: IntOperator) -> typing.Iterator[
            typing.Tuple[typing.FrozenSet[int], Check]]:
        p, n, m = self.p, self.n, self.m
        images = [tuple(row[j] for row in boundary) for j in range(m)]
        for a in range(n):
            unit = _int_unit(n, a)
            left = _from_columns(
                [_bracket(self.actor_table, n, p, unit, image)
                 for image in images], n)
            right = _from_columns(
                [_bracket(self.actor_table, n, p, image, unit)
                 for image in images], n)
            yield frozenset((a,)), functools.partial(
                self._equivariant, a, boundary, left, right)
        units = [_int_unit(m, j) for j in range(m)]
        for l, image in enumerate(images):
            left = _from_columns(
                [_bracket(self.actee_table, m, p, units[l], unit)
                 for unit in units], m)
            right = _from_columns(
                [_bracket(self.actee_table, m, p, unit, units[l])
                 for unit in units], m)
            yield _support(image), functools.partial(
                self._peiffer, image, left, right)

    def _action(self, lam: Assignment,
                rho: Assignment) -> _action.LeibnizAction:
        m = self.m
        left = [[tuple(op[k][j] for k in range(m)) for j in range(m)]
                for op in typing.cast(typing.List[IntOperator], lam)]
        right = [[tuple(op[k][j] for k in range(m))
                  for op in typing.cast(typing.List[IntOperator], rho)]
                 for j in range(m)]
        return _action.LeibnizAction(self.actor, self.actee, left, right)

    def run(self, boundary: typing.Optional[IntOperator] = None
            ) -> "typing.List[_action.LeibnizAction]":
        """All actions, compatible with ``boundary`` if one is given.

        :param boundary: A ``dim actor x dim actee`` matrix of residues
            making the result the actions of crossed modules.
        """
        constraints = list(self.coupled)
        if boundary is not None:
            constraints.extend(self._boundary_conditions(boundary))

        stage_of = {a: stage for stage, a in enumerate(self.order)}
        upfront: typing.List[Check] = []
        local: typing.List[typing.List[Check]] = [[] for _ in range(self.n)]
        staged: typing.List[typing.List[Check]] = [[] for _ in range(self.n)]
        for involved, check in constraints:
            if not involved:
                upfront.append(check)
            elif len(involved) == 1:
                local[next(iter(involved))].append(check)
            else:
                staged[max(stage_of[a] for a in involved)].append(check)

        empty: Assignment = [None] * self.n
        if not all(check(empty, empty) for check in upfront):
            return []
        candidates = [
            [pair for pair in self.base[a]
             if all(check(*self._single(a, pair)) for check in local[a])]
            for a in range(self.n)]

        assigned = [(empty, empty)]
        for stage, a in enumerate(self.order):
            extended = []
            for lam, rho in assigned:
                for new_lam, new_rho in candidates[a]:
                    lam_next, rho_next = list(lam), list(rho)
                    lam_next[a], rho_next[a] = new_lam, new_rho
                    if all(check(lam_next, rho_next)
                           for check in staged[stage]):
                        extended.append((lam_next, rho_next))
            assigned = extended
            if not assigned:
                break
        return [self._action(lam, rho) for lam, rho in assigned]


def _flat(values: typing.Iterable[typing.Any]) -> typing.Tuple[int, ...]:
    return tuple(int(value) for value in values)


def action_sort_key(act: _action.LeibnizAction) -> typing.Tuple[int, ...]:
    """The entries of ``lam`` followed by those of ``rho``."""
    return (_flat(value for row in act.lam for out in row for value in out)
            + _flat(value for row in act.rho for out in row
                    for value in out))


def xmod_sort_key(x: _xmod.CrossedModule) -> typing.Tuple[int, ...]:
    """The boundary entries followed by :func:`action_sort_key`."""
    return (_flat(value for row in x.boundary.matrix.entries
                  for value in row)
            + action_sort_key(x.action))


def enumerate_actions(
    actor: _algebra.LeibnizAlgebra,
    actee: _algebra.LeibnizAlgebra,
    budget: int = DEFAULT_BUDGET,
) -> typing.List[_action.LeibnizAction]:
    """All actions of ``actor`` on ``actee`` over GF(p).

    Results are in lexicographic order of :func:`action_sort_key`.

    :raises: :class:`BudgetExceeded` if the solutions of the linear axioms
        for a single generator exceed the budget.
    """
    found = _ActionSearch(actor, actee, budget).run()
    found.sort(key=action_sort_key)
    LOG.debug('%s actions of a %s-dimensional algebra on a %s-dimensional '
              'one', len(found), actor.dim, actee.dim)
    return found


def _all_matrices(field: _field.FieldSpec, rows: int,
                  cols: int) -> typing.Iterator[_linalg.Matrix]:
    for flat in itertools.product(field.elements(), repeat=rows * cols):
        yield _linalg.Matrix(
            field, [flat[r * cols:(r + 1) * cols] for r in range(rows)],
            cols=cols)


def enumerate_xmods(
    l1: _algebra.LeibnizAlgebra,
    l0: _algebra.LeibnizAlgebra,
    budget: int = DEFAULT_BUDGET,
) -> typing.List[_xmod.CrossedModule]:
    """All crossed modules ``L1 -> L0`` over GF(p).

    Boundaries are all morphisms whose image is an ideal of L0; for each
    of them the actions satisfying both crossed module conditions are
    searched generator by generator. Results are in lexicographic order of
    :func:`xmod_sort_key`.

    :raises: :class:`BudgetExceeded` if there are too many boundaries or
        the solutions of the linear action axioms exceed the budget.
    """
    field = _require_prime(l1, l0)
    _check_budget(field.p ** (l1.dim * l0.dim), budget, 'boundaries')
    search = _ActionSearch(l0, l1, budget)
    found = []
    boundaries = 0
    for matrix in _all_matrices(field, l0.dim, l1.dim):
        boundary = _algebra.LinearMorphism(l1, l0, matrix)
        if not _algebra.check_morphism(boundary):
            continue
        _kernel, image = _linalg.kernel_image(matrix)
        if not _algebra.is_ideal(l0, image):
            continue
        boundaries += 1
        entries = tuple(tuple(int(value) for value in row)
                        for row in matrix.entries)
        found.extend(_xmod.CrossedModule(boundary, act)
                     for act in search.run(entries))
    found.sort(key=xmod_sort_key)
    LOG.debug('%s crossed modules over %s boundaries', len(found),
              boundaries)
    return found


def random_invertible(n: int, field: _field.FieldSpec,
                      rng: random.Random) -> _linalg.Matrix:
    """A random invertible matrix; small integer entries over Q."""
    while True:
        if field.is_prime:
            entries = [[rng.randrange(field.p) for _ in range(n)]
                       for _ in range(n)]
        else:
            entries = [[rng.randint(-3, 3) for _ in range(n)]
                       for _ in range(n)]
        matrix = _linalg.Matrix(field, entries, cols=n)
        if _linalg.is_bijective(matrix):
            return matrix
