"""Canonical JSON documents for all structures."""

import json
import typing

from . import _action
from . import _algebra
from . import _covering
from . import _field
from . import _groupoid
from . import _linalg
from . import _types
from . import _xmod


SCHEMA_VERSION = 1

KINDS = ('algebra', 'morphism', 'action', 'extension', 'xmod',
         'xmod_morphism', 'groupoid', 'gpd_morphism', 'gpd_action')


class Document:
    """A structure together with its kind."""

    __slots__ = ('kind', 'body')

    kind: str
    """One of :data:`KINDS`."""

    body: typing.Any
    """The structure."""

    def __init__(self, kind: str, body: typing.Any) -> None:
        if kind not in KINDS:
            raise _types.InvalidDocument(f"Unknown document kind {kind}")
        self.kind = kind
        self.body = body

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return self.kind == other.kind and self.body == other.body

    def __repr__(self):
        return f"Document({self.kind!r}, {self.body!r})"


# Encoding


def _field_json(field: _field.FieldSpec) -> typing.Dict[str, typing.Any]:
    if field.is_prime:
        return {'kind': 'prime', 'p': field.p}
    return {'kind': 'rational'}


def _matrix_json(matrix: _linalg.Matrix) -> typing.List[typing.List[str]]:
    return [[matrix.field.format_scalar(value) for value in row]
            for row in matrix.entries]


def _sparse_json(field: _field.FieldSpec, table) -> typing.List[typing.Any]:
    return [
        {'i': i, 'j': j,
         'out': [{'k': k, 'c': field.format_scalar(c)}
                 for k, c in enumerate(out) if c]}
        for i, row in enumerate(table)
        for j, out in enumerate(row)
        if any(out)
    ]


def _algebra_json(a: _algebra.StructureConstants) -> typing.Dict:
    return {'field': _field_json(a.field), 'dim': a.dim,
            'basis': list(a.basis),
            'brackets': _sparse_json(a.field, a.table)}


def _morphism_json(f: _algebra.LinearMorphism) -> typing.Dict:
    return {'source': _algebra_json(f.source),
            'target': _algebra_json(f.target),
            'matrix': _matrix_json(f.matrix)}


def _action_tensors(act: _action.LeibnizAction) -> typing.Dict:
    return {'lambda': _sparse_json(act.field, act.lam),
            'rho': _sparse_json(act.field, act.rho)}


def _action_json(act: _action.LeibnizAction) -> typing.Dict:
    return dict(_action_tensors(act), actor=_algebra_json(act.actor),
                actee=_algebra_json(act.actee))


def _extension_json(e: _action.SplitExtension) -> typing.Dict:
    return {'kernel': _algebra_json(e.kernel_alg),
            'middle': _algebra_json(e.middle_alg),
            'base': _algebra_json(e.base_alg),
            'i': _matrix_json(e.i.matrix),
            'p': _matrix_json(e.p.matrix),
            's': _matrix_json(e.s.matrix)}


def _xmod_json(x: _xmod.CrossedModule) -> typing.Dict:
    return {'l1': _algebra_json(x.l1), 'l0': _algebra_json(x.l0),
            'boundary': _matrix_json(x.boundary.matrix),
            'action': _action_tensors(x.action)}


def _xmod_morphism_json(m: _xmod.XModMorphism) -> typing.Dict:
    return {'source': _xmod_json(m.source), 'target': _xmod_json(m.target),
            'f1': _matrix_json(m.f1.matrix), 'f0': _matrix_json(m.f0.matrix)}


def _groupoid_json(g: _groupoid.InternalGroupoid) -> typing.Dict:
    return {'arrows': _algebra_json(g.arrows),
            'objects': _algebra_json(g.objects),
            'd0': _matrix_json(g.d0.matrix),
            'd1': _matrix_json(g.d1.matrix),
            'eps': _matrix_json(g.eps.matrix)}


def _gpd_morphism_json(f: _groupoid.GroupoidMorphism) -> typing.Dict:
    return {'source': _groupoid_json(f.source),
            'target': _groupoid_json(f.target),
            'on_arrows': _matrix_json(f.on_arrows.matrix),
            'on_objects': _matrix_json(f.on_objects.matrix)}


def _gpd_action_json(a: _covering.GroupoidAction) -> typing.Dict:
    return {'groupoid': _groupoid_json(a.groupoid),
            'algebra': _algebra_json(a.algebra),
            'omega': _matrix_json(a.omega.matrix),
            'act': _matrix_json(a.act),
            'pullback_basis': [[a.field.format_scalar(value)
                                for value in vector]
                               for vector in a.pullback.basis]}


_ENCODERS: typing.List[typing.Tuple[type, str, typing.Callable]] = [
    (_algebra.StructureConstants, 'algebra', _algebra_json),
    (_algebra.LinearMorphism, 'morphism', _morphism_json),
    (_action.LeibnizAction, 'action', _action_json),
    (_action.SplitExtension, 'extension', _extension_json),
    (_xmod.CrossedModule, 'xmod', _xmod_json),
    (_xmod.XModMorphism, 'xmod_morphism', _xmod_morphism_json),
    (_groupoid.InternalGroupoid, 'groupoid', _groupoid_json),
    (_groupoid.GroupoidMorphism, 'gpd_morphism', _gpd_morphism_json),
    (_covering.GroupoidAction, 'gpd_action', _gpd_action_json),
]


def kind_of(structure: typing.Any) -> str:
    for cls, kind, _encoder in _ENCODERS:
        if isinstance(structure, cls):
            return kind
    raise _types.InvalidDocument(
        f"{type(structure).__name__} cannot be serialized")


def to_json(document: Document) -> typing.Dict[str, typing.Any]:
    for cls, kind, encoder in _ENCODERS:
        if kind == document.kind:
            if not isinstance(document.body, cls):
                raise _types.InvalidDocument(
                    f"A {kind} document cannot hold "
                    f"{type(document.body).__name__}")
            return {'kind': kind, 'schema_version': SCHEMA_VERSION,
                    'body': encoder(document.body)}
    raise _types.InvalidDocument(f"Unknown document kind {document.kind}")


def serialize(document: typing.Union[Document, typing.Any],
              compact: bool = False) -> str:
    """Canonical text of a document (or of a bare structure).

    :param compact: Produce a single line instead of indented output.
    """
    if not isinstance(document, Document):
        document = Document(kind_of(document), document)
    data = to_json(document)
    if compact:
        return json.dumps(data, sort_keys=True, separators=(',', ':'))
    return json.dumps(data, sort_keys=True, indent=2) + '\n'


# Decoding


class _Node:
    """A JSON value with its path for diagnostics."""

    __slots__ = ('value', 'path')

    def __init__(self, value: typing.Any, path: str) -> None:
        self.value = value
        self.path = path

    def fail(self, message: str) -> typing.NoReturn:
        raise _types.InvalidDocument(f"{self.path}: {message}")

    def child(self, key: typing.Union[str, int]) -> '_Node':
        if isinstance(key, int):
            return _Node(self.value[key], f"{self.path}[{key}]")
        return _Node(self.value[key], f"{self.path}.{key}")

    def fields(self, *names: str) -> typing.Dict[str, '_Node']:
        """Children of an object that must have exactly these keys."""
        if not isinstance(self.value, dict):
            self.fail("expected an object")
        unknown = sorted(set(self.value) - set(names))
        if unknown:
            self.fail(f"unknown field(s) {', '.join(unknown)}")
        missing = [name for name in names if name not in self.value]
        if missing:
            self.fail(f"missing field(s) {', '.join(missing)}")
        return {name: self.child(name) for name in names}

    def items(self) -> typing.List['_Node']:
        if not isinstance(self.value, list):
            self.fail("expected a list")
        return [self.child(index) for index in range(len(self.value))]

    def integer(self, lower: int = 0,
                upper: typing.Optional[int] = None) -> int:
        value = self.value
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail("expected an integer")
        if value < lower or (upper is not None and value >= upper):
            self.fail(f"{value} is out of range")
        return value

    def string(self) -> str:
        if not isinstance(self.value, str):
            self.fail("expected a string")
        return self.value

    def scalar(self, field: _field.FieldSpec) -> _field.Scalar:
        try:
            return field.parse_scalar(self.value)
        except ValueError as exc:
            self.fail(str(exc))


def _parse_field(node: _Node) -> _field.FieldSpec:
    if isinstance(node.value, dict) and node.value.get('kind') == 'prime':
        fields = node.fields('kind', 'p')
        p = fields['p'].integer()
        try:
            return _field.FieldSpec.prime(p)
        except _types.Error as exc:
            fields['p'].fail(str(exc))
    fields = node.fields('kind')
    if fields['kind'].value != 'rational':
        fields['kind'].fail("expected 'rational' or 'prime'")
    return _field.FieldSpec.rational()


def _parse_sparse(node: _Node, field: _field.FieldSpec, first: int,
                  second: int, size: int) -> typing.List:
    table = [[[field.zero] * size for _ in range(second)]
             for _ in range(first)]
    previous = None
    for entry in node.items():
        fields = entry.fields('i', 'j', 'out')
        i = fields['i'].integer(0, first)
        j = fields['j'].integer(0, second)
        if previous is not None and (i, j) <= previous:
            entry.fail("entries must be sorted by (i, j) without repeats")
        previous = (i, j)
        last_k = -1
        outs = fields['out'].items()
        if not outs:
            fields['out'].fail("zero entries are omitted")
        for out in outs:
            out_fields = out.fields('k', 'c')
            k = out_fields['k'].integer(0, size)
            if k <= last_k:
                out.fail("coefficients must be sorted by k without repeats")
            last_k = k
            value = out_fields['c'].scalar(field)
            if not value:
                out_fields['c'].fail("zero coefficients are omitted")
            table[i][j][k] = value
    return table


def _parse_algebra(node: _Node,
                   verify: bool = True) -> _algebra.StructureConstants:
    fields = node.fields('field', 'dim', 'basis', 'brackets')
    field = _parse_field(fields['field'])
    dim = fields['dim'].integer()
    basis = [item.string() for item in fields['basis'].items()]
    if len(basis) != dim or len(set(basis)) != dim:
        fields['basis'].fail(f"expected {dim} distinct labels")
    table = _parse_sparse(fields['brackets'], field, dim, dim, dim)
    constants = _algebra.StructureConstants(field, table, basis=basis)
    if not verify:
        return constants
    return _algebra.LeibnizAlgebra.from_constants(constants)


def _parse_matrix(node: _Node, field: _field.FieldSpec, rows: int,
                  cols: int) -> _linalg.Matrix:
    items = node.items()
    if len(items) != rows:
        node.fail(f"expected {rows} rows")
    entries = []
    for row in items:
        values = row.items()
        if len(values) != cols:
            row.fail(f"expected {cols} entries")
        entries.append([value.scalar(field) for value in values])
    return _linalg.Matrix(field, entries, cols=cols)


def _morphism(node: _Node, source: _algebra.LeibnizAlgebra,
              target: _algebra.LeibnizAlgebra) -> _algebra.LinearMorphism:
    field = _field.check_same(source.field, target.field)
    return _algebra.LinearMorphism(
        source, target, _parse_matrix(node, field, target.dim, source.dim))


def _parse_morphism(node: _Node) -> _algebra.LinearMorphism:
    fields = node.fields('source', 'target', 'matrix')
    return _morphism(fields['matrix'], _parse_algebra(fields['source']),
                     _parse_algebra(fields['target']))


def _tensors(fields: typing.Dict[str, _Node],
             actor: _algebra.LeibnizAlgebra,
             actee: _algebra.LeibnizAlgebra) -> _action.LeibnizAction:
    field = _field.check_same(actor.field, actee.field)
    lam = _parse_sparse(fields['lambda'], field, actor.dim, actee.dim,
                        actee.dim)
    rho = _parse_sparse(fields['rho'], field, actee.dim, actor.dim,
                        actee.dim)
    return _action.LeibnizAction(actor, actee, lam, rho)


def _parse_action(node: _Node) -> _action.LeibnizAction:
    fields = node.fields('actor', 'actee', 'lambda', 'rho')
    return _tensors(fields, _parse_algebra(fields['actor']),
                    _parse_algebra(fields['actee']))


def _parse_extension(node: _Node) -> _action.SplitExtension:
    fields = node.fields('kernel', 'middle', 'base', 'i', 'p', 's')
    kernel = _parse_algebra(fields['kernel'])
    middle = _parse_algebra(fields['middle'])
    base = _parse_algebra(fields['base'])
    return _action.SplitExtension(_morphism(fields['i'], kernel, middle),
                                  _morphism(fields['p'], middle, base),
                                  _morphism(fields['s'], base, middle))


def _parse_xmod(node: _Node) -> _xmod.CrossedModule:
    fields = node.fields('l1', 'l0', 'boundary', 'action')
    l1 = _parse_algebra(fields['l1'])
    l0 = _parse_algebra(fields['l0'])
    tensors = fields['action'].fields('lambda', 'rho')
    return _xmod.CrossedModule(_morphism(fields['boundary'], l1, l0),
                               _tensors(tensors, l0, l1))


def _parse_xmod_morphism(node: _Node) -> _xmod.XModMorphism:
    fields = node.fields('source', 'target', 'f1', 'f0')
    source = _parse_xmod(fields['source'])
    target = _parse_xmod(fields['target'])
    return _xmod.XModMorphism(source, target,
                              _morphism(fields['f1'], source.l1, target.l1),
                              _morphism(fields['f0'], source.l0, target.l0))


def _parse_groupoid(node: _Node) -> _groupoid.InternalGroupoid:
    fields = node.fields('arrows', 'objects', 'd0', 'd1', 'eps')
    arrows = _parse_algebra(fields['arrows'])
    objects = _parse_algebra(fields['objects'])
    return _groupoid.InternalGroupoid(
        _morphism(fields['d0'], arrows, objects),
        _morphism(fields['d1'], arrows, objects),
        _morphism(fields['eps'], objects, arrows))


def _parse_gpd_morphism(node: _Node) -> _groupoid.GroupoidMorphism:
    fields = node.fields('source', 'target', 'on_arrows', 'on_objects')
    source = _parse_groupoid(fields['source'])
    target = _parse_groupoid(fields['target'])
    return _groupoid.GroupoidMorphism(
        source, target,
        _morphism(fields['on_arrows'], source.arrows, target.arrows),
        _morphism(fields['on_objects'], source.objects, target.objects))


def _parse_gpd_action(node: _Node) -> _covering.GroupoidAction:
    fields = node.fields('groupoid', 'algebra', 'omega', 'act',
                         'pullback_basis')
    groupoid = _parse_groupoid(fields['groupoid'])
    algebra = _parse_algebra(fields['algebra'])
    omega = _morphism(fields['omega'], algebra, groupoid.objects)
    pullback = _linalg.pullback_basis(groupoid.d0.matrix, omega.matrix)
    given = _parse_matrix(fields['pullback_basis'], algebra.field,
                          pullback.dim, pullback.ambient_dim)
    if given.entries != pullback.basis:
        fields['pullback_basis'].fail(
            "does not match the canonical basis of the pullback")
    act = _parse_matrix(fields['act'], algebra.field, algebra.dim,
                        pullback.dim)
    return _covering.GroupoidAction(groupoid, algebra, omega, act)


_DECODERS = {
    'algebra': _parse_algebra,
    'morphism': _parse_morphism,
    'action': _parse_action,
    'extension': _parse_extension,
    'xmod': _parse_xmod,
    'xmod_morphism': _parse_xmod_morphism,
    'groupoid': _parse_groupoid,
    'gpd_morphism': _parse_gpd_morphism,
    'gpd_action': _parse_gpd_action,
}


def from_json(data: typing.Any, verify: bool = True) -> Document:
    """Decode a parsed JSON value.

    :param verify: Whether an ``algebra`` document must satisfy the Leibniz
        identity. Embedded algebras are always verified.
    :raises: :class:`InvalidDocument` on schema violations.
    """
    root = _Node(data, '$')
    fields = root.fields('kind', 'schema_version', 'body')
    kind = fields['kind'].string()
    if kind not in _DECODERS:
        fields['kind'].fail(f"unknown kind {kind}")
    if fields['schema_version'].integer() != SCHEMA_VERSION:
        fields['schema_version'].fail(
            f"unsupported schema version, expected {SCHEMA_VERSION}")
    body = _Node(data['body'], 'body')
    if kind == 'algebra':
        return Document(kind, _parse_algebra(body, verify=verify))
    return Document(kind, _DECODERS[kind](body))


def parse(text: str, verify: bool = True) -> Document:
    """Parse the text of a document.

    :raises: :class:`InvalidDocument` on syntax or schema errors.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _types.InvalidDocument(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return from_json(data, verify=verify)
