"""Built-in commands of the ``leibniz`` command line tool.

Every command reads documents produced by :func:`leibniz.serialize` (``-``
means the standard input) and prints either a document, a report or an
explicit map:

.. code-block:: console

    $ leibniz fixtures --name 'PairGpd(A2)' > pair.json
    $ leibniz validate pair.json
    $ leibniz convert eta pair.json
"""

import typing

from . import _action
from . import _algebra
from . import _command
from . import _covering
from . import _field
from . import _groupoid
from . import _oracle
from . import _report
from . import _serialize
from . import _types
from . import _xmod
from . import fixtures


__all__ = ['Build', 'Check', 'Convert', 'Enumerate', 'Fixtures', 'Lift',
           'Roundtrip', 'Validate']


def _document_result(structure: typing.Any) -> _command.Result:
    document = _serialize.Document(_serialize.kind_of(structure), structure)
    return _command.Result(data=_serialize.to_json(document))


def _report_result(report: _report.Report) -> _command.Result:
    return _command.Result(data=report.as_dict(), template='report',
                           context={'report': report},
                           failed=report.failed)


def _matrices(field: _field.FieldSpec,
              maps: typing.Mapping[str, typing.Any]) -> typing.Dict:
    return {name: [[field.format_scalar(value) for value in row]
                   for row in morphism.matrix.entries]
            for name, morphism in maps.items()}


def _expect(document: _serialize.Document, *kinds: str) -> None:
    if document.kind not in kinds:
        raise _types.InvalidCommand(
            f"expected a {' or '.join(kinds)} document, got {document.kind}")


def _morphism_report(f: _algebra.LinearMorphism) -> _report.Report:
    return _report.Report('morphism',
                          {'morphism_ok': _algebra.check_morphism(f)})


def _algebra_report(a: _algebra.StructureConstants) -> _report.Report:
    return _algebra.validate_algebra(a)


class Validate(_command.Command):
    """Validate a document of any kind and print the report."""

    required_params = {'file': str}

    _VALIDATORS: typing.Dict[str, typing.Callable] = {
        'algebra': _algebra_report,
        'morphism': _morphism_report,
        'action': _action.validate_action,
        'extension': _action.validate_split_extension,
        'xmod': _xmod.validate_xmod,
        'xmod_morphism': _xmod.validate_xmod_morphism,
        'groupoid': _groupoid.validate_groupoid,
        'gpd_morphism': _groupoid.validate_gpd_morphism,
        'gpd_action': _covering.validate_gpd_action,
    }

    def execute(self, params):
        document = self.engine.load(params['file'], verify=False)
        report = self._VALIDATORS[document.kind](document.body)
        self.engine.logger.info("%s validation %s", document.kind,
                                'succeeded' if report else 'failed')
        return _report_result(report)


class Build(_command.Command):
    """Build a semidirect product or an action groupoid."""

    required_params = {'construction': ('semidirect', 'action-groupoid'),
                       'file': str}

    def execute(self, params):
        document = self.engine.load(params['file'])
        if params['construction'] == 'semidirect':
            _expect(document, 'action')
            return _document_result(_action.canonical_extension(
                document.body))
        _expect(document, 'gpd_action')
        groupoid, _projection = _covering.action_groupoid(document.body)
        return _document_result(groupoid)


class Convert(_command.Command):
    """Convert between crossed modules, groupoids, coverings and actions."""

    required_params = {
        'conversion': ('delta', 'eta', 'xmod-covering', 'gpd-covering',
                       'action'),
        'file': str,
    }

    def execute(self, params):
        document = self.engine.load(params['file'])
        conversion = params['conversion']
        body = document.body
        if conversion == 'delta':
            _expect(document, 'xmod')
            return _document_result(_groupoid.delta(body))
        elif conversion == 'eta':
            _expect(document, 'groupoid')
            return _document_result(_groupoid.eta(body))
        elif conversion == 'xmod-covering':
            _expect(document, 'gpd_morphism')
            return _document_result(
                _covering.gpd_cov_to_xmod_cov(body).morphism)
        elif conversion == 'gpd-covering':
            _expect(document, 'xmod_morphism')
            return _document_result(_covering.xmod_cov_to_gpd_cov(
                _covering.CoveringXModMorphism(body)))
        _expect(document, 'gpd_morphism')
        return _document_result(_covering.covering_to_action(body))


class Check(_command.Command):
    """Check whether a morphism is a covering."""

    required_params = {'property': ('covering', 'covering-xmod'),
                       'file': str}

    def execute(self, params):
        document = self.engine.load(params['file'])
        if params['property'] == 'covering':
            _expect(document, 'gpd_morphism')
            flags = {'covering': _covering.check_covering(document.body)}
            if flags['covering']:
                flags.update(_covering.covering_class(document.body))
            report = _report.Report('covering', flags,
                                    informational=('transitive',
                                                   'universal'))
        else:
            _expect(document, 'xmod_morphism')
            report = _report.Report('covering_xmod', {
                'covering': _covering.check_covering_xmod(document.body)})
        return _report_result(report)


class Roundtrip(_command.Command):
    """Print and verify the comparison isomorphism of an equivalence.

    Accepts a crossed module, a groupoid, a groupoid covering or a
    covering crossed module.
    """

    required_params = {'file': str}

    def execute(self, params):
        document = self.engine.load(params['file'])
        _expect(document, 'xmod', 'groupoid', 'gpd_morphism',
                'xmod_morphism')
        body = document.body
        if document.kind == 'xmod':
            iso = _groupoid.roundtrip_eta_delta(body)
            maps = {'f1': iso.f1, 'f0': iso.f0}
        elif document.kind == 'groupoid':
            iso = _groupoid.roundtrip_delta_eta(body)
            maps = {'on_arrows': iso.on_arrows, 'on_objects': iso.on_objects}
        elif document.kind == 'gpd_morphism':
            iso = _covering.roundtrip_cov_action(body)
            maps = {'on_arrows': iso.on_arrows, 'on_objects': iso.on_objects}
        else:
            source, target = _covering.roundtrip_coverings(
                _covering.CoveringXModMorphism(body))
            maps = {'source_f1': source.f1, 'source_f0': source.f0,
                    'target_f1': target.f1, 'target_f0': target.f0}
        matrices = _matrices(body.field, maps)
        title = f"{document.kind} round trip"
        return _command.Result(
            data={'kind': 'roundtrip', 'of': document.kind,
                  'maps': matrices, 'verified': True},
            template='isomorphism',
            context={'title': title, 'maps': matrices})


def _parse_vector(field: _field.FieldSpec, text: str, size: int,
                  what: str) -> _field.Vector:
    items = [item.strip() for item in text.split(',')] if text else []
    if len(items) != size:
        raise _types.InvalidCommand(
            f"{what} needs {size} comma-separated scalars, got '{text}'")
    try:
        return tuple(field.parse_scalar(item) for item in items)
    except ValueError as exc:
        raise _types.InvalidCommand(f"invalid {what}: {exc}")


class Lift(_command.Command):
    """Lift an arrow along a covering to a given base point."""

    required_params = {'file': str}
    optional_params = {'arrow': str, 'at': str}

    def execute(self, params):
        self.require(params, 'arrow', 'at')
        document = self.engine.load(params['file'])
        _expect(document, 'gpd_morphism')
        p = document.body
        arrow = _parse_vector(p.field, params['arrow'], p.target.arrows.dim,
                              '--arrow')
        at = _parse_vector(p.field, params['at'], p.source.objects.dim,
                           '--at')
        lifted = _covering.lift(p, arrow, at)
        return _command.Result(
            data={'arrow': [p.field.format_scalar(x) for x in lifted]},
            template='vector', context={'value': lifted})


class Enumerate(_command.Command):
    """Stream all small structures over a prime field as JSON lines."""

    required_params = {}
    optional_params = {'kind': ('leibniz', 'action', 'xmod'),
                       'dim': int, 'p': int, 'actor': str, 'actee': str,
                       'l1': str, 'l0': str}

    def _algebra(self, path: str) -> _algebra.LeibnizAlgebra:
        document = self.engine.load(path)
        _expect(document, 'algebra')
        return document.body

    def execute(self, params):
        kind = params['kind'] or 'leibniz'
        budget = self.engine.budget
        if kind == 'leibniz':
            self.require(params, 'dim', 'p')
            _count, found = _oracle.enumerate_leibniz(
                params['dim'], params['p'], budget=budget)
        elif kind == 'action':
            self.require(params, 'actor', 'actee')
            found = _oracle.enumerate_actions(
                self._algebra(params['actor']),
                self._algebra(params['actee']), budget=budget)
        else:
            self.require(params, 'l1', 'l0')
            found = _oracle.enumerate_xmods(
                self._algebra(params['l1']), self._algebra(params['l0']),
                budget=budget)
        self.engine.logger.info("Found %s structures", len(found))
        return _command.Result(
            data=[_serialize.to_json(_serialize.Document(
                _serialize.kind_of(item), item)) for item in found],
            lines=[_serialize.serialize(item, compact=True)
                   for item in found])


class Fixtures(_command.Command):
    """Print a named fixture, or list the standard fixture names."""

    optional_params = {'name': str, 'p': int}

    def execute(self, params):
        field = (_field.FieldSpec.prime(params['p'])
                 if params['p'] is not None else None)
        if params['name'] is None:
            return _command.Result(data=list(fixtures.STANDARD),
                                   template='names',
                                   context={'names': fixtures.STANDARD})
        return _document_result(fixtures.build(params['name'],
                                               field).payload)
