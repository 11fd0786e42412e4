from . import commands
from . import filters
from . import fixtures
from ._action import bracket_action
from ._action import canonical_extension
from ._action import derived_action
from ._action import extension_iso
from ._action import LeibnizAction
from ._action import semidirect
from ._action import SplitExtension
from ._action import transport_extension
from ._action import trivial_action
from ._action import validate_action
from ._action import validate_split_extension
from ._algebra import abelian
from ._algebra import bracket
from ._algebra import change_basis
from ._algebra import check_morphism
from ._algebra import direct_product
from ._algebra import is_ideal
from ._algebra import LeibnizAlgebra
from ._algebra import LinearMorphism
from ._algebra import StructureConstants
from ._algebra import subalgebra
from ._algebra import validate_algebra
from ._command import Command
from ._command import Result
from ._covering import action_groupoid
from ._covering import canonical_action
from ._covering import check_action_morphism
from ._covering import check_covering
from ._covering import check_covering_morphism
from ._covering import check_covering_xmod
from ._covering import covering_class
from ._covering import covering_to_action
from ._covering import CoveringXModMorphism
from ._covering import gpd_cov_to_xmod_cov
from ._covering import GroupoidAction
from ._covering import lift
from ._covering import lifting_map
from ._covering import roundtrip_cov_action
from ._covering import roundtrip_coverings
from ._covering import validate_gpd_action
from ._covering import xmod_cov_to_gpd_cov
from ._covering import xmod_lifting_map
from ._engine import Engine
from ._field import FieldSpec
from ._field import Residue
from ._groupoid import compose
from ._groupoid import delta
from ._groupoid import discrete_groupoid
from ._groupoid import eta
from ._groupoid import GroupoidMorphism
from ._groupoid import InternalGroupoid
from ._groupoid import inverse
from ._groupoid import is_transitive
from ._groupoid import one_object_groupoid
from ._groupoid import pair_groupoid
from ._groupoid import proposition_report
from ._groupoid import roundtrip_delta_eta
from ._groupoid import roundtrip_eta_delta
from ._groupoid import star
from ._groupoid import Transitivity
from ._groupoid import validate_gpd_morphism
from ._groupoid import validate_groupoid
from ._linalg import Matrix
from ._linalg import Subspace
from ._oracle import DEFAULT_BUDGET
from ._oracle import enumerate_actions
from ._oracle import enumerate_leibniz
from ._oracle import enumerate_xmods
from ._oracle import naive_leibniz
from ._report import Report
from ._serialize import Document
from ._serialize import from_json
from ._serialize import parse
from ._serialize import serialize
from ._serialize import to_json
from ._types import BudgetExceeded
from ._types import DimensionMismatch
from ._types import Error
from ._types import FieldMismatch
from ._types import InconsistentStructure
from ._types import InvalidCommand
from ._types import InvalidDocument
from ._types import InvalidStructure
from ._types import NotACovering
from ._types import NotComposable
from ._types import UnknownCommand
from ._xmod import CrossedModule
from ._xmod import identity_xmod
from ._xmod import kernel_of_boundary
from ._xmod import trivial_xmod
from ._xmod import validate_xmod
from ._xmod import validate_xmod_morphism
from ._xmod import XModMorphism
from ._xmod import zero_xmod


__all__ = [
    'commands', 'filters', 'fixtures',
    'FieldSpec', 'Residue', 'Matrix', 'Subspace',
    'StructureConstants', 'LeibnizAlgebra', 'LinearMorphism', 'abelian',
    'bracket', 'change_basis', 'check_morphism', 'direct_product',
    'is_ideal', 'subalgebra', 'validate_algebra',
    'LeibnizAction', 'SplitExtension', 'bracket_action',
    'canonical_extension', 'derived_action', 'extension_iso', 'semidirect',
    'transport_extension', 'trivial_action', 'validate_action',
    'validate_split_extension',
    'CrossedModule', 'XModMorphism', 'identity_xmod', 'kernel_of_boundary',
    'trivial_xmod', 'validate_xmod', 'validate_xmod_morphism', 'zero_xmod',
    'InternalGroupoid', 'GroupoidMorphism', 'Transitivity', 'compose',
    'delta', 'discrete_groupoid', 'eta', 'inverse', 'is_transitive',
    'one_object_groupoid', 'pair_groupoid', 'proposition_report',
    'roundtrip_delta_eta', 'roundtrip_eta_delta', 'star',
    'validate_gpd_morphism', 'validate_groupoid',
    'GroupoidAction', 'CoveringXModMorphism', 'action_groupoid',
    'canonical_action', 'check_action_morphism', 'check_covering',
    'check_covering_morphism', 'check_covering_xmod', 'covering_class',
    'covering_to_action', 'gpd_cov_to_xmod_cov', 'lift', 'lifting_map',
    'roundtrip_cov_action', 'roundtrip_coverings', 'validate_gpd_action',
    'xmod_cov_to_gpd_cov', 'xmod_lifting_map',
    'DEFAULT_BUDGET', 'enumerate_actions', 'enumerate_leibniz',
    'enumerate_xmods', 'naive_leibniz',
    'Report', 'Document', 'from_json', 'parse', 'serialize', 'to_json',
    'Engine', 'Command', 'Result',
    'Error', 'BudgetExceeded', 'DimensionMismatch', 'FieldMismatch',
    'InconsistentStructure', 'InvalidCommand', 'InvalidDocument',
    'InvalidStructure', 'NotACovering', 'NotComposable', 'UnknownCommand',
]
