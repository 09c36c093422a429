from knot_uncertainty.models.geometry import KnotSpec, ParameterizationKind, Point3, TorusSpec
from knot_uncertainty.models.state import QuadratureConfig, Superposition
from knot_uncertainty.models.reports import (
    Commutator,
    Discrepancy,
    ExpectationReport,
    MRLCheck,
    RunConfig,
    URRelation,
    URReport,
    URSource,
    VerificationBundle,
    WeightPreset,
)
from knot_uncertainty.models.closed_form import (
    ChoiceClass,
    CircleReport,
    CircleSpec,
    ClosedFormReport,
    CombinedClosedForm,
    TwoModeState,
)

__all__ = [
    'KnotSpec', 'ParameterizationKind', 'Point3', 'TorusSpec',
    'QuadratureConfig', 'Superposition',
    'Commutator', 'Discrepancy', 'ExpectationReport', 'MRLCheck', 'RunConfig',
    'URRelation', 'URReport', 'URSource', 'VerificationBundle', 'WeightPreset',
    'ChoiceClass', 'CircleReport', 'CircleSpec', 'ClosedFormReport', 'CombinedClosedForm', 'TwoModeState',
]
