from framelab.templates.density import DensityCheck, density_bound_dual, density_bound_primal, dual_bound, primal_bound
from framelab.templates.enumeration import (
    MAX_ENUMERATION_GROUND,
    ConformingClasses,
    EquivalenceEvidence,
    compare_classes,
    enumerate_conforming,
    equivalence_evidence,
    frame_columns,
    verify_trace,
)
from framelab.templates.generators import random_frame_matrix, random_template
from framelab.templates.models import (
    FrameTemplate,
    FreshLabels,
    ReductionTrace,
    RespectWitness,
    ShiftMatrix,
    TracePass,
    frame_class_template,
)
from framelab.templates.reduction import is_reduced, is_y_reduced, reduce, y_reduce
from framelab.templates.respect import check_respect, complexity, conforming_matroid, respects
from framelab.templates.subclass import SubclassWitness, subclass_witness
from framelab.templates.transforms import (
    apply_unitary,
    contract_template,
    normalize_delta,
    project_delta,
    prune_rows,
)

__all__ = [
    "MAX_ENUMERATION_GROUND",
    "ConformingClasses",
    "DensityCheck",
    "EquivalenceEvidence",
    "FrameTemplate",
    "FreshLabels",
    "ReductionTrace",
    "RespectWitness",
    "ShiftMatrix",
    "SubclassWitness",
    "TracePass",
    "apply_unitary",
    "check_respect",
    "compare_classes",
    "complexity",
    "conforming_matroid",
    "contract_template",
    "density_bound_dual",
    "density_bound_primal",
    "dual_bound",
    "enumerate_conforming",
    "equivalence_evidence",
    "frame_class_template",
    "frame_columns",
    "is_reduced",
    "is_y_reduced",
    "normalize_delta",
    "primal_bound",
    "project_delta",
    "prune_rows",
    "random_frame_matrix",
    "random_template",
    "reduce",
    "respects",
    "subclass_witness",
    "verify_trace",
]
