from framelab.frames.certificates import dowling_extension, dowling_extension_minor, primesubfield_minor
from framelab.frames.dowling import (
    build_W,
    build_Wt,
    dowling,
    extremal_f,
    frame_class_order,
    is_frame_matrix,
    is_frame_matrix_up_to_scaling,
    natural_key,
)
from framelab.frames.geometry import ag, geometry, pg
from framelab.frames.minor_step import frame_minor_step
from framelab.frames.models import (
    DowlingSpec,
    FrameClassParams,
    ProjectionFrameData,
    StackedFrameRep,
    TaggedCertificate,
    Variant,
    WitnessReport,
)
from framelab.frames.projection import check_projection_frame_data, projection_frame_data
from framelab.frames.witnesses import witness_techodd, witness_techthree, witness_techtwo

__all__ = [
    "DowlingSpec",
    "FrameClassParams",
    "ProjectionFrameData",
    "StackedFrameRep",
    "TaggedCertificate",
    "Variant",
    "WitnessReport",
    "ag",
    "build_W",
    "build_Wt",
    "check_projection_frame_data",
    "dowling",
    "dowling_extension",
    "dowling_extension_minor",
    "extremal_f",
    "frame_class_order",
    "frame_minor_step",
    "geometry",
    "is_frame_matrix",
    "is_frame_matrix_up_to_scaling",
    "natural_key",
    "pg",
    "primesubfield_minor",
    "projection_frame_data",
    "witness_techodd",
    "witness_techthree",
    "witness_techtwo",
]
