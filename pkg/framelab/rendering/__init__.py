from framelab.rendering.json_codec import (
    certificate_from_dict,
    certificate_to_dict,
    dumps,
    load_json,
    matrix_from_dict,
    matrix_to_dict,
    matroid_from_dict,
    matroid_to_dict,
    template_from_dict,
    template_to_dict,
)
from framelab.rendering.report import ReportRenderer, TableFormatter

__all__ = [
    "ReportRenderer",
    "TableFormatter",
    "certificate_from_dict",
    "certificate_to_dict",
    "dumps",
    "load_json",
    "matrix_from_dict",
    "matrix_to_dict",
    "matroid_from_dict",
    "matroid_to_dict",
    "template_from_dict",
    "template_to_dict",
]
