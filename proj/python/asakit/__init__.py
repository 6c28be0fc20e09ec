from ._asakit import (
    Body,
    OriginNotInterior,
    SpecParseError,
    asa_boundary,
    asa_cm_infimum,
    asa_lutwak_infimum,
    asa_sphere,
    body_from_json,
    compute_report,
    default_resolution,
    load_body,
    polar_volume,
    unit_ball_volume,
    volume,
)

__all__ = [
    "Body",
    "OriginNotInterior",
    "SpecParseError",
    "asa_boundary",
    "asa_cm_infimum",
    "asa_lutwak_infimum",
    "asa_sphere",
    "body_from_json",
    "compute_report",
    "default_resolution",
    "load_body",
    "polar_volume",
    "unit_ball_volume",
    "volume",
]
