"""Uniform result record for all computation routes, with JSON and CSV output."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "CSV_HEADER",
    "DimensionReport",
    "csv_row",
    "render_text",
    "to_json",
    "to_json_dict",
]

CSV_HEADER = "param,dim_Cpi,dim_ker_eps,method"


@dataclass
class DimensionReport:
    group: str
    order: int
    num_classes: int
    d1: Fraction | None
    d2: Fraction | None
    dim_cpi: int
    dim_ker_eps: int
    dim_classhat_z2: int
    method: str
    millis: float


def _json_number(value: Fraction | None):
    if value is None:
        return None
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def to_json_dict(report: DimensionReport) -> dict:
    return {
        "group": report.group,
        "order": report.order,
        "num_classes": report.num_classes,
        "d1": _json_number(report.d1),
        "d2": _json_number(report.d2),
        "dim_Cpi": report.dim_cpi,
        "dim_ker_eps": report.dim_ker_eps,
        "dim_classhat_Z2": report.dim_classhat_z2,
        "method": report.method,
        "millis": report.millis,
    }


def to_json(report: DimensionReport) -> str:
    return json.dumps(to_json_dict(report))


def csv_row(param: int | str, report: DimensionReport) -> str:
    return f"{param},{report.dim_cpi},{report.dim_ker_eps},{report.method}"


def render_text(report: DimensionReport) -> str:
    lines = [
        f"group          {report.group}",
        f"order          {report.order}",
        f"classes        {report.num_classes}",
    ]
    if report.d1 is not None:
        lines.append(f"d1             {report.d1}")
    if report.d2 is not None:
        lines.append(f"d2             {report.d2}")
    lines.extend(
        [
            f"dim full       {report.dim_cpi}",
            f"dim kernel     {report.dim_ker_eps}",
            f"inversion gap  {report.dim_classhat_z2}",
            f"method         {report.method}",
            f"millis         {report.millis:.1f}",
        ]
    )
    return "\n".join(lines)
