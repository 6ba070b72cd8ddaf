"""CSV/JSON serialisation shared by the CLI and the experiment scripts.

CSV schema (fixed): ``t,gamma_a,gamma_b,channel,locality,b,c,d_numeric,
d_closed,abs_err`` with floats rendered at 17 significant digits so doubles
round-trip losslessly; ``t`` is empty for gamma-axis sweeps.  Every file
starts with ``#`` metadata comment lines carrying the parameters, seed and
tool version, and identical inputs produce byte-identical output.
"""

from __future__ import annotations

from typing import Sequence

from .dynamics import SweepRow, SweepSpec

CSV_HEADER = "t,gamma_a,gamma_b,channel,locality,b,c,d_numeric,d_closed,abs_err"


def format_float(x: float) -> str:
    """Render with 17 significant digits (lossless for doubles)."""
    return format(float(x), ".17g")


def _metadata_lines(spec: SweepSpec, seed: int, version: str) -> list[str]:
    scenario = spec.scenario
    return [
        f"# gmqd sweep version={version} seed={seed}",
        "# "
        + " ".join(
            [
                f"channel={scenario.kind.value}",
                f"locality={scenario.locality.value}",
                f"b={format_float(spec.b)}",
                f"c={format_float(spec.c)}",
                f"axis={spec.axis.value}",
                f"coupling={spec.coupling.value}",
                f"points={len(spec.grid)}",
                f"rate_a={format_float(spec.rate_a)}",
                f"rate_b={format_float(spec.rate_b)}",
            ]
        ),
    ]


def _row_fields(spec: SweepSpec, row: SweepRow) -> list[str]:
    return [
        "" if row.t is None else format_float(row.t),
        format_float(row.gamma_a),
        format_float(row.gamma_b),
        spec.scenario.kind.value,
        spec.scenario.locality.value,
        format_float(spec.b),
        format_float(spec.c),
        format_float(row.d_numeric),
        format_float(row.d_closed),
        format_float(row.abs_err),
    ]


def sweep_csv_text(spec: SweepSpec, rows: Sequence[SweepRow], seed: int, version: str) -> str:
    """Full CSV payload for one sweep, metadata comments included."""
    lines = _metadata_lines(spec, seed, version)
    lines.append(CSV_HEADER)
    lines.extend(",".join(_row_fields(spec, row)) for row in rows)
    return "\n".join(lines) + "\n"


def sweep_json_doc(spec: SweepSpec, rows: Sequence[SweepRow], seed: int, version: str) -> dict:
    """The same sweep payload as a JSON-serialisable document."""
    scenario = spec.scenario
    return {
        "version": version,
        "seed": seed,
        "channel": scenario.kind.value,
        "locality": scenario.locality.value,
        "b": spec.b,
        "c": spec.c,
        "axis": spec.axis.value,
        "coupling": spec.coupling.value,
        "points": len(spec.grid),
        "rate_a": spec.rate_a,
        "rate_b": spec.rate_b,
        "rows": [
            {
                "t": row.t,
                "gamma_a": row.gamma_a,
                "gamma_b": row.gamma_b,
                "d_numeric": row.d_numeric,
                "d_closed": row.d_closed,
                "abs_err": row.abs_err,
            }
            for row in rows
        ],
    }
