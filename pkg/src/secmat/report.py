"""Aggregated analysis of a homogeneous ideal and its serializable report."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconclusiveError, InfiniteReductionNumberError, InvariantViolation
from .gin import is_saturated, rgin
from .groebner import truncation_ideal
from .monomial_ideals import MonomialIdeal
from .polynomials import Ideal
from .rings import PowerProduct, Ring
from .sectional import (
    SectionalMatrix,
    dim_deg,
    gcd_of_truncation,
    growth_flags,
    maximal_growth,
    persistence_extend,
    reduction_number,
    sectional_matrix,
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class GrowthReport:
    """Maximal-growth flags per (i, d), with per-row persistence onsets."""

    flags: tuple[tuple[bool, ...], ...]  # [i-1][d] for d = 0 .. max_degree-1
    first_persistent: tuple[int | None, ...]  # start of the trailing all-true run
    predicted_next: tuple[int | None, ...]  # M(i, max_degree+1) when persisting


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the sectional matrix reveals about one ideal."""

    schema: int
    variables: tuple[str, ...]
    seed: int
    matrix: SectionalMatrix
    reg: int
    dim: int
    deg: int
    detection_degree: int
    early_detection: tuple[int, int, int] | None  # (delta, dim, deg)
    reduction_numbers: tuple[tuple[int, int], ...]  # (s, r_s), finite ones
    reduction_number: int | None  # r_{dim}, when it exists
    growth: GrowthReport
    potential_gcd_degrees: tuple[tuple[int, int], ...]  # (delta, M(2, delta))
    gcd_degree: int | None
    gcd_polynomial: str | None
    saturated: bool
    truncation_saturated: tuple[tuple[int, bool], ...]
    dimension_discrepancy: tuple[int, int, int] | None  # (delta, alternate, reported)
    notes: tuple[str, ...]


def _growth_report(matrix: SectionalMatrix) -> GrowthReport:
    flags = growth_flags(matrix)
    top = matrix.max_degree
    first_persistent = []
    predicted = []
    for i in range(1, matrix.arity + 1):
        row = flags[i - 1]
        if row and row[-1]:
            start = top - 1
            while start > 0 and row[start - 1]:
                start -= 1
            first_persistent.append(start)
            if matrix.generation_bound <= top:
                predicted.append(persistence_extend(matrix, top - 1, i, 2))
            else:
                predicted.append(None)
        else:
            first_persistent.append(None)
            predicted.append(None)
    return GrowthReport(flags, tuple(first_persistent), tuple(predicted))


def analyze(ideal: Ideal, seed: int) -> AnalysisReport:
    """Run the full pipeline; every reported claim is recomputed from parts."""
    n = ideal.ring.arity
    gin_result = rgin(ideal, seed)
    reg = gin_result.regularity
    detection = max(reg, ideal.max_generator_degree - 1, 0)
    matrix = sectional_matrix(
        ideal, seed, extra_degrees=max(1, detection + 1 - reg)
    )
    notes: list[str] = []

    if matrix.entry(n, detection) == 0:
        dim, deg = 0, 0
        notes.append(
            "the quotient is Artinian (Hilbert function eventually zero); "
            "dimension 0 and degree 0 are reported by convention"
        )
    else:
        dim, deg = dim_deg(matrix, detection)

    early = None
    for delta in range(max(matrix.generation_bound - 1, 0), detection):
        try:
            found = dim_deg(matrix, delta)
        except InconclusiveError:
            continue
        if matrix.entry(n, detection) and found != (dim, deg):
            raise InvariantViolation(
                f"early detection at {delta} gave {found}, final gave {(dim, deg)}"
            )
        early = (delta, found[0], found[1])
        break

    finite_reductions = []
    for s in range(n):
        try:
            finite_reductions.append((s, reduction_number(ideal, s, seed)))
        except InfiniteReductionNumberError:
            continue
    r_lookup = dict(finite_reductions)
    r_value = r_lookup.get(dim)

    # GCD diagnostics at every degree where row 2 freezes while I_delta != 0
    potentials = []
    gcd_degree = None
    gcd_polynomial = None
    for delta in range(matrix.max_degree):
        if matrix.entry(1, delta) != 0:
            continue
        if not maximal_growth(matrix, 2, delta):
            continue
        potentials.append((delta, matrix.entry(2, delta)))
    if potentials and n >= 2:
        first_delta = potentials[0][0]
        gcd_poly = gcd_of_truncation(ideal, first_delta, seed)
        gcd_degree = gcd_poly.degree
        gcd_polynomial = str(gcd_poly)

    saturated = is_saturated(ideal, seed)
    truncation_flags = []
    if not ideal.is_zero:
        low = min(g.degree for g in ideal.generators)
        for delta in range(low, reg + 1):
            piece = truncation_ideal(ideal, delta)
            flag = piece.is_zero or is_saturated(piece, seed)
            truncation_flags.append((delta, flag))

    discrepancy = None
    if saturated and n >= 2:
        for delta in range(matrix.max_degree):
            if matrix.entry(1, delta) != 0 or matrix.entry(n, delta) == 0:
                continue
            if not (
                maximal_growth(matrix, n - 1, delta)
                or maximal_growth(matrix, n, delta)
            ):
                continue
            i = next(
                (j for j in range(2, n + 1) if matrix.entry(j, delta)), None
            )
            if i is None:
                continue
            discrepancy = (delta, n - i, n - i + 1)
            notes.append(
                f"saturated-truncation dimension rule at degree {delta}: the "
                f"alternate convention gives {n - i}, the section machinery "
                f"gives {n - i + 1}; the latter is reported"
            )
            break

    return AnalysisReport(
        schema=SCHEMA_VERSION,
        variables=ideal.ring.variables,
        seed=seed,
        matrix=matrix,
        reg=reg,
        dim=dim,
        deg=deg,
        detection_degree=detection,
        early_detection=early,
        reduction_numbers=tuple(finite_reductions),
        reduction_number=r_value,
        growth=_growth_report(matrix),
        potential_gcd_degrees=tuple(potentials),
        gcd_degree=gcd_degree,
        gcd_polynomial=gcd_polynomial,
        saturated=saturated,
        truncation_saturated=tuple(truncation_flags),
        dimension_discrepancy=discrepancy,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# serialization (stable, versioned)
# ---------------------------------------------------------------------------

def matrix_to_dict(matrix: SectionalMatrix) -> dict:
    return {
        "variables": list(matrix.ring.variables),
        "rows": [list(r) for r in matrix.rows],
        "reg": matrix.reg,
        "source": sorted(list(t) for t in matrix.source.min_gens),
        "generator_max_degree": matrix.gen_max_degree,
        "seed": matrix.seed,
    }


def matrix_from_dict(data: dict) -> SectionalMatrix:
    ring = Ring(tuple(data["variables"]))
    return SectionalMatrix(
        ring=ring,
        rows=tuple(tuple(r) for r in data["rows"]),
        reg=data["reg"],
        source=MonomialIdeal.of(ring, [PowerProduct(t) for t in data["source"]]),
        gen_max_degree=data["generator_max_degree"],
        seed=data["seed"],
    )


def report_to_dict(report: AnalysisReport) -> dict:
    return {
        "schema": report.schema,
        "variables": list(report.variables),
        "seed": report.seed,
        "matrix": matrix_to_dict(report.matrix),
        "reg": report.reg,
        "dim": report.dim,
        "deg": report.deg,
        "detection_degree": report.detection_degree,
        "early_detection": list(report.early_detection)
        if report.early_detection
        else None,
        "reduction_numbers": [list(p) for p in report.reduction_numbers],
        "reduction_number": report.reduction_number,
        "growth": {
            "flags": [list(r) for r in report.growth.flags],
            "first_persistent": list(report.growth.first_persistent),
            "predicted_next": list(report.growth.predicted_next),
        },
        "potential_gcd_degrees": [list(p) for p in report.potential_gcd_degrees],
        "gcd_degree": report.gcd_degree,
        "gcd_polynomial": report.gcd_polynomial,
        "saturated": report.saturated,
        "truncation_saturated": [list(p) for p in report.truncation_saturated],
        "dimension_discrepancy": list(report.dimension_discrepancy)
        if report.dimension_discrepancy
        else None,
        "notes": list(report.notes),
    }


def report_from_dict(data: dict) -> AnalysisReport:
    growth = GrowthReport(
        flags=tuple(tuple(bool(v) for v in r) for r in data["growth"]["flags"]),
        first_persistent=tuple(data["growth"]["first_persistent"]),
        predicted_next=tuple(data["growth"]["predicted_next"]),
    )
    return AnalysisReport(
        schema=data["schema"],
        variables=tuple(data["variables"]),
        seed=data["seed"],
        matrix=matrix_from_dict(data["matrix"]),
        reg=data["reg"],
        dim=data["dim"],
        deg=data["deg"],
        detection_degree=data["detection_degree"],
        early_detection=tuple(data["early_detection"])
        if data["early_detection"]
        else None,
        reduction_numbers=tuple((s, r) for s, r in data["reduction_numbers"]),
        reduction_number=data["reduction_number"],
        growth=growth,
        potential_gcd_degrees=tuple(
            (a, b) for a, b in data["potential_gcd_degrees"]
        ),
        gcd_degree=data["gcd_degree"],
        gcd_polynomial=data["gcd_polynomial"],
        saturated=data["saturated"],
        truncation_saturated=tuple(
            (a, bool(b)) for a, b in data["truncation_saturated"]
        ),
        dimension_discrepancy=tuple(data["dimension_discrepancy"])
        if data["dimension_discrepancy"]
        else None,
        notes=tuple(data["notes"]),
    )
