"""
Result writer service.

Renders run results as CSV (with `#` metadata lines) or JSON, and reads solve
artifacts back as reference solutions. Floats are written with `repr`, so output
is byte-identical across runs and round-trips exactly.
"""

import csv
import io
import math
from pathlib import Path

import numpy as np
from pydantic import BaseModel

from app.utils.logger_config import logger
from fractional.analysis.bounds import BoundEnvelope, ContainmentTable
from fractional.analysis.certificate import Certificate
from fractional.analysis.studies import RefinementStudy
from fractional.errors import InvalidInputError
from fractional.problem.grid import SolutionGrid
from fractional.problem.problem import IvProblem
from fractional.solver.report import SolveReport
from schemas.artifacts import (
    CertificateArtifact,
    ContainmentArtifact,
    RunHeader,
    SolutionArtifact,
    VerifyArtifact,
    VerifyRow,
)


def _number(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool | np.bool_):
        return "true" if value else "false"
    return repr(float(value))


def _finite_or_none(values) -> list[float | None]:
    return [float(v) if math.isfinite(v) else None for v in np.asarray(values, dtype=float)]


def make_header(command: str, problem: IvProblem, n: int, tol: float) -> RunHeader:
    return RunHeader(
        command=command,
        problem=problem.name,
        alpha=problem.order.alpha,
        beta=problem.order.beta,
        gamma=problem.gamma,
        n=n,
        tol=tol,
    )


def _csv(header: RunHeader, extra: dict, columns: list[str], rows) -> str:
    buffer = io.StringIO()
    for key, value in header.model_dump().items():
        buffer.write(f"# {key}={value if isinstance(value, str | int) else _number(value)}\n")
    for key, value in extra.items():
        buffer.write(f"# {key}={value if isinstance(value, str) else _number(value)}\n")

    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([cell if isinstance(cell, str) else _number(cell) for cell in row])
    return buffer.getvalue()


def _json(artifact: BaseModel) -> str:
    return artifact.model_dump_json(indent=2) + "\n"


# =========================================================================
# ARTIFACT BUILDERS
# =========================================================================


def solution_artifact(header: RunHeader, report: SolveReport) -> SolutionArtifact:
    grid = report.solution
    certificate = report.certificate
    return SolutionArtifact(
        header=header,
        status=str(report.status),
        converged=report.converged,
        iterations=report.iterations,
        final_delta=report.final_delta,
        certified=report.certified,
        q=None if certificate is None else certificate.q,
        a_posteriori_bound=report.a_posteriori_bound,
        residual=report.residual,
        x=grid.nodes.tolist(),
        psi_x=grid.psi_nodes.tolist(),
        r=grid.regular_values.tolist(),
        z=_finite_or_none(grid.values),
    )


def certificate_artifact(header: RunHeader, certificate: Certificate) -> CertificateArtifact:
    return CertificateArtifact(header=header, p=certificate.p, q=certificate.q, q_variant_alt=certificate.q_variant_alt, unique=certificate.unique)


def containment_artifact(header: RunHeader, envelope: BoundEnvelope, table: ContainmentTable, measured_eps: float | None = None) -> ContainmentArtifact:
    return ContainmentArtifact(
        header=header,
        kind=envelope.kind,
        prefactor=envelope.prefactor,
        measured_eps=measured_eps,
        all_contained=table.all_contained,
        x=table.nodes.tolist(),
        magnitude=_finite_or_none(table.magnitudes),
        bound=table.bound.tolist(),
        contained=[bool(c) if j else None for c, j in zip(table.contained, table.judged, strict=True)],
    )


def verify_artifact(header: RunHeader, study: RefinementStudy) -> VerifyArtifact:
    rows = [
        VerifyRow(n=level.n, iterations=level.report.iterations, residual=level.residual, round_trip=level.round_trip)
        for level in study.levels
        if level.residual is not None
    ]
    return VerifyArtifact(header=header, rows=rows, residual_ratio=study.residual_ratio, round_trip_ratio=study.round_trip_ratio)


# =========================================================================
# RENDERING
# =========================================================================


def render(artifact: BaseModel, fmt: str) -> str:
    """Serialize an artifact as "json" or "csv"."""
    if fmt == "json":
        return _json(artifact)
    if fmt != "csv":
        raise InvalidInputError(f"unknown output format '{fmt}'")

    if isinstance(artifact, SolutionArtifact):
        extra = {
            "status": artifact.status,
            "iterations": str(artifact.iterations),
            "final_delta": artifact.final_delta,
            "certified": artifact.certified,
            "q": artifact.q,
            "residual": artifact.residual,
        }
        rows = zip(artifact.x, artifact.psi_x, artifact.r, [math.inf if z is None else z for z in artifact.z], strict=True)
        return _csv(artifact.header, extra, ["x", "psi_x", "r", "z"], rows)

    if isinstance(artifact, CertificateArtifact):
        return _csv(artifact.header, {}, ["p", "q", "q_variant_alt", "unique"], [(artifact.p, artifact.q, artifact.q_variant_alt, artifact.unique)])

    if isinstance(artifact, ContainmentArtifact):
        column = "abs_z" if artifact.kind == "a-priori" else "abs_z_minus_v"
        extra = {"kind": artifact.kind, "prefactor": artifact.prefactor, "measured_eps": artifact.measured_eps, "all_contained": artifact.all_contained}
        rows = (
            (x, math.inf if m is None else m, b, "-" if c is None else c)
            for x, m, b, c in zip(artifact.x, artifact.magnitude, artifact.bound, artifact.contained, strict=True)
        )
        return _csv(artifact.header, extra, ["x", column, "bound", "contained"], rows)

    if isinstance(artifact, VerifyArtifact):
        extra = {"residual_ratio": artifact.residual_ratio, "round_trip_ratio": artifact.round_trip_ratio}
        rows = ((str(row.n), str(row.iterations), row.residual, row.round_trip) for row in artifact.rows)
        return _csv(artifact.header, extra, ["n", "iterations", "residual", "round_trip"], rows)

    raise InvalidInputError(f"no CSV layout for {type(artifact).__name__}")


def write_output(text: str, output: Path | None) -> None:
    """Write to the given path, or to standard output when none is given."""
    if output is None:
        print(text, end="")
        return
    output = Path(output)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    logger.info("cli: wrote %s", output)


def read_reference_solution(path: Path) -> SolutionGrid:
    """Load a JSON solve artifact back into a SolutionGrid."""
    artifact = SolutionArtifact.model_validate_json(Path(path).read_text(encoding="utf-8"))
    return SolutionGrid(
        nodes=np.array(artifact.x),
        psi_nodes=np.array(artifact.psi_x),
        gamma=artifact.header.gamma,
        regular_values=np.array(artifact.r),
    )
