import csv
import io
import json
import logging
from pathlib import Path
from typing import NoReturn, Optional

import typer
from pydantic import BaseModel, ValidationError

from algebras.bimodule import Bimodule, dual, regular
from algebras.split import BimoduleSequence, SplitAlgebra
from config import (
    DEFAULT_SEED,
    CoefficientKind,
    DegreeCapConfig,
    ExitCode,
    OutputFormat,
    RunDefaults,
    SplitCoefficient,
    TheoremId,
)
from core import corpus
from core.models import CohomologyReport, DoubleComplexReport, LESReport, RunConfig, Status, Verdict
from core.theorem_suite import verify as run_verifier
from fetch_prep_data.parser import InputKind, LoadedInput, parse_bimodule, parse_input
from fetch_prep_data.reader import read_input_file, resolve_input
from hochschild.bigraded import BigradedComplex
from hochschild.complexes import hochschild_complex, homology_dims
from hochschild.ext import bimodule_ext_dims
from hochschild.les import assemble_les, bidegree_blocks
from linalg.errors import HochschildError, HypothesisError, InputError, VerificationError
from linalg.field import FieldSpec

# Input problems exit with 2, failed checks with 1

app = typer.Typer(help="Hochschild cohomology of split algebras over Q and F_p")

INPUT_HELP = "Corpus name (e.g. dualnumbers) or path to a JSON input file"


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(message)s", force=True)


def _pick_source(
    source: Optional[str], algebra: Optional[str], split: Optional[str], quiver: Optional[str]
) -> tuple[str, Optional[InputKind]]:
    """The one input given, with the format its flag demands (None: any)."""
    given = [
        (value, kind)
        for value, kind in ((source, None), (algebra, None), (split, InputKind.SPLIT), (quiver, InputKind.QUIVER))
        if value
    ]
    if len(given) != 1:
        raise InputError("give exactly one input: SOURCE, --algebra, --split or --quiver")
    return given[0]


def _run_config(command: str, source: Optional[str], field: Optional[str], max_degree: int, seed: int, fmt: OutputFormat) -> RunConfig:
    inputs = [resolve_input(source)] if source else []
    try:
        return RunConfig(
            command=command, inputs=inputs, field=field, max_degree=max_degree, seed=seed, output_format=fmt
        )
    except ValidationError as e:
        raise InputError(e.errors()[0]["msg"]) from e


def _load(config: RunConfig, kind: Optional[InputKind] = None) -> LoadedInput:
    override = FieldSpec.parse(config.field) if config.field else None
    loaded = parse_input(read_input_file(config.inputs[0]), override)
    if kind is not None and loaded.kind != kind:
        raise InputError(f"'{loaded.name}' is a {loaded.kind} file, expected a {kind} file")
    return loaded


def _coefficients(loaded: LoadedInput, coeff: CoefficientKind, coeff_file: Optional[Path]) -> Bimodule:
    a = loaded.algebra
    if coeff == CoefficientKind.SELF:
        return regular(a)
    if coeff == CoefficientKind.DUAL:
        return dual(regular(a), name=f"D{a.name}")
    if coeff_file is None:
        raise InputError("--coeff file needs --coeff-file")
    return parse_bimodule(read_input_file(coeff_file), a)


def _split(loaded: LoadedInput) -> tuple[SplitAlgebra, BimoduleSequence]:
    if loaded.split is None:
        raise InputError(f"'{loaded.name}' is not a split algebra")
    return loaded.split, corpus.sequence(loaded.split)


def _target(seq: BimoduleSequence, target: SplitCoefficient) -> Bimodule:
    return {
        SplitCoefficient.IDEAL: seq.sub,
        SplitCoefficient.QUOTIENT: seq.quotient,
        SplitCoefficient.TOTAL: seq.middle,
    }[target]


def _csv(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _emit(report: BaseModel, fmt: OutputFormat, header: list[str], rows: list[list], text: list[str]) -> None:
    if fmt == OutputFormat.JSON:
        typer.echo(report.model_dump_json(indent=2))
    elif fmt == OutputFormat.CSV:
        typer.echo(_csv(header, rows))
    else:
        for line in text:
            typer.echo(line)


def _fail(e: Exception) -> NoReturn:
    """Map library errors onto exit codes."""
    if isinstance(e, (InputError, HypothesisError)):
        typer.echo(f"❌ Error: {e}", err=True)
        typer.echo("💡 Please check your input and try again.", err=True)
        raise typer.Exit(ExitCode.INPUT_ERROR.value)
    if isinstance(e, VerificationError):
        typer.echo(f"❌ Check failed: {e}", err=True)
        raise typer.Exit(ExitCode.VERIFICATION_FAILED.value)
    typer.echo(f"❌ Unexpected Error: {e}", err=True)
    raise typer.Exit(ExitCode.INPUT_ERROR.value)


def _dims_text(title: str, dims: list[int]) -> list[str]:
    """A title line, then the dimensions in degree order on one line."""
    return [title, " ".join(str(d) for d in dims)]


def _bigraded_table(columns: dict[tuple[int, int], int], max_degree: int) -> list[str]:
    """q runs down the rows from max_degree to 0, p across the columns."""
    width = max(len(str(d)) for d in columns.values()) + 1
    lines = ["  q\\p " + "".join(f"{p:>{width}}" for p in range(max_degree + 1))]
    for q in range(max_degree, -1, -1):
        cells = [str(columns[(p, q)]) if (p, q) in columns else "." for p in range(max_degree + 1)]
        lines.append(f"  {q:>3} " + "".join(f"{c:>{width}}" for c in cells))
    return lines


@app.command()
def cohomology(
    source: Optional[str] = typer.Argument(None, help=INPUT_HELP),
    algebra: Optional[str] = typer.Option(None, "--algebra", "-a", help="Algebra input in any format"),
    split: Optional[str] = typer.Option(None, "--split", help="Split-algebra input file"),
    quiver: Optional[str] = typer.Option(None, "--quiver", help="Quiver input file"),
    coeff: CoefficientKind = typer.Option(CoefficientKind.SELF, "--coeff", "-c", help="Coefficients: self, dual or file"),
    coeff_file: Optional[Path] = typer.Option(None, "--coeff-file", help="Bimodule JSON file for --coeff file"),
    target: Optional[SplitCoefficient] = typer.Option(
        None, "--target", "-t", help="For split inputs: ideal, quotient or total as coefficients"
    ),
    max_degree: int = typer.Option(RunDefaults.MAX_DEGREE.value, "--max-degree", "-n", help="Highest degree"),
    field: Optional[str] = typer.Option(None, "--field", "-f", help="Override the field: Q or Fp:<p>"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", help="json, csv or text"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", help="Seed recorded in the report"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose output"),
):
    """dim H^n(A, X) for n = 0..max-degree"""
    _configure_logging(verbose)
    try:
        path, kind = _pick_source(source, algebra, split, quiver)
        config = _run_config("cohomology", path, field, max_degree, seed, fmt)
        loaded = _load(config, kind)
        if target is not None:
            _, seq = _split(loaded)
            x = _target(seq, target)
        else:
            x = _coefficients(loaded, coeff, coeff_file)
        if verbose:
            typer.echo(f"🔍 {loaded.name} (dim {loaded.algebra.dim}) with coefficients {x.name} (dim {x.dim})")
        dims = hochschild_complex(loaded.algebra, x, config.max_degree).dims()
        report = CohomologyReport(
            algebra=loaded.name,
            coefficients=x.name,
            field=loaded.algebra.field.label,
            dims=dims,
            max_degree=config.max_degree,
            seed=config.seed,
        )
    except HochschildError as e:
        _fail(e)
    _emit(
        report,
        fmt,
        ["degree", "dim"],
        [[n, d] for n, d in enumerate(dims)],
        _dims_text(f"📐 H*({report.algebra}, {report.coefficients}) over {report.field}", dims),
    )


@app.command()
def homology(
    source: Optional[str] = typer.Argument(None, help=INPUT_HELP),
    algebra: Optional[str] = typer.Option(None, "--algebra", "-a", help="Algebra input in any format"),
    split: Optional[str] = typer.Option(None, "--split", help="Split-algebra input file"),
    quiver: Optional[str] = typer.Option(None, "--quiver", help="Quiver input file"),
    coeff: CoefficientKind = typer.Option(CoefficientKind.SELF, "--coeff", "-c", help="Coefficients: self, dual or file"),
    coeff_file: Optional[Path] = typer.Option(None, "--coeff-file", help="Bimodule JSON file for --coeff file"),
    max_degree: int = typer.Option(DegreeCapConfig.HOMOLOGY_DEFAULT.value, "--max-degree", "-n", help="Highest degree"),
    field: Optional[str] = typer.Option(None, "--field", "-f", help="Override the field: Q or Fp:<p>"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", help="json, csv or text"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose output"),
):
    """dim H_n(A, N) for n = 0..max-degree"""
    _configure_logging(verbose)
    try:
        path, kind = _pick_source(source, algebra, split, quiver)
        config = _run_config("homology", path, field, max_degree, 0, fmt)
        loaded = _load(config, kind)
        n = _coefficients(loaded, coeff, coeff_file)
        dims = homology_dims(loaded.algebra, n, config.max_degree)
        report = CohomologyReport(
            algebra=loaded.name,
            coefficients=n.name,
            field=loaded.algebra.field.label,
            kind="homology",
            dims=dims,
            max_degree=config.max_degree,
        )
    except HochschildError as e:
        _fail(e)
    _emit(
        report,
        fmt,
        ["degree", "dim"],
        [[k, d] for k, d in enumerate(dims)],
        _dims_text(f"📐 H_*({report.algebra}, {report.coefficients}) over {report.field}", dims),
    )


@app.command()
def ext(
    source: Optional[str] = typer.Argument(None, help=INPUT_HELP),
    algebra: Optional[str] = typer.Option(None, "--algebra", "-a", help="Algebra input in any format"),
    split: Optional[str] = typer.Option(None, "--split", help="Split-algebra input file"),
    quiver: Optional[str] = typer.Option(None, "--quiver", help="Quiver input file"),
    coeff: CoefficientKind = typer.Option(CoefficientKind.SELF, "--coeff", "-c", help="Second argument X: self, dual or file"),
    coeff_file: Optional[Path] = typer.Option(None, "--coeff-file", help="Bimodule JSON file for --coeff file"),
    module_file: Optional[Path] = typer.Option(
        None, "--module-file", help="First argument N as a bimodule JSON file; the algebra itself when omitted"
    ),
    max_degree: int = typer.Option(DegreeCapConfig.EXT_DEFAULT_QMAX.value, "--max-degree", "-n", help="Highest degree"),
    field: Optional[str] = typer.Option(None, "--field", "-f", help="Override the field: Q or Fp:<p>"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", help="json, csv or text"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose output"),
):
    """dim Ext^q over the enveloping algebra, from a free resolution"""
    _configure_logging(verbose)
    try:
        path, kind = _pick_source(source, algebra, split, quiver)
        config = _run_config("ext", path, field, max_degree, 0, fmt)
        loaded = _load(config, kind)
        a = loaded.algebra
        n = parse_bimodule(read_input_file(module_file), a) if module_file else regular(a)
        x = _coefficients(loaded, coeff, coeff_file)
        dims = bimodule_ext_dims(n, x, config.max_degree)
        report = CohomologyReport(
            algebra=loaded.name,
            coefficients=f"{n.name},{x.name}",
            field=a.field.label,
            kind="ext",
            dims=dims,
            max_degree=config.max_degree,
        )
    except HochschildError as e:
        _fail(e)
    _emit(
        report,
        fmt,
        ["degree", "dim"],
        [[q, d] for q, d in enumerate(dims)],
        [f"📚 Ext*_env({report.algebra})({n.name}, {x.name}) over {report.field}"]
        + [f"  Ext^{q} = {d}" for q, d in enumerate(dims)],
    )


@app.command("double-complex")
def double_complex(
    source: Optional[str] = typer.Argument(None, help="Split algebra: corpus name or JSON file"),
    algebra: Optional[str] = typer.Option(None, "--algebra", "-a", help="Algebra input in any format"),
    split: Optional[str] = typer.Option(None, "--split", help="Split-algebra input file"),
    quiver: Optional[str] = typer.Option(None, "--quiver", help="Quiver input file"),
    target: SplitCoefficient = typer.Option(SplitCoefficient.QUOTIENT, "--target", "-t", help="ideal, quotient or total"),
    max_degree: int = typer.Option(2, "--max-degree", "-n", help="Highest total degree"),
    field: Optional[str] = typer.Option(None, "--field", "-f", help="Override the field: Q or Fp:<p>"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", help="json, csv or text"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", help="Seed recorded in the report"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose output"),
):
    """Column cohomology H^q(C^p(X)) of the bigraded decomposition"""
    _configure_logging(verbose)
    try:
        path, kind = _pick_source(source, algebra, split, quiver)
        config = _run_config("double-complex", path, field, max_degree, seed, fmt)
        lam, seq = _split(_load(config, kind))
        x = _target(seq, target)
        bc = BigradedComplex(lam, x, config.max_degree)
        columns = bc.column_dims()
        # d_h = 0 needs M² = 0 and M acting as zero on X
        verdict = Status.NOT_APPLICABLE
        if lam.square_zero and target != SplitCoefficient.TOTAL:
            verdict = Status.PASS if bc.horizontal_is_zero() else Status.FAIL
        blocks = {n: bidegree_blocks(seq, n) for n in range(config.max_degree + 1)} if lam.square_zero else {}
        report = DoubleComplexReport(
            algebra=lam.name,
            coefficients=x.name,
            field=lam.field.label,
            max_degree=config.max_degree,
            columns={f"{p},{q}": d for (p, q), d in columns.items()},
            total=hochschild_complex(lam.total, x, config.max_degree).dims(),
            horizontal_zero=verdict,
            blocks=blocks,
            seed=config.seed,
        )
    except HochschildError as e:
        _fail(e)
    text = [f"🧱 {report.algebra} with {report.coefficients} over {report.field}"]
    text += _bigraded_table(columns, config.max_degree)
    text.append(f"  total: {report.total}")
    text.append(f"  d_h = 0: {verdict.value}" + (" (hypothesis not met)" if verdict == Status.NOT_APPLICABLE else ""))
    for n, row in blocks.items():
        text.append(f"  δ^{n} blocks: " + ", ".join(f"({b.p},{b.q}) rank {b.rank}" for b in row))
    _emit(report, fmt, ["p", "q", "dim"], [[p, q, d] for (p, q), d in sorted(columns.items())], text)


@app.command()
def les(
    source: Optional[str] = typer.Argument(None, help="Split algebra: corpus name or JSON file"),
    algebra: Optional[str] = typer.Option(None, "--algebra", "-a", help="Algebra input in any format"),
    split: Optional[str] = typer.Option(None, "--split", help="Split-algebra input file"),
    quiver: Optional[str] = typer.Option(None, "--quiver", help="Quiver input file"),
    max_degree: int = typer.Option(2, "--max-degree", "-n", help="Highest degree"),
    field: Optional[str] = typer.Option(None, "--field", "-f", help="Override the field: Q or Fp:<p>"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", help="json, csv or text"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose output"),
):
    """The long exact sequence of 0 -> M -> Λ -> Λ/M -> 0 with the ranks of its maps"""
    _configure_logging(verbose)
    try:
        path, kind = _pick_source(source, algebra, split, quiver)
        config = _run_config("les", path, field, max_degree, 0, fmt)
        _, seq = _split(_load(config, kind))
        report: LESReport = assemble_les(seq, config.max_degree)
    except HochschildError as e:
        _fail(e)
    text = [f"🔗 {report.algebra} (exact: {'yes' if report.exact else 'no'})"]
    for node in report.nodes:
        text.append(f"  H^{node.degree}(Λ, {node.label}) = {node.dim}  [in {node.rank_in}, out {node.rank_out}]")
    if report.center is not None:
        c = report.center
        text.append(f"  center {c.center} = {c.base_part} + {c.ideal_part}, ker δ⁰ = {c.kernel_delta0}")
    rows = [[node.degree, node.label, node.dim, node.rank_in, node.rank_out] for node in report.nodes]
    _emit(report, fmt, ["degree", "term", "dim", "rank_in", "rank_out"], rows, text)


class VerifyRun(BaseModel):
    verdicts: list[Verdict]


@app.command()
def verify(
    theorem_ids: Optional[list[str]] = typer.Argument(None, help="Verifier ids; 'all' or none runs every registered one"),
    max_degree: int = typer.Option(RunDefaults.MAX_DEGREE.value, "--max-degree", "-n", help="Upper bound on degrees"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", help="Seed for randomized checks"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", help="json, csv or text"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose output"),
):
    """Run registered verifiers on the corpus"""
    _configure_logging(verbose)
    try:
        config = _run_config("verify", None, None, max_degree, seed, fmt)
        if not theorem_ids or theorem_ids == ["all"]:
            ids = [t.value for t in TheoremId]
        else:
            ids = theorem_ids
        verdicts = [run_verifier(i, config.seed, config.max_degree) for i in ids]
    except HochschildError as e:
        _fail(e)
    run = VerifyRun(verdicts=verdicts)
    if fmt == OutputFormat.JSON:
        typer.echo(json.dumps([v.summary() for v in verdicts], indent=2, ensure_ascii=False))
    else:
        rows = [[v.theorem_id, i.algebra, i.status.value] for v in verdicts for i in v.instances]
        text = []
        for v in verdicts:
            text.append(f"{'✅' if v.overall else '❌'} {v.theorem_id}: {v.title}")
            for i in v.instances:
                mark = {Status.PASS: "  ✔", Status.FAIL: "  ✘", Status.NOT_APPLICABLE: "  –"}[i.status]
                text.append(f"{mark} {i.algebra}" + (f" ({i.note})" if i.note else ""))
        _emit(run, fmt, ["theorem_id", "algebra", "status"], rows, text)
    if not all(v.overall for v in verdicts):
        raise typer.Exit(ExitCode.VERIFICATION_FAILED.value)


if __name__ == "__main__":
    app()
