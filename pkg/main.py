from contextlib import contextmanager
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import typer

import config
from cli.display import (
    make_log_handler,
    print_banner,
    print_check_table,
    print_error,
    print_multiset_table,
    print_success,
    setup_logging,
)
from cli.formats import format_coefficients, load_biquandle, load_coefficients, load_diagram, load_nor_coefficients
from cli.schemas import (
    CheckPayload,
    ColoringsPayload,
    ComparePayload,
    DiagramPayload,
    EquivalencePayload,
    MoveStep,
    MultisetEntry,
    MultisetPayload,
    OutputFormat,
    ParityPayload,
    PerturbPayload,
    RealizabilityPayload,
    RunConfig,
    SamplePayload,
    SearchPayload,
    ValuePayload,
    ViolationPayload,
)
from invariants import (
    InvariantMultiset,
    biquandle_bracket_multiset,
    check_axioms,
    compare_multisets,
    enumerate_colorings,
    format_parity,
    get_parity,
    kauffman_oracle,
    parity_bracket,
    pb_bracket_multiset,
    run_equivalence_test,
    search_coefficients,
    verify_nor_relations,
    verify_pbbr_relations,
)
from knots import LinkDiagram, carrier_genus, classical_realizability, random_equivalent_diagram, writhe
from rings import IntegerRing, ModularRing, get_ring

app = typer.Typer(
    name="knotbracket",
    help="knotbracket - biquandle colorings, parities and picture-valued brackets of virtual links.",
    add_completion=False,
)

INVARIANTS = ("pb", "nor", "parity", "colorings")


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log every step (DEBUG) to stderr."),
):
    setup_logging(verbose)


@contextmanager
def input_errors() -> Iterator[None]:
    """Input errors become an error panel and exit status 2."""
    try:
        yield
    except typer.Exit:
        raise
    except (ValueError, RuntimeError, OSError) as e:
        print_error(str(e))
        raise typer.Exit(code=2)


def run_config(subcommand: str, inputs: List[Path], json_out: bool, **kwargs) -> RunConfig:
    return RunConfig(
        subcommand=subcommand,
        inputs=inputs,
        output=OutputFormat.JSON if json_out else OutputFormat.TEXT,
        **kwargs,
    )


def emit(cfg: RunConfig, text: str, payload) -> None:
    if cfg.output == OutputFormat.JSON:
        typer.echo(payload.model_dump_json(indent=2))
    else:
        typer.echo(text)


def multiset_entries(ms: InvariantMultiset) -> List[MultisetEntry]:
    return [MultisetEntry(value=v, multiplicity=m) for v, m in ms.items()]


# ─────────────────────────────────────────────────────────────────────────────
# Diagrams
# ─────────────────────────────────────────────────────────────────────────────

@app.command()
def parse(
    gauss_file: Path = typer.Argument(..., help="Gauss code file."),
    json_out:   bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Parse a Gauss code and print its canonical text form."""
    with input_errors():
        cfg = run_config("parse", [gauss_file], json_out)
        d = load_diagram(gauss_file)
        emit(cfg, d.serialize(), DiagramPayload(
            code=d.serialize(), components=len(d.components), crossings=d.crossing_count, writhe=writhe(d),
        ))


@app.command("writhe")
def writhe_cmd(
    gauss_file: Path = typer.Argument(..., help="Gauss code file."),
    json_out:   bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Print the writhe (sum of crossing signs)."""
    with input_errors():
        cfg = run_config("writhe", [gauss_file], json_out)
        d = load_diagram(gauss_file)
        emit(cfg, str(writhe(d)), DiagramPayload(
            code=d.serialize(), components=len(d.components), crossings=d.crossing_count, writhe=writhe(d),
        ))


@app.command()
def parity(
    gauss_file: Path = typer.Argument(..., help="Gauss code file."),
    gp:         bool = typer.Option(False, "--gp",   help="Gaussian parity (default)."),
    comp:       bool = typer.Option(False, "--comp", help="Component parity of a two-component link."),
    bp:         bool = typer.Option(False, "--bp",   help="Parity read off the Z2 flip biquandle coloring."),
    json_out:   bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Print the parity of every crossing as label:bit pairs."""
    with input_errors():
        chosen = [name for name, flag in (("gp", gp), ("comp", comp), ("bp", bp)) if flag]
        if len(chosen) > 1:
            raise ValueError("choose at most one of --gp, --comp, --bp")
        name = chosen[0] if chosen else "gp"
        cfg = run_config("parity", [gauss_file], json_out)
        p = get_parity(name)(load_diagram(gauss_file))
        emit(cfg, format_parity(p), ParityPayload(parity=name, assignment=p))


@app.command()
def realizable(
    gauss_file: Path = typer.Argument(..., help="Gauss code file."),
    json_out:   bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Decide whether the diagram is classical (its carrier surface has genus 0)."""
    with input_errors():
        cfg = run_config("realizable", [gauss_file], json_out)
        d = load_diagram(gauss_file)
        genus = carrier_genus(d)
        ok = classical_realizability(d)
        emit(cfg, f"{'true' if ok else 'false'} genus={genus}",
             RealizabilityPayload(code=d.serialize(), genus=genus, realizable=ok))


@app.command()
def perturb(
    gauss_file:     Path = typer.Argument(..., help="Gauss code file."),
    steps:          int  = typer.Option(10, "--steps", help="Number of random moves."),
    seed:           int  = typer.Option(0,  "--seed",  help="Random seed."),
    max_crossings:  int  = typer.Option(config.MAX_CROSSINGS, "--max-crossings", help="Never grow past this many crossings."),
    keep_classical: bool = typer.Option(False, "--keep-classical", help="Reject moves that change realizability."),
    json_out:       bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Apply a seeded random sequence of Reidemeister moves."""
    with input_errors():
        cfg = run_config("perturb", [gauss_file], json_out, seed=seed, steps=steps)
        d = load_diagram(gauss_file)
        applied: List[MoveStep] = []
        show = make_log_handler()

        def record(message: str) -> None:
            step, _, move = message.partition(": ")
            if not move.endswith("skipped"):
                applied.append(MoveStep(step=int(step.split()[1]), move=move))
            if not json_out:
                show(message)

        result = random_equivalent_diagram(
            d, steps, seed, max_crossings=max_crossings, keep_classical=keep_classical, log=record,
        )
        emit(cfg, f"# seed={seed}\n{result.serialize()}", PerturbPayload(
            seed=seed, steps=steps, moves=applied, code=result.serialize(),
        ))


# ─────────────────────────────────────────────────────────────────────────────
# Biquandles
# ─────────────────────────────────────────────────────────────────────────────

@app.command("biquandle-check")
def biquandle_check(
    biquandle: str  = typer.Argument(..., help="Biquandle file or built-in name (singleton, z2flip, z3dihedral)."),
    json_out:  bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Check the biquandle axioms; exit 1 with witnesses when one fails."""
    with input_errors():
        cfg = run_config("biquandle-check", [], json_out)
        X = load_biquandle(biquandle)
        report = check_axioms(X)
        rows = [(v.axiom, str(v.witness), v.detail) for v in report.violations]
        text = "ok" if report.ok else "\n".join(str(v) for v in report.violations)
        emit(cfg, text, CheckPayload(
            subject=X.name or biquandle, ok=report.ok,
            violations=[ViolationPayload(id=a, witness=w, detail=t) for a, w, t in rows],
        ))
    if not report.ok:
        if not json_out:
            print_check_table(f"Biquandle axioms ({X.name or biquandle})", rows)
        raise typer.Exit(code=1)


@app.command()
def colorings(
    gauss_file: Path = typer.Argument(..., help="Gauss code file."),
    biquandle:  str  = typer.Option("z2flip", "--biquandle", "-X", help="Biquandle file or built-in name."),
    show:       bool = typer.Option(False, "--list", help="Also print every coloring."),
    json_out:   bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Count the biquandle colorings of the diagram."""
    with input_errors():
        cfg = run_config("colorings", [gauss_file], json_out)
        X = load_biquandle(biquandle)
        found = enumerate_colorings(load_diagram(gauss_file), X)
        lines = [str(len(found))]
        if show:
            lines += [" ".join(map(str, f)) for f in found]
        emit(cfg, "\n".join(lines), ColoringsPayload(
            biquandle=X.name or biquandle, count=len(found),
            colorings=[list(f) for f in found] if show else [],
        ))


# ─────────────────────────────────────────────────────────────────────────────
# Brackets
# ─────────────────────────────────────────────────────────────────────────────

@app.command()
def paritybracket(
    gauss_file: Path = typer.Argument(..., help="Gauss code file."),
    parity:     str  = typer.Option("gp", "--parity", help="Parity: gp | component | bp | zero"),
    json_out:   bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Parity bracket: even crossings smoothed, odd crossings kept as vertices."""
    with input_errors():
        cfg = run_config("paritybracket", [gauss_file], json_out)
        value = parity_bracket(load_diagram(gauss_file), get_parity(parity))
        emit(cfg, value.serialize(), ValuePayload(ring="Z2", value=value.serialize()))


def _emit_multiset(cfg: RunConfig, ms: InvariantMultiset, polynomial: Optional[str] = None) -> None:
    text = ms.serialize()
    if polynomial is not None:
        text = f"{text}\n{polynomial}" if text else polynomial
    emit(cfg, text, MultisetPayload(
        ring=ms.ring.name, colorings=len(ms), values=multiset_entries(ms), polynomial=polynomial,
    ))


@app.command("nor-bracket")
def nor_bracket(
    gauss_file: Path = typer.Argument(..., help="Gauss code file."),
    coeffs:     Path = typer.Option(..., "--coeffs", help="Coefficient file with A and B tables."),
    polynomial: bool = typer.Option(False, "--polynomial", help="Also print the generating polynomial."),
    json_out:   bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Scalar biquandle bracket: one value per coloring, as a multiset."""
    with input_errors():
        cfg = run_config("nor-bracket", [gauss_file, coeffs], json_out)
        nor = load_nor_coefficients(coeffs)
        ms = biquandle_bracket_multiset(load_diagram(gauss_file), nor)
        _emit_multiset(cfg, ms, ms.polynomial() if polynomial else None)


@app.command()
def pbracket(
    gauss_file: Path = typer.Argument(..., help="Gauss code file."),
    coeffs:     Path = typer.Option(..., "--coeffs", help="Coefficient file (tables A..F, or A and B)."),
    json_out:   bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Parity-biquandle bracket: one picture-valued value per coloring."""
    with input_errors():
        cfg = run_config("pbracket", [gauss_file, coeffs], json_out)
        beta = load_coefficients(coeffs)
        _emit_multiset(cfg, pb_bracket_multiset(load_diagram(gauss_file), beta))


@app.command()
def kauffman(
    gauss_file: Path = typer.Argument(..., help="Gauss code file."),
    ring:       str  = typer.Option("LaurentZ", "--ring", help="Ring descriptor: Z<n>, Z or LaurentZ."),
    a:          str  = typer.Option("x", "-a", help="Value of the unit a, e.g. x or 2."),
    json_out:   bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Normalized Kauffman bracket by brute-force state sum."""
    with input_errors():
        cfg = run_config("kauffman", [gauss_file], json_out, ring=ring)
        R = get_ring(ring)
        value = R.format(kauffman_oracle(load_diagram(gauss_file), R, R.parse(a)))
        emit(cfg, value, ValuePayload(ring=R.name, value=value))


# ─────────────────────────────────────────────────────────────────────────────
# Coefficients
# ─────────────────────────────────────────────────────────────────────────────

@app.command("verify-coeffs")
def verify_coeffs(
    coeffs:         Path = typer.Argument(..., help="Coefficient file."),
    nor:            bool = typer.Option(False, "--nor", help="Check the scalar bracket relations on A and B only."),
    strict_printed: bool = typer.Option(False, "--strict-printed", help="Use the literal third-move relations."),
    json_out:       bool = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Check coefficients against the relation system; exit 1 with witnesses on failure."""
    with input_errors():
        cfg = run_config("verify-coeffs", [coeffs], json_out)
        if nor:
            report = verify_nor_relations(load_nor_coefficients(coeffs))
        else:
            report = verify_pbbr_relations(load_coefficients(coeffs), strict_printed=strict_printed)
        rows = [
            (v.id, " ".join(f"{k}={x}" for k, x in v.witness.items()) or "-", v.relation)
            for v in report.violations
        ]
        text = f"ok ({report.checked} instances)" if report.ok else "\n".join(str(v) for v in report.violations)
        emit(cfg, text, CheckPayload(
            subject=str(coeffs), ok=report.ok, checked=report.checked,
            violations=[ViolationPayload(id=i, witness=w, detail=t) for i, w, t in rows],
        ))
    if not report.ok:
        if not json_out:
            print_check_table(f"Relations ({coeffs.name})", rows, report.checked)
        raise typer.Exit(code=1)


def _parse_fix(items: List[str]) -> Dict[str, object]:
    """--fix delta=0, --fix C=1, --fix "A=1 0;0 1", --fix "B[0,1]=1"."""
    fix: Dict[str, object] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"--fix expects key=value, got '{item}'")
        value = value.strip()
        if ";" in value:
            fix[key.strip()] = [row.split() for row in value.split(";")]
        else:
            fix[key.strip()] = value
    return fix


@app.command("search-coeffs")
def search_coeffs(
    biquandle:      str           = typer.Option("z2flip", "--biquandle", "-X", help="Biquandle file or built-in name."),
    ring:           str           = typer.Option("Z2", "--ring", help="Finite ring Z<n>."),
    fix:            List[str]     = typer.Option([], "--fix", help="Pin a value: delta=0, w=1, C=0, \"A=1 0;0 1\", \"B[0,1]=1\"."),
    limit:          Optional[int] = typer.Option(None, "--limit", help=f"Node budget (default {config.SEARCH_LIMIT})."),
    strict_printed: bool          = typer.Option(False, "--strict-printed", help="Use the literal third-move relations."),
    json_out:       bool          = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Find every coefficient set over a small ring that satisfies the relations."""
    with input_errors():
        cfg = run_config("search-coeffs", [], json_out, ring=ring)
        X = load_biquandle(biquandle)
        R = get_ring(ring)
        if not json_out:
            print_banner("Coefficient search")
        pinned = {k: [[R.parse(v) for v in row] for row in val] if isinstance(val, list) else R.parse(val)
                  for k, val in _parse_fix(fix).items()}
        solutions = search_coefficients(
            X, R, fix=pinned, limit=limit, strict_printed=strict_printed,
            log=make_log_handler() if not json_out else (lambda msg: None),
        )
        texts = [format_coefficients(beta, biquandle) for beta in solutions]
        emit(cfg, "\n".join([f"# solutions={len(texts)}"] + [f"---\n{t}".rstrip("\n") for t in texts]),
             SearchPayload(ring=R.name, biquandle=X.name or biquandle, solutions=texts))


# ─────────────────────────────────────────────────────────────────────────────
# Comparison
# ─────────────────────────────────────────────────────────────────────────────

def invariant_of(
    invariant: str, coeffs: Optional[Path], biquandle: str, parity_name: str
) -> Tuple[Callable[[LinkDiagram], InvariantMultiset], str]:
    """The chosen invariant as a diagram -> multiset function, plus its description."""
    if invariant == "pb":
        if coeffs is None:
            raise ValueError("--coeffs is required for the pb invariant")
        beta = load_coefficients(coeffs)
        return (lambda d: pb_bracket_multiset(d, beta)), f"pb {coeffs.name}"
    if invariant == "nor":
        if coeffs is None:
            raise ValueError("--coeffs is required for the nor invariant")
        nor = load_nor_coefficients(coeffs)
        return (lambda d: biquandle_bracket_multiset(d, nor)), f"nor {coeffs.name}"
    if invariant == "parity":
        p = get_parity(parity_name)
        return (lambda d: InvariantMultiset(ModularRing(2), [parity_bracket(d, p)], 0)), f"parity bracket ({parity_name})"
    if invariant == "colorings":
        X = load_biquandle(biquandle)
        return (lambda d: InvariantMultiset(IntegerRing(), [len(enumerate_colorings(d, X))])), f"colorings {X.name or biquandle}"
    raise ValueError(f"Unknown invariant '{invariant}'. Supported: {', '.join(INVARIANTS)}")


@app.command()
def compare(
    left:       Path           = typer.Argument(..., help="First Gauss code file."),
    right:      Path           = typer.Argument(..., help="Second Gauss code file."),
    invariant:  str            = typer.Option("pb", "--invariant", help="pb | nor | parity | colorings"),
    coeffs:     Optional[Path] = typer.Option(None, "--coeffs", help="Coefficient file for pb / nor."),
    biquandle:  str            = typer.Option("z2flip", "--biquandle", "-X", help="Biquandle for colorings."),
    parity:     str            = typer.Option("gp", "--parity", help="Parity for the parity bracket."),
    json_out:   bool           = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Compare one invariant on two diagrams; exit 1 when the values differ."""
    with input_errors():
        inputs = [left, right] + ([coeffs] if coeffs else [])
        cfg = run_config("compare", inputs, json_out)
        fn, _ = invariant_of(invariant, coeffs, biquandle, parity)
        a, b = fn(load_diagram(left)), fn(load_diagram(right))
        equal = compare_multisets(a, b)
        emit(cfg, "equal" if equal else "different", ComparePayload(
            equal=equal, left=multiset_entries(a), right=multiset_entries(b),
        ))
    if not equal:
        if not json_out:
            print_multiset_table(left.name, a.items())
            print_multiset_table(right.name, b.items())
        raise typer.Exit(code=1)


@app.command("equiv-test")
def equiv_test(
    gauss_file:    Path           = typer.Argument(..., help="Gauss code file."),
    invariant:     str            = typer.Option("pb", "--invariant", help="pb | nor | parity | colorings"),
    coeffs:        Optional[Path] = typer.Option(None, "--coeffs", help="Coefficient file for pb / nor."),
    biquandle:     str            = typer.Option("z2flip", "--biquandle", "-X", help="Biquandle for colorings."),
    parity:        str            = typer.Option("gp", "--parity", help="Parity for the parity bracket."),
    samples:       int            = typer.Option(10, "--samples", help="Number of random equivalent diagrams."),
    steps:         int            = typer.Option(8,  "--steps",   help="Moves per sample."),
    seed:          int            = typer.Option(0,  "--seed",    help="Random seed."),
    max_crossings: int            = typer.Option(config.MAX_CROSSINGS, "--max-crossings", help="Crossing cap for samples."),
    json_out:      bool           = typer.Option(False, "--json", help="Print a JSON document instead of text."),
):
    """Check that an invariant agrees on random move-equivalent diagrams; exit 1 otherwise."""
    with input_errors():
        inputs = [gauss_file] + ([coeffs] if coeffs else [])
        cfg = run_config("equiv-test", inputs, json_out, seed=seed, steps=steps)
        if samples < 0:
            raise ValueError(f"samples must be non-negative, got {samples}")
        fn, description = invariant_of(invariant, coeffs, biquandle, parity)
        if not json_out:
            print_banner(f"Equivalence test: {description}")
        report = run_equivalence_test(
            load_diagram(gauss_file), lambda d: fn(d).serialize(), samples, steps, seed,
            max_crossings=max_crossings,
            log=make_log_handler() if not json_out else (lambda msg: None),
        )
        lines = [f"# seed={seed}"]
        lines += [f"{'equal' if s.equal else 'DIFFERENT'} {s.seed} {s.diagram.serialize()}" for s in report.samples]
        emit(cfg, "\n".join(lines), EquivalencePayload(
            seed=seed, invariant=description, baseline=report.baseline, ok=report.ok,
            samples=[SamplePayload(seed=s.seed, code=s.diagram.serialize(), equal=s.equal) for s in report.samples],
        ))
    if not report.ok:
        raise typer.Exit(code=1)
    if not json_out:
        print_success(f"{samples} sample(s) agree with the original diagram")


if __name__ == "__main__":
    app()
