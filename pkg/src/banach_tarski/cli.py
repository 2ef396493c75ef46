"""Command-line front end: every verifier and demo, with JSON reports.

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on a
usage or configuration error.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import click

from .geometry import (
    PAIRS,
    axis_orbit_demo,
    ball_demo,
    export_points,
    freeness_scan,
    parse_rational,
    parse_vector,
    sphere_demo,
)
from .orbit import build_orbit_partition, normalize_omega, verify_canonical_uniqueness, verify_orbit_pairing
from .paradox import (
    ConfigurationError,
    F2Universe,
    FreenessError,
    f2_paradox_witness,
    mutate,
    validate,
    witness_descriptor,
    witness_from_descriptor,
)
from .partition import (
    build_21gen,
    build_21tau,
    green_check,
    omega_suite,
    tau_suite,
    verify_base_pairing,
    verify_theorem_pairing,
)
from .report import Report
from .words import TAU, WordParseError, format_word, parse

DEFAULT_SEED = "3/5,4/5,0"


@dataclass
class RunConfig:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    workers: int = 1
    out: Path | None = None


def build_output(config: RunConfig, reports: list[Report], extra: dict | None = None, seconds: float = 0.0) -> dict:
    out: dict[str, Any] = {"command": config.command, "parameters": config.params}
    if extra:
        out.update(extra)
    out["reports"] = [r.to_dict() for r in reports]
    out["counts"] = {
        "reports": len(reports),
        "checked": sum(r.words_checked for r in reports),
        "violations": sum(r.violation_count for r in reports),
    }
    out["pass"] = all(r.passed for r in reports)
    out["timing"] = {"seconds": round(seconds, 3), "workers": config.workers}
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def strip_timing(doc: dict | str) -> dict:
    if isinstance(doc, str):
        doc = json.loads(doc)
    return {k: v for k, v in doc.items() if k != "timing"}


def _emit(config: RunConfig, doc: dict) -> None:
    text = dumps(doc)
    if config.out is not None:
        config.out.write_text(text)
    else:
        click.echo(text, nl=False)
    sys.exit(0 if doc["pass"] else 1)


def _run(config: RunConfig, body) -> None:
    start = time.perf_counter()
    try:
        reports, extra = body()
    except FreenessError as exc:
        rep = Report("seed_certificate", {"seed": str(exc.seed)})
        rep.add(format_word(exc.word), None, str(exc))
        reports, extra = [rep], None
    except (ConfigurationError, ValueError) as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(config, build_output(config, reports, extra, time.perf_counter() - start))


def _word(text: str, param: str) -> Any:
    try:
        return parse(text)
    except WordParseError as exc:
        raise click.BadParameter(str(exc), param_hint=param) from exc


def _n_option(f):
    return click.option("--n", "n", type=click.IntRange(min=2), required=True, help="number of parts (>= 2)")(f)


def _common(f):
    f = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="write JSON here instead of stdout")(f)
    f = click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True, help="worker processes")(f)
    return f


def _pair_option(f):
    return click.option(
        "--generators", type=click.Choice(sorted(PAIRS)), default="zy", show_default=True,
        help="rotation axes for sigma and tau",
    )(f)


def _seeds(texts: tuple[str, ...]) -> list:
    out = []
    for t in texts or (DEFAULT_SEED,):
        try:
            out.append(parse_vector(t))
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--seed") from exc
    return out


def _radii(text: str) -> list:
    try:
        return [parse_rational(t) for t in text.split(",")]
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--radii") from exc


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Verify paradoxical decompositions of F2, the sphere and the ball."""


@main.command()
@_n_option
@click.option("--max-len", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--k-max", type=click.IntRange(min=1), default=6, show_default=True, help="largest power in the gamma sweep")
@click.option("--omega", help="check this omega instead of the built-in suite")
@_common
def lemmas(n, max_len, k_max, omega, workers, out):
    """Base pairing, gamma-power sweep and partition pairing."""
    omegas = None if omega is None else [_word(omega, "--omega")]
    config = RunConfig("lemmas", {"n": n, "max_len": max_len, "k_max": k_max, "omega": omega}, workers, out)

    def body():
        reports = [verify_base_pairing(n, max_len, workers)]
        green = Report("green_check", {"n": n, "k_max": k_max})
        for i in range(n):
            for k in range(1, k_max + 1):
                for m in range(n - 1):
                    green.words_checked += 1
                    if not green_check(n, i, k, m):
                        green.add(f"i={i} k={k} m={m}", i, "gamma_i^+-k S^m outside A_i*/B_i*")
        reports.append(green)
        gen = omegas if omegas is not None else omega_suite(n)
        tau = [w for w in (omegas or []) if w and w[0] == TAU] if omegas is not None else tau_suite(n)
        for w in gen:
            reports.append(verify_theorem_pairing(build_21gen(n, w), max_len, workers))
        for w in tau:
            reports.append(verify_theorem_pairing(build_21tau(n, w), max_len, workers))
        return reports, None

    _run(config, body)


@main.command()
@_n_option
@click.option("--omega", required=True, help="stabiliser word of the base point")
@click.option("--max-len", type=click.IntRange(min=1), default=9, show_default=True)
@_common
def orbit(n, omega, max_len, workers, out):
    """Canonical forms and the partition of an orbit with stabiliser <omega>."""
    w = _word(omega, "--omega")
    if not w:
        raise click.BadParameter("omega must be a nontrivial word", param_hint="--omega")
    config = RunConfig("orbit", {"n": n, "omega": omega, "max_len": max_len}, workers, out)

    def body():
        norm = normalize_omega(w)
        transcript = norm.transcript()
        reports = [
            verify_canonical_uniqueness(norm.orbit, max_len, workers, transcript),
            verify_orbit_pairing(build_orbit_partition(n, norm.orbit), max_len, workers, transcript),
        ]
        extra = {
            "normalization": {
                "omega": format_word(norm.orbit.omega),
                "rebase": format_word(norm.rebase),
                "steps": transcript,
            }
        }
        return reports, extra

    _run(config, body)


@main.command()
@click.option("--max-len", type=click.IntRange(min=1), default=12, show_default=True)
@_pair_option
@_common
def freeness(max_len, generators, workers, out):
    """No nontrivial word of length <= max-len maps to the identity rotation."""
    config = RunConfig("freeness", {"max_len": max_len, "generators": generators}, workers, out)
    _run(config, lambda: ([freeness_scan(max_len, PAIRS[generators], workers)], None))


@main.command()
@click.option("--n", "n", type=click.IntRange(min=2), help="number of parts (>= 2); not needed with --replay")
@click.option("--max-len", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--replay", type=click.Path(exists=True, dir_okay=False, path_type=Path), help="witness JSON to validate")
@click.option("--dump", type=click.Path(dir_okay=False, path_type=Path), help="write the witness JSON here")
@click.option("--mutate", "mutation", type=click.Choice(["drop_piece", "swap_movers", "shrink_piece"]))
@_common
def witness(n, max_len, replay, dump, mutation, workers, out):
    """Validate the 2n-piece witness that F2 is (n, 2n)-paradoxical."""
    if replay is None and n is None:
        raise click.UsageError("give --n or --replay")
    params = {"n": n, "max_len": max_len, "replay": str(replay) if replay else None, "mutate": mutation}
    config = RunConfig("witness", params, workers, out)

    def body():
        wit = witness_from_descriptor(replay.read_text()) if replay else f2_paradox_witness(n)
        if mutation:
            wit = mutate(wit, mutation)
        universe_ref = f"f2:max_len={max_len}"
        if dump:
            dump.write_text(dumps(witness_descriptor(wit, universe_ref)))
        rep = validate(wit, F2Universe(max_len), workers)
        extra = {"witness": witness_descriptor(wit, universe_ref)}
        return [rep], extra

    _run(config, body)


def _points_options(f):
    f = click.option("--format", "fmt", type=click.Choice(["csv", "ply"]), help="export format (default: from suffix)")(f)
    f = click.option("--points", type=click.Path(dir_okay=False, path_type=Path), help="write labelled points here")(f)
    return f


def _export(points, path, fmt) -> dict:
    if path is None:
        return {}
    export_points(points, path, fmt)
    return {"export": {"path": str(path), "points": len(points)}}


def _label_counts(points) -> dict:
    counts: dict[str, int] = {}
    for p in points:
        counts[p.label] = counts.get(p.label, 0) + 1
    return dict(sorted(counts.items()))


@main.command()
@_n_option
@click.option("--seed", "seeds", multiple=True, help='exact unit vector "x,y,z" (repeatable)')
@click.option("--depth", type=click.IntRange(min=1), default=6, show_default=True)
@click.option("--axis", help="instead of seeds, use the orbit of the axis of this word")
@_pair_option
@_points_options
@_common
def sphere(n, seeds, depth, axis, generators, points, fmt, workers, out):
    """Label sphere orbit fragments by the 2n pieces and validate the pairing."""
    pair = PAIRS[generators]
    if axis is not None:
        w = _word(axis, "--axis")
        if not w:
            raise click.BadParameter("axis word must be nontrivial", param_hint="--axis")
        config = RunConfig("sphere", {"n": n, "axis": axis, "depth": depth, "generators": generators}, workers, out)
        _run(config, lambda: ([axis_orbit_demo(n, w, depth, pair)], None))
        return
    seed_vs = _seeds(seeds)
    params = {"n": n, "seeds": [s.text() for s in seed_vs], "depth": depth, "generators": generators}
    config = RunConfig("sphere", params, workers, out)

    def body():
        demo = sphere_demo(n, seed_vs, depth, pair, workers)
        extra = {"labels": _label_counts(demo.points)}
        extra.update(_export(demo.points, points, fmt))
        return demo.reports, extra

    _run(config, body)


@main.command()
@_n_option
@click.option("--seed", "seeds", multiple=True, help='exact unit vector "x,y,z"; the first is the designated orbit')
@click.option("--depth", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--radii", default="1,1/2", show_default=True, help="comma-separated radii in (0,1]; 1 is always added")
@_pair_option
@_points_options
@_common
def ball(n, seeds, depth, radii, generators, points, fmt, workers, out):
    """Build and validate the (3n-1)-piece decomposition of the ball."""
    seed_vs = _seeds(seeds)
    rs = _radii(radii)
    params = {
        "n": n, "seeds": [s.text() for s in seed_vs], "depth": depth,
        "radii": [str(r) for r in rs], "generators": generators,
    }
    config = RunConfig("ball", params, workers, out)

    def body():
        demo = ball_demo(n, seed_vs, rs, depth, PAIRS[generators], workers)
        extra = {"pieces": [p.ref for p in demo.witness.all_pieces()], "labels": _label_counts(demo.points)}
        extra.update(_export(demo.points, points, fmt))
        return demo.reports, extra

    _run(config, body)


@main.command()
@click.argument("kind", type=click.Choice(["sphere", "ball"]))
@_n_option
@click.option("--seed", "seeds", multiple=True, help='exact unit vector "x,y,z" (repeatable)')
@click.option("--depth", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--radii", default="1,1/2", show_default=True, help="ball only")
@_pair_option
@click.option("--points", type=click.Path(dir_okay=False, path_type=Path), required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "ply"]))
@_common
def export(kind, n, seeds, depth, radii, generators, points, fmt, workers, out):
    """Run a sphere or ball demo and write its labelled points."""
    seed_vs = _seeds(seeds)
    pair = PAIRS[generators]
    params = {"kind": kind, "n": n, "seeds": [s.text() for s in seed_vs], "depth": depth, "generators": generators}
    if kind == "ball":
        params["radii"] = radii
    config = RunConfig("export", params, workers, out)

    def body():
        if kind == "sphere":
            demo = sphere_demo(n, seed_vs, depth, pair, workers)
        else:
            demo = ball_demo(n, seed_vs, _radii(radii), depth, pair, workers)
        extra = {"labels": _label_counts(demo.points)}
        extra.update(_export(demo.points, points, fmt))
        return demo.reports, extra

    _run(config, body)


if __name__ == "__main__":  # pragma: no cover
    main()
