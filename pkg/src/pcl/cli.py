"""Command line front end.

Subcommands mirror the library layers: enumerate the length-7 perfect
codes and partition classes, double a pair of extended classes into a
length-16 code, compute rank and kernel invariants, classify the derived
triple systems, check the folded graph against the prescribed loop and
link families, and export graphs.  The pipeline command chains the
stages over a seeded permutation scan; identical options and seed
reproduce byte-identical artifacts.
"""

from __future__ import annotations

import json
import os
import sys
from contextlib import contextmanager

import click

from .algebra import LinearSpan, cosets, kernel_dim, kernel_words, rank_of
from .fano import fano_families, partition_registry
from .fold import quotient_graph
from .ioutil import atomic_write, load_code, pmap, save_code, write_json
from .partitions import (Atlas, build_atlas, canonical_form,
                         enumerate_partitions7, orbit_classify7)
from .perfect import enumerate_perfect7
from .scan import PRIORITY_PAIRS, find_representatives, make_code, scan_pair
from .sts import class_type_tuple, render_tuple
from .structure import full_report
from .words import parse_sigma, quad_name, sigma_str, word_hex

KAPPA_TARGETS = (5, 6, 7, 8, 9)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Doubled length-16 codes and their folded quadruple-system graphs."""


def _fail(msg: str) -> "click.ClickException":
    return click.ClickException(msg)


def _load_code_checked(path: str):
    try:
        return load_code(path)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise _fail("cannot read code %s: %s" % (path, e))


def _load_atlas(path: str | None) -> Atlas:
    if path is None:
        click.echo("no --atlas given; classifying partitions from scratch",
                   err=True)
        return build_atlas()
    try:
        return Atlas.load(path)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise _fail("cannot read atlas %s: %s" % (path, e))


def _check_class(atlas: Atlas, cid: int, what: str) -> None:
    if not 0 <= cid < len(atlas.classes):
        raise _fail("%s class %d out of range 0..%d"
                    % (what, cid, len(atlas.classes) - 1))


def _census_lines(atlas: Atlas) -> list[str]:
    lines = [
        "length-7 partitions: %d in %d classes"
        % (atlas.partition7_count, len(atlas.orbit_sizes7)),
        "orbit sizes: %s" % " ".join(str(s) for s in atlas.orbit_sizes7),
        "extended classes: %d (linear class %d)"
        % (len(atlas.classes), atlas.linear_class),
    ]
    for m in atlas.merged:
        lines.append("merged under extension: %s"
                     % "+".join(str(x) for x in m))
    return lines


# ---------------------------------------------------------------- censuses


@main.group("perfect-codes")
def perfect_codes() -> None:
    """Perfect binary codes of length 7."""


@perfect_codes.command("enumerate")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="write all codes as a JSON array")
def perfect_enumerate(out: str | None) -> None:
    """Count the perfect codes of length 7 and optionally dump them."""
    codes = enumerate_perfect7()
    through_zero = sum(1 for c in codes if c[0] == 0)
    click.echo("perfect codes of length 7: %d (%d through zero)"
               % (len(codes), through_zero))
    if out:
        payload = [{"length": 7,
                    "codewords": [word_hex(w, 7) for w in c]}
                   for c in codes]
        write_json(out, payload)
        click.echo("wrote %s" % out)


@main.group()
def partitions() -> None:
    """Partitions of the length-7 space and their parity extensions."""


@partitions.command("enumerate")
@click.option("--length", "length_", type=click.Choice(["7", "8"]),
              default="8", show_default=True,
              help="7 for the raw classes, 8 for the extended atlas")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def partitions_enumerate(length_: str, out: str) -> None:
    """Enumerate and classify the partitions, writing an atlas JSON."""
    if length_ == "8":
        atlas = build_atlas()
        atlas.save(out)
        for line in _census_lines(atlas):
            click.echo(line)
    else:
        parts = enumerate_partitions7()
        _, reps, sizes = orbit_classify7(parts)
        forms = [canonical_form(parts[r]) for r in reps]
        order = sorted(range(len(reps)), key=lambda i: forms[i])
        classes = []
        for new, old in enumerate(order):
            comps = parts[reps[old]]
            classes.append({
                "id": new,
                "alias": None,
                "representative": [
                    {"length": 7,
                     "codewords": [word_hex(w, 7) for w in comp]}
                    for comp in comps
                ],
            })
        write_json(out, {"classes": classes,
                         "partition7Count": len(parts),
                         "orbitSizes7": [sizes[old] for old in order]})
        click.echo("length-7 partitions: %d in %d classes"
                   % (len(parts), len(classes)))
        click.echo("orbit sizes: %s"
                   % " ".join(str(sizes[old]) for old in order))
    click.echo("wrote %s" % out)


@partitions.command("classify")
@click.argument("atlas_path", type=click.Path(exists=True, dir_okay=False))
def partitions_classify(atlas_path: str) -> None:
    """Print the census recorded in an atlas JSON."""
    try:
        with open(atlas_path) as fh:
            d = json.load(fh)
    except json.JSONDecodeError as e:
        raise _fail("cannot parse %s: %s" % (atlas_path, e))
    try:
        reps = d["classes"][0]["representative"]
        if reps[0]["length"] == 8:
            for line in _census_lines(Atlas.from_json(d)):
                click.echo(line)
        else:
            click.echo("length-7 partitions: %d in %d classes"
                       % (d["partition7Count"], len(d["classes"])))
            click.echo("orbit sizes: %s"
                       % " ".join(str(s) for s in d["orbitSizes7"]))
    except (KeyError, IndexError, TypeError) as e:
        raise _fail("%s is not an atlas file: %s" % (atlas_path, e))


# ---------------------------------------------------------------- doubling


@main.command()
@click.option("--source", type=int, required=True,
              help="extended class id for the low byte")
@click.option("--target", type=int, required=True,
              help="extended class id for the high byte")
@click.option("--sigma", default=None,
              help="component matching, eight digits over 0..7")
@click.option("--scan-sigma", is_flag=True,
              help="print one invariant row per permutation instead")
@click.option("--sample", type=int, default=None,
              help="scan a seeded sample instead of all 40320 permutations")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--atlas", "atlas_path",
              type=click.Path(exists=True, dir_okay=False), default=None,
              help="atlas JSON; classified from scratch when omitted")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def double(source: int, target: int, sigma: str | None, scan_sigma: bool,
           sample: int | None, seed: int, atlas_path: str | None,
           out: str | None) -> None:
    """Build a length-16 code from two extended partition classes."""
    atlas = _load_atlas(atlas_path)
    _check_class(atlas, source, "source")
    _check_class(atlas, target, "target")
    if scan_sigma:
        rows = scan_pair(atlas, source, target, sample=sample, seed=seed)
        for r in rows:
            click.echo("sigma=%s rank=%d kernelDim=%d"
                       % (sigma_str(r.sigma), r.rank, r.kernel))
        if out:
            write_json(out, [r.to_json() for r in rows])
            click.echo("wrote %s" % out)
        return
    if sigma is None:
        raise click.UsageError("either --sigma or --scan-sigma is required")
    if out is None:
        raise click.UsageError("--out is required when building one code")
    try:
        sig = parse_sigma(sigma)
    except ValueError as e:
        raise _fail(str(e))
    code = make_code(atlas, source, target, sig)
    save_code(out, code)
    click.echo("code %s: rank=%d kernelDim=%d"
               % (code.label, rank_of(code),
                  kernel_dim(kernel_words(code))))
    click.echo("wrote %s" % out)


@main.command()
@click.argument("code_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="analysis JSON path (default: next to the code)")
def analyze(code_path: str, out: str | None) -> None:
    """Rank, kernel dimension and kernel coset count of a code."""
    code = _load_code_checked(code_path)
    kappa = kernel_dim(kernel_words(code))
    d = {"rank": rank_of(code), "kernelDim": kappa,
         "cosetCount": len(code.words) >> kappa}
    click.echo(json.dumps(d))
    payload = dict(d)
    if code.left is not None:
        payload["sourceClass"] = code.left
    if code.right is not None:
        payload["targetClass"] = code.right
    if code.sigma is not None:
        payload["sigma"] = sigma_str(code.sigma)
    if out is None:
        out = os.path.splitext(code_path)[0] + ".analysis.json"
    write_json(out, payload)
    click.echo("wrote %s" % out)


# ------------------------------------------------------- typing and checks


def _type_rows(code) -> list[tuple[int, int, tuple]]:
    """(vertex, representative, type tuple) per kernel coset.

    Untabulated Pasch signatures yield None entries, rendered "?";
    they do occur for some doubled codes with small kernels.
    """
    span = LinearSpan.from_words(kernel_words(code))
    dec = cosets(code, span)
    tups = pmap(lambda r: class_type_tuple(code, int(r), span.basis,
                                           strict=False),
                dec.reps)
    return [(i, int(r), tup) for i, (r, tup) in enumerate(zip(dec.reps, tups))]


def _unknown_count(rows) -> int:
    return sum(1 for _, _, tup in rows for t in tup if t is None)


@main.command("sts-types")
@click.argument("code_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False),
              default=None, help="write one row per kernel coset")
def sts_types(code_path: str, csv_path: str | None) -> None:
    """Triple-system types of the punctured code, one tuple per coset."""
    code = _load_code_checked(code_path)
    rows = _type_rows(code)
    for i, rep, tup in rows:
        click.echo("vertex %d %s %s" % (i, word_hex(rep, 16),
                                        render_tuple(tup)))
    keys = {"".join(sorted(render_tuple(tup))) for _, _, tup in rows}
    sqs_h = len(keys) == 1
    sts_h = sqs_h and len(set(next(iter(keys)))) == 1
    click.echo("homogeneous: %s%s"
               % (sqs_h, " (constant)" if sts_h else ""))
    unknown = _unknown_count(rows)
    if unknown:
        click.echo("warning: %d punctured systems match no signature "
                   "in the type table (rendered ?)" % unknown)
    if csv_path:
        lines = ["vertex,representative,types"]
        lines += ["%d,%s,%s" % (i, word_hex(rep, 16), render_tuple(tup))
                  for i, rep, tup in rows]
        atomic_write(csv_path, "\n".join(lines) + "\n")
        click.echo("wrote %s" % csv_path)


def _short(x, limit: int = 64) -> str:
    s = str(x)
    return s if len(s) <= limit else s[: limit - 3] + "..."


@main.command("verify-theorem5")
@click.argument("code_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--report", "report_path", type=click.Path(dir_okay=False),
              default=None, help="write the full verdict list as JSON")
def verify_theorem5(code_path: str, report_path: str | None) -> None:
    """Check the folded graph against the prescribed loop and link families."""
    code = _load_code_checked(code_path)
    try:
        rep = full_report(code)
    except ValueError as e:
        raise _fail(str(e))
    click.echo(rep.summary())
    for v in rep.failures():
        msg = v.detail or ("expected %s, observed %s"
                           % (_short(v.expected), _short(v.observed)))
        click.echo("  fail %s: %s" % (v.subject, msg))
    if report_path:
        write_json(report_path, rep.to_json())
        click.echo("wrote %s" % report_path)
    sys.exit(0 if rep.passed else 1)


@main.group()
def fano() -> None:
    """Named quadruple families on the byte halves."""


@fano.command("dump")
def fano_dump() -> None:
    """Print every named family and the pair-partition registry in hex."""
    for name, quads in fano_families().items():
        click.echo("%-5s %2d  %s"
                   % (name, len(quads),
                      " ".join(quad_name(q) for q in quads)))
    reg = partition_registry()
    click.echo("registry: %d tags" % len(reg))
    for alias, p in reg.items():
        click.echo("%-4s %-5s %s"
                   % (alias, p.name,
                      " ".join("%x%x" % ab for ab in p.pairs)))


@main.command()
@click.argument("code_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["dot", "csv", "json"]),
              required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--sts/--no-sts", "with_sts", default=True, show_default=True,
              help="label vertices with triple-system type tuples")
def export(code_path: str, fmt: str, out: str, with_sts: bool) -> None:
    """Fold a code over its kernel and write the graph."""
    code = _load_code_checked(code_path)
    g = quotient_graph(code)
    if with_sts and fmt in ("dot", "json"):
        g.vertex_sts = [render_tuple(tup) for _, _, tup in _type_rows(code)]
    if fmt == "dot":
        atomic_write(out, g.to_dot() + "\n")
    elif fmt == "csv":
        atomic_write(out, g.to_csv())
    else:
        write_json(out, g.to_json())
    click.echo("wrote %s" % out)


# ---------------------------------------------------------------- pipeline


def _parse_pair(s: str) -> tuple[int, int]:
    try:
        a, b = s.split(",")
        return int(a), int(b)
    except ValueError:
        raise click.BadParameter("expected LEFT,RIGHT class ids, got %r" % s)


@contextmanager
def _stage(tag: str):
    try:
        yield
    except click.ClickException:
        raise
    except Exception as e:
        raise _fail("[%s] %s" % (tag, e))


@main.command()
@click.option("--out-dir", type=click.Path(file_okay=False), default="run",
              show_default=True)
@click.option("--atlas", "atlas_path",
              type=click.Path(exists=True, dir_okay=False), default=None,
              help="reuse a classified atlas instead of rebuilding")
@click.option("--pair", "pairs", multiple=True, metavar="L,R",
              help="class pair to scan (repeatable; default a fixed list)")
@click.option("--sample", type=int, default=400, show_default=True,
              help="permutations sampled per pair")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--budget", type=float, default=1800.0, show_default=True,
              help="scan time budget in seconds")
def pipeline(out_dir: str, atlas_path: str | None, pairs: tuple,
             sample: int, seed: int, budget: float) -> None:
    """Run every stage and leave one artifact set per kernel dimension.

    Classifies the partitions, scans seeded permutation samples over the
    configured class pairs until one code per kernel dimension 5..9 is
    found, then analyzes, types and verifies each find.  Check verdicts
    are recorded, not fatal; only stage errors abort.
    """
    os.makedirs(out_dir, exist_ok=True)
    path = lambda name: os.path.join(out_dir, name)

    with _stage("partitions"):
        atlas = Atlas.load(atlas_path) if atlas_path else build_atlas()
        atlas.save(path("atlas.json"))
    for line in _census_lines(atlas):
        click.echo("[partitions] %s" % line)

    pair_list = tuple(_parse_pair(s) for s in pairs) or PRIORITY_PAIRS
    for left, right in pair_list:
        _check_class(atlas, left, "source")
        _check_class(atlas, right, "target")

    summary: dict = {"seed": seed, "sample": sample,
                     "pairs": [list(p) for p in pair_list], "found": {}}

    with _stage("scan"):
        lin = atlas.linear_class
        base = make_code(atlas, lin, lin, tuple(range(8)))
        save_code(path("code_linear.json"), base)
        kap0 = kernel_dim(kernel_words(base))
        found = find_representatives(atlas, targets=KAPPA_TARGETS,
                                     pairs=pair_list, per_pair=sample,
                                     seed=seed, time_budget=budget)
    click.echo("[scan] linear baseline kappa=%d, structure check skipped"
               % kap0)
    summary["linear"] = {"sourceClass": lin, "targetClass": lin,
                         "sigma": "01234567", "kernelDim": kap0}
    missing = sorted(set(KAPPA_TARGETS) - found.keys())
    if missing:
        click.echo("[scan] no code found for kappa in %s within the budget"
                   % missing)

    for kap in sorted(found):
        left, right, sig, code = found[kap]
        tag = "k%d" % kap
        click.echo("[scan] kappa=%d from classes (%d,%d) sigma=%s"
                   % (kap, left, right, sigma_str(sig)))
        with _stage("scan"):
            save_code(path("code_%s.json" % tag), code)

        with _stage("analyze"):
            analysis = {"rank": rank_of(code), "kernelDim": kap,
                        "cosetCount": len(code.words) >> kap,
                        "sourceClass": left, "targetClass": right,
                        "sigma": sigma_str(sig)}
            write_json(path("analysis_%s.json" % tag), analysis)
        click.echo("[analyze] kappa=%d rank=%d cosets=%d"
                   % (kap, analysis["rank"], analysis["cosetCount"]))

        with _stage("sts-types"):
            rows = _type_rows(code)
            lines = ["vertex,representative,types"]
            lines += ["%d,%s,%s" % (i, word_hex(rep, 16), render_tuple(tup))
                      for i, rep, tup in rows]
            atomic_write(path("sts_%s.csv" % tag), "\n".join(lines) + "\n")
        distinct = len({"".join(sorted(render_tuple(t)))
                        for _, _, t in rows})
        unknown = _unknown_count(rows)
        click.echo("[sts-types] kappa=%d: %d vertices, %d distinct tuples%s"
                   % (kap, len(rows), distinct,
                      ", %d coordinates untabulated" % unknown
                      if unknown else ""))

        with _stage("verify"):
            rep = full_report(code)
            write_json(path("report_%s.json" % tag), rep.to_json())
        click.echo("[verify] %s" % rep.summary())
        summary["found"][str(kap)] = {
            "sourceClass": left, "targetClass": right,
            "sigma": sigma_str(sig), "overall": rep.overall,
            "passed": rep.passed, "untabulatedTypes": unknown}

    with _stage("summary"):
        write_json(path("summary.json"), summary)
    click.echo("[summary] wrote %s" % path("summary.json"))


if __name__ == "__main__":
    main()
