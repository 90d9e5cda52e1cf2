"""Command-line surface: build artifacts, count weight slices, run
verification suites.

Exit codes: 0 success, 1 verification failure (or --check mismatch),
2 invalid input, 3 internal invariant violation.
"""

import csv
import functools
import hashlib
import io
import itertools
import json
import multiprocessing
import os
import random
import shutil
import sys

import click

from . import arpresent, cone, count, lieoracle, mutation, rootdata

FORMAT_VERSION = 1

SUITES = ("structural", "kostant", "weights", "mutation", "fpoly", "oracle",
          "all")


def _parse_type(type_, rank):
    """Accept --type D4 or --type D --rank 4."""
    letter = type_[0].upper()
    rest = type_[1:]
    if rest:
        if rank is not None and rank != int(rest):
            raise ValueError("--rank contradicts --type %s" % type_)
        rank = int(rest)
    if rank is None:
        raise ValueError("no rank given (use --type D4 or --rank)")
    return letter, rank


def _parse_orient(orient):
    """Parse an orientation like '2>1,3>2,4>2' into arrow pairs."""
    if not orient:
        return None
    arrows = []
    for part in orient.split(","):
        i, j = part.split(">")
        arrows.append((int(i), int(j)))
    return arrows


def _parse_weight(text):
    return tuple(int(x) for x in text.split(","))


def _build_full2(letter, rank, orient):
    Q = rootdata.build_dynkin(letter, rank, _parse_orient(orient))
    ar = arpresent.knit_rep_ar(Q)
    cat = arpresent.enumerate_presentations(ar)
    return arpresent.build_ice_quiver(cat)


def _cone_and_sigma(iq, variant):
    spec = cone.assemble_cone(iq, variant)
    amb = iq if variant == "full2" else \
        arpresent.build_ice_quiver(iq.cat, variant)
    return spec, arpresent.weight_configuration(amb)


def _guard(fn):
    """Map exception classes onto the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ValueError, KeyError, OSError) as exc:
            click.echo("error: %s" % exc, err=True)
            sys.exit(2)
        except (AssertionError, RuntimeError) as exc:
            click.echo("internal error: %s" % exc, err=True)
            sys.exit(3)

    return wrapper


@click.group()
def main():
    """Ice quivers from Dynkin types, their cones, and exact counting."""


# ---------------------------------------------------------------------------
# build
# ---------------------------------------------------------------------------

_BUILD_FILES = ("summary.json", "quiver.json", "quiver.dot", "icequiver.json",
                "icequiver.dot", "hmatrix.json", "hmatrix.csv", "sigma.json")


def _write_build_artifacts(letter, rank, orient, variant, outdir):
    iq = _build_full2(letter, rank, orient)
    Q = iq.cat.ar.Q
    files = {
        "quiver.json": json.dumps({"format": FORMAT_VERSION,
                                   **Q.to_json_dict()}, indent=1),
        "quiver.dot": Q.to_dot(),
        "icequiver.json": json.dumps({"format": FORMAT_VERSION,
                                      **iq.to_json_dict()}, indent=1),
        "icequiver.dot": iq.to_dot(),
    }
    summary = {"format": FORMAT_VERSION, "type": letter, "rank": rank,
               "orientation": [list(a) for a in Q.arrows],
               "variant": variant, "vertices": len(iq.vertices)}
    if Q.trivially_valued:
        spec, sig = _cone_and_sigma(iq, variant)
        files["hmatrix.json"] = json.dumps({"format": FORMAT_VERSION,
                                            **spec.to_json_dict()}, indent=1)
        files["hmatrix.csv"] = spec.to_csv()
        files["sigma.json"] = json.dumps(
            {"format": FORMAT_VERSION,
             "rows": {v.label: list(r)
                      for v, r in zip(spec.vertices, sig.sigma)}}, indent=1)
        summary["cone"] = {"supported": True, "columns": len(spec.columns)}
    else:
        summary["cone"] = {"supported": False,
                           "reason": "valued type: quiver and catalog only"}
    files["summary.json"] = json.dumps(summary, indent=1)
    os.makedirs(outdir, exist_ok=True)
    for name, text in files.items():
        with open(os.path.join(outdir, name), "w") as fh:
            fh.write(text)
    return summary


def _cache_key(letter, rank, orient, variant):
    h = hashlib.sha256(repr((orient or "", variant)).encode()).hexdigest()[:12]
    return "%s%d-%s" % (letter, rank, h)


@main.command()
@click.option("--type", "type_", required=True, help="Dynkin type, e.g. D4.")
@click.option("--rank", type=int, default=None)
@click.option("--orient", default=None,
              help="Arrow list like '2>1,3>2,4>2'; default orientation "
                   "if omitted.")
@click.option("--variant", default="full2",
              type=click.Choice(sorted(arpresent.VARIANTS)))
@click.option("--cache-dir", type=click.Path(), default=None)
@click.option("--out", type=click.Path(), default=".")
@_guard
def build(type_, rank, orient, variant, cache_dir, out):
    """Write quiver, ice quiver, H matrix and weight configuration files."""
    letter, rank = _parse_type(type_, rank)
    if cache_dir:
        slot = os.path.join(cache_dir, _cache_key(letter, rank, orient,
                                                  variant))
        if not os.path.exists(os.path.join(slot, "summary.json")):
            _write_build_artifacts(letter, rank, orient, variant, slot)
        os.makedirs(out, exist_ok=True)
        for name in os.listdir(slot):
            shutil.copyfile(os.path.join(slot, name),
                            os.path.join(out, name))
        with open(os.path.join(out, "summary.json")) as fh:
            summary = json.load(fh)
    else:
        summary = _write_build_artifacts(letter, rank, orient, variant, out)
    click.echo(json.dumps(summary, indent=1))


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

_WORKER_FAMILY = None


def _worker_count(target):
    try:
        return _WORKER_FAMILY.count(target)
    except count.UnboundedSliceError:
        return "unbounded"


def _count_many(fam, targets, jobs):
    if jobs <= 1 or len(targets) <= 1:
        return [_count_one(fam, t) for t in targets]
    global _WORKER_FAMILY
    _WORKER_FAMILY = fam
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        return pool.map(_worker_count, targets)


def _count_one(fam, target):
    try:
        return fam.count(target)
    except count.UnboundedSliceError:
        return "unbounded"


def _grid_targets(cd, variant, sig, bound, rng):
    """Targets (as tuples of weights) for a --grid run."""
    n = len(cd.cartan)
    doms = list(itertools.product(range(bound + 1), repeat=n))
    rows = []
    if variant == "full2":
        for mu in doms:
            for nu in doms:
                for lam in lieoracle.tensor_decomposition(cd, mu, nu):
                    rows.append((mu, nu, lam))
                rows.append((mu, nu,
                             tuple(rng.randrange(2 * bound + 2)
                                   for _ in range(n))))
    elif variant == "sharp":
        for mu in doms:
            for lam in sorted(lieoracle.freudenthal(cd, mu)):
                rows.append((mu, lam))
    else:  # u
        seen = set()
        for h in itertools.product(range(bound + 1),
                                   repeat=len(sig.sigma)):
            gamma = tuple(sum(hk * row[j] for hk, row in zip(h, sig.sigma))
                          for j in range(n))
            if gamma not in seen:
                seen.add(gamma)
                rows.append((gamma,))
    return rows


def _oracle_value(cd, variant, weights):
    if variant == "full2":
        mu, nu, lam = weights
        return lieoracle.tensor_multiplicity(cd, mu, nu, lam)
    if variant == "sharp":
        mu, lam = weights
        return lieoracle.freudenthal(cd, mu).get(lam, 0)
    return count.kostant_partition(cd, weights[0])


@main.command("count")
@click.option("--type", "type_", required=True)
@click.option("--rank", type=int, default=None)
@click.option("--orient", default=None)
@click.option("--variant", default="full2",
              type=click.Choice(["full2", "sharp", "u"]))
@click.option("--triple", nargs=3, multiple=True,
              help="mu nu lambda, each comma-separated (full2 only).")
@click.option("--target", "targets_opt", multiple=True,
              help="Weights joined by '/', e.g. '1,1/0,0' (sharp/u).")
@click.option("--grid", type=int, default=None,
              help="Sweep dominant weights with entries up to the bound.")
@click.option("--check", is_flag=True, default=False,
              help="Add oracle and match columns; exit 1 on any mismatch.")
@click.option("--jobs", type=int, default=1)
@click.option("--cache-dir", type=click.Path(), default=None)
@click.option("--out", type=click.Path(), default=None,
              help="Write the CSV here instead of stdout.")
@_guard
def cmd_count(type_, rank, orient, variant, triple, targets_opt, grid, check,
              jobs, cache_dir, out):
    """Count lattice points of weight slices; CSV output."""
    letter, rank = _parse_type(type_, rank)
    iq = _build_full2(letter, rank, orient)
    if not iq.cat.ar.Q.trivially_valued:
        raise ValueError("counting is unsupported for valued type %s%d"
                         % (letter, rank))
    spec, sig = _cone_and_sigma(iq, variant)
    cd = rootdata.cartan_data(iq.cat.ar.Q)
    rows = []
    for t in triple:
        if variant != "full2":
            raise ValueError("--triple applies to the full2 variant")
        rows.append(tuple(_parse_weight(x) for x in t))
    for t in targets_opt:
        rows.append(tuple(_parse_weight(x) for x in t.split("/")))
    if grid is not None:
        rows.extend(_grid_targets(cd, variant, sig, grid, random.Random(0)))
    if not rows:
        raise ValueError("nothing to count: give --triple, --target "
                         "or --grid")
    nweights = {"full2": 3, "sharp": 2, "u": 1}[variant]
    for weights in rows:
        if len(weights) != nweights or \
                any(len(w) != rank for w in weights):
            raise ValueError("bad target %r for variant %s"
                             % (weights, variant))
    fam = count.slice_family(spec, sig)
    targets = [tuple(x for w in weights for x in w) for weights in rows]
    counts = _count_many(fam, targets, jobs)
    header = {"full2": ["mu", "nu", "lambda"], "sharp": ["mu", "lambda"],
              "u": ["gamma"]}[variant] + ["count"]
    if check:
        header += ["oracle", "match"]
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    mismatch = False
    for weights, c in zip(rows, counts):
        line = [" ".join(str(x) for x in w) for w in weights] + [c]
        if check:
            oracle = _oracle_value(cd, variant, weights)
            ok = c == oracle
            mismatch = mismatch or not ok
            line += [oracle, "yes" if ok else "NO"]
        writer.writerow(line)
    text = buf.getvalue()
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    if mismatch:
        sys.exit(1)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

_D4_COUNTS = ([3, 3, 3, 3], [7, 6, 1, 1], [1, 2, 7, 7])


def _suite_structural(letter, rank, orient, _bound):
    if (letter, rank) == ("D", 4) and orient is None:
        found = None
        edges = [(1, 2), (3, 2), (4, 2)]
        for bits in itertools.product((0, 1), repeat=3):
            arrows = [(j, i) if b else (i, j)
                      for (i, j), b in zip(edges, bits)]
            iq = arpresent.build_ice_quiver(
                arpresent.enumerate_presentations(arpresent.knit_rep_ar(
                    rootdata.build_dynkin("D", 4, arrows))))
            sets = cone.tv_strict_sets(iq)
            cat = iq.cat
            got = ([len(sets[cat.by_label["O%d-" % i]]) for i in range(1, 5)],
                   [len(sets[cat.by_label["O%d+" % i]]) for i in range(1, 5)],
                   [len(sets[cat.by_label["Id%d" % i]]) for i in range(1, 5)])
            if got == _D4_COUNTS:
                found = (arrows, iq, sets)
                break
        if found is None:
            return {"passed": False,
                    "detail": "no orientation matches the expected counts"}
        arrows, iq, sets = found
        spec = cone.assemble_cone(iq, strict_sets=sets)
        pruned = cone.prune_redundant(spec)
        ok = len(spec.columns) == 44 and len(pruned.columns) == 44
        return {"passed": ok, "orientation": [list(a) for a in arrows],
                "columns": len(spec.columns),
                "after_prune": len(pruned.columns)}
    iq = _build_full2(letter, rank, orient)
    sets = cone.tv_strict_sets(iq)
    spec = cone.assemble_cone(iq, strict_sets=sets)
    pruned = cone.prune_redundant(spec)
    return {"passed": len(pruned.columns) == len(spec.columns),
            "columns": len(spec.columns),
            "after_prune": len(pruned.columns)}


def _suite_kostant(letter, rank, orient, bound):
    iq = _build_full2(letter, rank, orient)
    spec, sig = _cone_and_sigma(iq, "u")
    cd = rootdata.cartan_data(iq.cat.ar.Q)
    fam = count.slice_family(spec, sig)
    seen = set()
    for h in itertools.product(range(bound + 1), repeat=len(sig.sigma)):
        gamma = tuple(sum(hk * row[j] for hk, row in zip(h, sig.sigma))
                      for j in range(rank))
        seen.add(gamma)
    bad = []
    for gamma in sorted(seen):
        if fam.count(gamma) != count.kostant_partition(cd, gamma):
            bad.append(list(gamma))
    return {"passed": not bad, "targets": len(seen), "mismatches": bad}


def _suite_weights(letter, rank, orient, bound):
    if rank > 2:
        bound = min(bound, 1)
    iq = _build_full2(letter, rank, orient)
    spec, sig = _cone_and_sigma(iq, "sharp")
    cd = rootdata.cartan_data(iq.cat.ar.Q)
    fam = count.slice_family(spec, sig)
    bad, total = [], 0
    for mu in itertools.product(range(bound + 1), repeat=rank):
        for lam, mult in lieoracle.freudenthal(cd, mu).items():
            total += 1
            if fam.count(list(mu) + list(lam)) != mult:
                bad.append([list(mu), list(lam)])
    return {"passed": not bad, "targets": total, "mismatches": bad}


def _suite_mutation(letter, rank, orient, _bound):
    iq = _build_full2(letter, rank, orient)
    report = mutation.verify_cyclic(iq)
    return {"passed": report["all"], **report}


def _suite_fpoly(letter, rank, orient, _bound):
    iq = _build_full2(letter, rank, orient)
    sets = cone.tv_strict_sets(iq, source="both")
    return {"passed": True,
            "counts": {v.label: len(s) for v, s in sorted(
                sets.items(), key=lambda kv: kv[0].label)}}


def _suite_oracle(letter, rank, orient, bound):
    if rank > 2:
        bound = min(bound, 1)
    iq = _build_full2(letter, rank, orient)
    cd = rootdata.cartan_data(iq.cat.ar.Q)
    doms = list(itertools.product(range(bound + 1), repeat=rank))
    bad, total = [], 0
    for mu in doms:
        for nu in doms:
            dec = lieoracle.tensor_decomposition(cd, mu, nu)
            total += 1
            dim = sum(m * lieoracle.weyl_dimension(cd, lam)
                      for lam, m in dec.items())
            if dim != lieoracle.weyl_dimension(cd, mu) * \
                    lieoracle.weyl_dimension(cd, nu):
                bad.append(["dim", list(mu), list(nu)])
            if letter == "A":
                for lam, m in dec.items():
                    if lieoracle.lr_from_weights(rank, mu, nu, lam) != m:
                        bad.append(["lr", list(mu), list(nu), list(lam)])
    return {"passed": not bad, "pairs": total, "mismatches": bad}


_SUITE_FUNCS = {
    "structural": _suite_structural,
    "kostant": _suite_kostant,
    "weights": _suite_weights,
    "mutation": _suite_mutation,
    "fpoly": _suite_fpoly,
    "oracle": _suite_oracle,
}


@main.command()
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--type", "type_", required=True)
@click.option("--rank", type=int, default=None)
@click.option("--orient", default=None)
@click.option("--max", "bound", type=int, default=2,
              help="Grid bound for the kostant/weights/oracle suites.")
@click.option("--cache-dir", type=click.Path(), default=None)
@click.option("--out", type=click.Path(), default=None,
              help="Write the JSON report here.")
@_guard
def verify(suite, type_, rank, orient, bound, cache_dir, out):
    """Run a verification suite; exit 0 iff every check passes."""
    letter, rank = _parse_type(type_, rank)
    names = list(_SUITE_FUNCS) if suite == "all" else [suite]
    report = {"format": FORMAT_VERSION, "type": "%s%d" % (letter, rank),
              "suites": {}}
    for name in names:
        result = _SUITE_FUNCS[name](letter, rank, orient, bound)
        report["suites"][name] = result
        click.echo("%-12s %s" % (name, "pass" if result["passed"]
                                 else "FAIL"))
    report["passed"] = all(r["passed"] for r in report["suites"].values())
    if out:
        with open(out, "w") as fh:
            fh.write(json.dumps(report, indent=1))
    if not report["passed"]:
        sys.exit(1)


if __name__ == "__main__":
    main()
