"""Command line front end: config ingestion, scans, and report emission.

Subcommands: run (execute the task list of a config), scan (simplicity
scan over the weight variety), kw (dimension-reduction verification),
levi (standard-Levi isomorphism scan), check (structure invariants).
Reports are deterministic given (config, seed): the structured output
carries no timings, so byte-identical configs give byte-identical files.
Exit codes: 0 all checks pass, 1 a hard check failed, 2 configuration or
budget error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import re
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import __version__
from .algebra import (Character, Weight, build_algebra, classify_character,
                      weight_in_variety, weight_variety)
from .analysis import (composition_series, frobenius_gram, is_simple,
                       regular_module, trivial_submodules)
from .enveloping import PBWElement, ReductionContext, multiply, normalize
from .errors import (BudgetExceeded, ConfigInvalid, GlmnError, TaskFailed)
from .ffield import make_field
from .kw import kw_verify, levi_scan
from .verma import (build_baby_verma, build_graded_verma,
                    build_simple_g0_module, f1_direct, f_direct, f_formula)

TASKS = ("structure-check", "verma-scan", "graded-verma-scan", "kw-verify",
         "levi-scan", "frobenius-check", "regular-module-check")

DEFAULTS = {
    "field_degree": 1,
    "chi": {},
    "lambda": "scan-all-X",
    "tasks": ["verma-scan"],
    "seed": 0,
    "jobs": 1,
    "dim_budget": 2000,
    "line_budget": 10 ** 4,
}

ENV_OVERRIDES = {
    "GLMN_JOBS": ("jobs", int),
    "GLMN_DIM_BUDGET": ("dim_budget", int),
    "GLMN_LINE_BUDGET": ("line_budget", int),
}

_CHI_KEY = re.compile(r"^E\((\d+),(\d+)\)$")


def task_seed(seed, label):
    """Deterministic per-task seed derived from the config seed."""
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def load_config(path):
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigInvalid(f"cannot read config: {exc}") from None
    return validate_config(raw)


def validate_config(raw):
    cfg = dict(DEFAULTS)
    cfg.update(raw)
    for key in ("p", "m", "n"):
        if key not in cfg or not isinstance(cfg[key], int):
            raise ConfigInvalid(f"config needs integer '{key}'")
    if cfg["p"] < 5:
        raise ConfigInvalid("p must be at least 5")
    if cfg["m"] < 1 or cfg["n"] < 1:
        raise ConfigInvalid("m and n must be positive")
    for t in cfg["tasks"]:
        if t not in TASKS:
            raise ConfigInvalid(f"unknown task {t!r}; known: {', '.join(TASKS)}")
    if not isinstance(cfg["chi"], dict):
        raise ConfigInvalid("chi must be an object keyed by 'E(i,j)'")
    lam = cfg["lambda"]
    if lam != "scan-all-X" and not isinstance(lam, list):
        raise ConfigInvalid("lambda must be 'scan-all-X' or a coordinate list")
    for env, (key, conv) in ENV_OVERRIDES.items():
        if env in os.environ:
            try:
                cfg[key] = conv(os.environ[env])
            except ValueError:
                raise ConfigInvalid(f"bad value for {env}") from None
    return cfg


def element_index(field, value):
    """A field element from an integer or a coefficient list."""
    if isinstance(value, int):
        return value % field.p
    if isinstance(value, list):
        if len(value) > field.k:
            raise ConfigInvalid(f"coefficient list {value} too long for k={field.k}")
        idx = 0
    else:
        raise ConfigInvalid(f"field element must be int or list, got {value!r}")
    for c, w in zip(value, field._ppow):
        idx += (c % field.p) * int(w)
    return idx


def parse_chi(algebra, spec):
    values = {}
    for key, value in spec.items():
        mt = _CHI_KEY.match(key)
        if not mt:
            raise ConfigInvalid(f"chi key {key!r} is not of the form 'E(i,j)'")
        i, j = int(mt.group(1)), int(mt.group(2))
        if not (1 <= i <= algebra.d and 1 <= j <= algebra.d):
            raise ConfigInvalid(f"chi key {key!r} out of range for d={algebra.d}")
        values[(i, j)] = element_index(algebra.field, value)
    try:
        return Character(algebra, values)
    except GlmnError as exc:
        raise ConfigInvalid(str(exc)) from None


def coeffs_of(field, idx):
    return [int(c) for c in field.digits[idx]]


def format_weight(field, lam):
    return [coeffs_of(field, int(c)) for c in lam.coords]


def build_setting(cfg):
    """(algebra, chi, weights) over the field the run executes in."""
    field = make_field(cfg["p"], cfg["field_degree"])
    algebra = build_algebra(cfg["m"], cfg["n"], field)
    chi = parse_chi(algebra, cfg["chi"])
    lam = cfg["lambda"]
    if lam == "scan-all-X":
        algebra, chi, weights = weight_variety(algebra, chi)
        return algebra, chi, weights
    coords = [element_index(field, c) for c in lam]
    if len(coords) != algebra.d:
        raise ConfigInvalid(f"lambda needs {algebra.d} coordinates")
    weight = Weight(field, coords)
    if not weight_in_variety(algebra, chi, weight):
        raise ConfigInvalid("lambda does not lie in the weight variety of chi")
    return algebra, chi, [weight]


def predicted_verma_dim(algebra):
    rs = algebra.root_system()
    p = algebra.field.p
    dim = 1
    for r in rs.positive:
        dim *= 2 if r.parity else p
    return dim


def check_dim_budget(algebra, cfg):
    dim = predicted_verma_dim(algebra)
    if dim > cfg["dim_budget"]:
        raise BudgetExceeded(
            f"predicted module dimension {dim} exceeds dim_budget "
            f"{cfg['dim_budget']}")


# ---------------------------------------------------------------------------
# scan workers (top level so a process pool can pickle them)

_WORKER = {}


def _init_scan_worker(p, k, m, n, chi_values, line_budget, seed, graded):
    field = make_field(p, k)
    algebra = build_algebra(m, n, field)
    _WORKER["algebra"] = algebra
    _WORKER["chi"] = Character(algebra, chi_values)
    _WORKER["line_budget"] = line_budget
    _WORKER["seed"] = seed
    _WORKER["graded"] = graded


def _scan_one(coords):
    algebra = _WORKER["algebra"]
    chi = _WORKER["chi"]
    field = algebra.field
    rs = algebra.root_system()
    lam = Weight(field, coords)
    sp = f_formula(rs, lam)
    oracle_ok = classify_character(rs, chi).semisimple
    row = {
        "lambda": format_weight(field, lam),
        "f_formula": coeffs_of(field, sp.f_formula.idx),
        "f0": coeffs_of(field, sp.f0.idx),
        "f1": coeffs_of(field, sp.f1.idx),
    }
    if _WORKER["graded"]:
        M = build_simple_g0_module(algebra, chi, lam)
        Z = build_graded_verma(algebra, chi, M)
        f1d = f1_direct(Z)
        row["dim_m"] = M.dim
        row["dim_z"] = Z.dim
        row["f1_direct"] = coeffs_of(field, f1d.idx)
        Zb = build_baby_verma(algebra, chi, lam)
        row["f_direct"] = coeffs_of(field, f_direct(Zb).idx)
        row["_f1_idx"] = f1d.idx
        row["_f0_idx"] = sp.f0.idx
        row["_fd_idx"] = f_direct(Zb).idx
    else:
        Z = build_baby_verma(algebra, chi, lam)
        fd = f_direct(Z)
        row["f_direct"] = coeffs_of(field, fd.idx)
        row["dim_z"] = Z.dim
        row["_f1_idx"] = None
        row["_f0_idx"] = sp.f0.idx
        row["_fd_idx"] = fd.idx
    row["_ff_idx"] = sp.f_formula.idx
    if oracle_ok:
        verdict = is_simple(Z, _WORKER["line_budget"], _WORKER["seed"])
        row["oracle_simple"] = bool(verdict.simple)
        row["probabilistic"] = bool(verdict.probabilistic)
    else:
        row["oracle_simple"] = None
        row["probabilistic"] = False
    return row


def _run_scan(cfg, algebra, chi, weights, graded):
    initargs = (algebra.field.p, algebra.field.k, algebra.m, algebra.n,
                dict(chi.values), cfg["line_budget"],
                task_seed(cfg["seed"], "oracle"), graded)
    coords = [tuple(int(c) for c in lam.coords) for lam in weights]
    if cfg["jobs"] > 1 and len(coords) > 1:
        with ProcessPoolExecutor(max_workers=cfg["jobs"],
                                 initializer=_init_scan_worker,
                                 initargs=initargs) as pool:
            rows = list(pool.map(_scan_one, coords, chunksize=8))
    else:
        _init_scan_worker(*initargs)
        rows = [_scan_one(c) for c in coords]
    return rows


def _fit_constant(field, pairs):
    """Fit lhs = c * rhs across all pairs.

    Returns (consistent, c).  c is None when every pair is (0, 0), in
    which case the data does not pin down a constant but nothing is
    contradicted either.
    """
    c = None
    for lhs, rhs in pairs:
        if rhs == 0:
            if lhs != 0:
                return False, None
            continue
        this = field.mul(lhs, field.inv(rhs))
        if c is None:
            c = this
        elif c != this:
            return False, None
    return True, c


def verma_scan_task(cfg, algebra, chi, weights, graded=False):
    check_dim_budget(algebra, cfg)
    field = algebra.field
    semisimple = classify_character(algebra.root_system(), chi).semisimple
    rows = _run_scan(cfg, algebra, chi, weights, graded)
    record = {"rows": [], "count": len(rows)}
    c_ok, c = _fit_constant(field, [(r["_fd_idx"], r["_ff_idx"]) for r in rows])
    record["c"] = coeffs_of(field, c) if c is not None else None
    if graded:
        cp_ok, cp = _fit_constant(field, [(field.mul(r["_f1_idx"], r["_f0_idx"]),
                                           r["_fd_idx"]) for r in rows])
        record["c_prime"] = coeffs_of(field, cp) if cp is not None else None
    # the closed formula and its constant are claims for semisimple chi
    passed = c_ok if semisimple else True
    simple_count = 0
    for r in rows:
        direct = r["_f1_idx"] if graded else r["_fd_idx"]
        agree = True
        if r["oracle_simple"] is not None:
            agree = (direct != 0) == r["oracle_simple"]
            if r["oracle_simple"]:
                simple_count += 1
        r["agreement"] = agree
        passed = passed and agree
        for k in list(r):
            if k.startswith("_"):
                del r[k]
        record["rows"].append(r)
    record["simple_count"] = simple_count
    if graded and semisimple:
        passed = passed and cp_ok
    return record, passed


# ---------------------------------------------------------------------------
# other tasks

def structure_task(cfg, algebra, chi, weights):
    """Super anticommutativity, Jacobi, restrictedness, supertrace checks."""
    from .algebra import supertrace
    alg = algebra
    f = alg.field
    rng = random.Random(task_seed(cfg["seed"], "structure"))
    checked = {"anticommutativity": 0, "jacobi": 0, "ad_p_power": 0,
               "supertrace": 0}
    ok = True

    def bval(x, y):
        out = {}
        for c, u in alg.bracket_table[(x, y)]:
            out[u] = c
        return out

    for x in alg.units:
        px = alg.parity(*x)
        for y in alg.units:
            sign = -1 if px and alg.parity(*y) else 1
            lhs = bval(x, y)
            rhs = {u: (f.neg(c) if sign == 1 else c)
                   for u, c in bval(y, x).items()}
            ok = ok and lhs == {u: c for u, c in rhs.items() if c}
            checked["anticommutativity"] += 1
    units = alg.units
    for x in units:
        for y in units:
            for z in units:
                # (-1)^{p(x)p(z)} [x,[y,z]] + cyclic = 0
                acc = {}
                for (a, b, c3) in ((x, y, z), (y, z, x), (z, x, y)):
                    sgn = -1 if alg.parity(*a) and alg.parity(*c3) else 1
                    for c1, u1 in alg.bracket_table[(b, c3)]:
                        for c2, u2 in alg.bracket_table[(a, u1)]:
                            v = f.mul(c1, c2)
                            if sgn == -1:
                                v = f.neg(v)
                            acc[u2] = f.add(acc.get(u2, 0), v)
                ok = ok and not any(acc.values())
                checked["jacobi"] += 1
    from .algebra import p_power
    from .linalg import Matrix
    even_samples = [alg.unit_matrix(*u) for u in alg.even_units]
    for _ in range(50):
        m_ = np.zeros((alg.d, alg.d), dtype=np.int64)
        for (i, j) in alg.even_units:
            m_[i - 1, j - 1] = rng.randrange(f.q)
        even_samples.append(Matrix(f, m_))
    for xmat in even_samples:
        adx = alg.ad_matrix(xmat)
        adp = alg.ad_matrix(p_power(alg, xmat))
        ok = ok and adx.power(f.p) == adp
        checked["ad_p_power"] += 1
    def rand_homogeneous():
        while True:
            a = Matrix(f, np.array([[rng.randrange(f.q) for _ in range(alg.d)]
                                    for _ in range(alg.d)], dtype=np.int64))
            par = rng.randrange(2)
            for (i, j) in alg.units:
                if alg.parity(i, j) != par:
                    a.data[i - 1, j - 1] = 0
            if not a.is_zero():
                return a

    for _ in range(100):
        a = rand_homogeneous()
        b = rand_homogeneous()
        ok = ok and supertrace(alg, alg.bracket(a, b)).idx == 0
        checked["supertrace"] += 1
    return {"checked": checked, "all_pass": ok}, ok


def _nminus_units(algebra):
    rs = algebra.root_system()
    return [rs.f_unit(r) for r in rs.positive]


def frobenius_task(cfg, algebra, chi, weights):
    sub = _nminus_units(algebra)
    gram, nondegenerate = frobenius_gram(algebra, sub, chi,
                                         dim_budget=cfg["dim_budget"])
    return {"sub": sub, "gram_dim": gram.rows,
            "nondegenerate": bool(nondegenerate)}, bool(nondegenerate)


def regular_task(cfg, algebra, chi, weights):
    sub = _nminus_units(algebra)
    left = regular_module(algebra, sub, chi, side="left")
    right = regular_module(algebra, sub, chi, side="right")
    tl = trivial_submodules(left)
    tr = trivial_submodules(right)
    same_line = tl.dim == 1 == tr.dim and bool((tl.basis == tr.basis).all())
    series = composition_series(left, cfg["line_budget"],
                                task_seed(cfg["seed"], "regular"))
    factor_dims = [d for d, _ in series.factors]
    uniform = len({fp for _, fp in series.factors}) <= 1
    passed = same_line and sum(factor_dims) == left.dim and uniform
    return {"sub": sub, "dim": left.dim,
            "trivial_dim_left": tl.dim, "trivial_dim_right": tr.dim,
            "v_left_equals_v_right": same_line,
            "factor_dims": factor_dims,
            "factors_uniform": uniform}, passed


def _sample_weights(cfg, weights, label, count=5):
    if len(weights) <= count:
        return list(weights)
    rng = random.Random(task_seed(cfg["seed"], label))
    idx = sorted(rng.sample(range(len(weights)), count))
    return [weights[t] for t in idx]


def kw_task(cfg, algebra, chi, weights):
    check_dim_budget(algebra, cfg)
    reports = []
    passed = True
    for lam in _sample_weights(cfg, weights, "kw"):
        rep = kw_verify(algebra, chi, lam, cfg["line_budget"],
                        task_seed(cfg["seed"], "kw-oracle"))
        rep["lambda"] = format_weight(algebra.field, lam)
        passed = passed and rep["induced_simple"] and rep["chi_l_nilpotent"]
        reports.append(rep)
    return {"reports": reports}, passed


def levi_task(cfg, algebra, chi, weights):
    check_dim_budget(algebra, cfg)
    reports = []
    passed = True
    for lam in _sample_weights(cfg, weights, "levi"):
        rep = levi_scan(algebra, chi, lam, cfg["line_budget"],
                        task_seed(cfg["seed"], "levi-oracle"))
        rep["lambda"] = format_weight(algebra.field, lam)
        ok = (rep["radical_absorbs_all"] and rep["outside_vectors_generate"]
              and all(a["isomorphism"] and a["heads_match"]
                      for a in rep["alphas"]))
        passed = passed and ok
        reports.append(rep)
    return {"reports": reports}, passed


TASK_RUNNERS = {
    "structure-check": structure_task,
    "verma-scan": lambda cfg, a, c, w: verma_scan_task(cfg, a, c, w, False),
    "graded-verma-scan": lambda cfg, a, c, w: verma_scan_task(cfg, a, c, w, True),
    "kw-verify": kw_task,
    "levi-scan": levi_task,
    "frobenius-check": frobenius_task,
    "regular-module-check": regular_task,
}


# ---------------------------------------------------------------------------
# report emission

def emit(report, fmt, stream):
    if fmt == "json":
        json.dump(report, stream, sort_keys=True, indent=2)
        stream.write("\n")
    elif fmt == "csv":
        _emit_csv(report, stream)
    elif fmt == "table":
        _emit_table(report, stream)
    else:
        raise ConfigInvalid(f"unknown format {fmt!r}")


def _scan_rows(report):
    for task in report["tasks"]:
        rec = task["record"]
        if "rows" in rec:
            return task["task"], rec["rows"]
    return None, []


def _emit_csv(report, stream):
    import csv
    name, rows = _scan_rows(report)
    writer = csv.writer(stream)
    if not rows:
        writer.writerow(["task", "passed"])
        for task in report["tasks"]:
            writer.writerow([task["task"], task["passed"]])
        return
    header = ["lambda", "f_direct", "f_formula", "f0", "f1",
              "oracle_simple", "agreement"]
    writer.writerow(header)
    for r in rows:
        writer.writerow([
            ";".join(str(c) for c in r["lambda"]),
            str(r.get("f_direct")), str(r["f_formula"]),
            str(r["f0"]), str(r["f1"]),
            r["oracle_simple"], r["agreement"]])


def _emit_table(report, stream):
    stream.write(f"glmn {report['library_version']} report\n")
    fld = report["field"]
    stream.write(f"field: p={fld['p']} k={fld['k']} modulus={fld['modulus']}\n")
    for task in report["tasks"]:
        rec = task["record"]
        status = "pass" if task["passed"] else "FAIL"
        stream.write(f"\n[{task['task']}] {status}\n")
        if "rows" in rec:
            stream.write(f"  rows: {rec['count']}  simple: "
                         f"{rec.get('simple_count')}  c: {rec.get('c')}\n")
            header = f"  {'lambda':<28} {'f_direct':<12} {'f_formula':<12} verdict"
            stream.write(header + "\n")
            for r in rec["rows"]:
                lam = ",".join(str(c) for c in r["lambda"])
                stream.write(f"  {lam:<28} {str(r.get('f_direct')):<12} "
                             f"{str(r['f_formula']):<12} {r['oracle_simple']}\n")
        else:
            stream.write("  " + json.dumps(rec, sort_keys=True) + "\n")


def make_report(cfg, algebra, results):
    field = algebra.field
    return {
        "schema_version": 1,
        "library_version": __version__,
        # jobs only controls parallelism; identical results either way
        "config": {k: cfg[k] for k in sorted(cfg) if k != "jobs"},
        "field": {"p": field.p, "k": field.k,
                  "modulus": [int(c) for c in field.modulus]},
        "tasks": [{"task": name, "record": rec, "passed": passed}
                  for name, rec, passed in results],
        "passed": all(passed for _, _, passed in results),
    }


def dump_module(module, stream):
    stream.write(f"dim {module.dim}\n")
    stream.write("parity " + " ".join(str(int(x)) for x in module.parity) + "\n")
    if module.labels is not None:
        for t, label in enumerate(module.labels):
            stream.write(f"label {t} {label}\n")
    for unit in module.units:
        stream.write(f"action E{unit}\n")
        for row in module.matrix(unit).data:
            stream.write("  " + " ".join(str(int(x)) for x in row) + "\n")


# ---------------------------------------------------------------------------
# entry points

def _execute(cfg, tasks, fmt, out, dump_module_path=None, dump_element_path=None):
    algebra, chi, weights = build_setting(cfg)
    results = []
    for name in tasks:
        rec, passed = TASK_RUNNERS[name](cfg, algebra, chi, weights)
        results.append((name, rec, passed))
    report = make_report(cfg, algebra, results)
    if dump_module_path:
        check_dim_budget(algebra, cfg)
        Z = build_baby_verma(algebra, chi, weights[0])
        with open(dump_module_path, "w") as fh:
            dump_module(Z, fh)
    if dump_element_path:
        ctx = ReductionContext(algebra, chi)
        rs = algebra.root_system()
        word = []
        for r in rs.positive:
            word += [rs.e_unit(r)] * (ctx.caps[ctx.unit_to_pos[rs.e_unit(r)]] - 1)
        for r in rs.positive:
            word += [rs.f_unit(r)] * (ctx.caps[ctx.unit_to_pos[rs.f_unit(r)]] - 1)
        with open(dump_element_path, "w") as fh:
            fh.write(normalize(ctx, word).dump() + "\n")
    if out:
        os.makedirs(out, exist_ok=True)
        for name, rec, passed in results:
            sub = make_report(cfg, algebra, [(name, rec, passed)])
            with open(os.path.join(out, f"{name}.{_ext(fmt)}"), "w") as fh:
                emit(sub, fmt, fh)
        with open(os.path.join(out, f"summary.{_ext(fmt)}"), "w") as fh:
            emit(report, fmt, fh)
    else:
        emit(report, fmt, sys.stdout)
    return 0 if report["passed"] else 1


def _ext(fmt):
    return {"json": "json", "csv": "csv", "table": "txt"}[fmt]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="glmn",
        description="Exact gl(m|n) module computations over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (
            ("run", "execute every task listed in the config"),
            ("scan", "simplicity scan over the weight variety"),
            ("kw", "verify the parabolic dimension reduction"),
            ("levi", "standard-Levi isomorphism scan"),
            ("check", "structure invariant checks")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", required=True)
        p.add_argument("--out", default=None,
                       help="directory for report files (default: stdout)")
        p.add_argument("--format", default="json",
                       choices=("json", "csv", "table"))
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--jobs", type=int, default=None)
        p.add_argument("--dim-budget", type=int, default=None)
        p.add_argument("--line-budget", type=int, default=None)
        p.add_argument("--dump-module", default=None,
                       help="write the baby Verma at the first weight here")
        p.add_argument("--dump-element", default=None,
                       help="write the straightened top monomial product here")
    return parser


COMMAND_TASKS = {
    "scan": ["verma-scan"],
    "kw": ["kw-verify"],
    "levi": ["levi-scan"],
    "check": ["structure-check"],
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        for key in ("seed", "jobs", "dim_budget", "line_budget"):
            flag = getattr(args, key)
            if flag is not None:
                cfg[key] = flag
        tasks = COMMAND_TASKS.get(args.command, cfg["tasks"])
        return _execute(cfg, tasks, args.format, args.out,
                        args.dump_module, args.dump_element)
    except (ConfigInvalid, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GlmnError as exc:
        print(f"task failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
