"""Command-line front end: ``hopfkernel verify|analyze|fusion|bounds|dump``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage or
configuration errors (nothing is computed in that case).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Dict, List, Optional

from . import __version__
from .config import ConfigError, build_family, make_field, validate_job
from .report import CheckResult, VerificationReport

COMMANDS = ("verify", "analyze", "fusion", "bounds", "dump")


class Job:
    def __init__(self, command: str, cfg: dict):
        self.command = command
        self.cfg = cfg
        self.field = make_field(cfg)
        self.fam = build_family(cfg, self.field)
        self.window = cfg.get("window", {})
        self.options = cfg.get("options", {})

    @property
    def kind(self) -> str:
        return self.cfg["family"]["kind"]

    def tails(self):
        from .coanalysis import SupportWindow

        support = self.window.get("support", 1)
        max_exp = self.window.get("max_exp", 2)
        return SupportWindow.build(self.fam, support, max_exp)


# ---------------------------------------------------------------------------
# commands


def cmd_verify(job: Job) -> Dict[str, Any]:
    from .families import verify_hopf

    fam = job.fam
    rep = VerificationReport("verify")
    results: Dict[str, Any] = {}
    if job.kind == "smash":
        from .smash import smash_blocks

        zmax = job.window.get("zmax", fam.spec.zmax)
        rep.extend(verify_hopf(fam, window=fam.window(zmax), cross_check=False), "hopf/")
        for b in smash_blocks(fam, zmax):
            rep.extend(b.report, f"block{b.rep}/")
        results["window_size"] = len(fam.window(zmax))
    else:
        kw = {}
        if job.kind in ("bigd", "limit"):
            kw = {"support": job.window.get("support", 2), "max_exp": job.window.get("max_exp", 2)}
        window = fam.window(**kw)
        rep.extend(verify_hopf(fam, window=window, cross_check=job.options.get("cross_check", True)), "hopf/")
        results["window_size"] = len(window)
    if job.options.get("dual"):
        if job.kind == "lifted":
            from .dualization import DualSpec, verify_dual

            dspec = DualSpec(fam)
            rep.extend(verify_dual(dspec, seed=job.options.get("seed", 0)), "dual/")
            results["xi"] = str(dspec.xi)
        elif job.kind == "taft":
            from .dualization import taft_self_duality

            rep.extend(taft_self_duality(fam), "dual/")
        else:
            raise ConfigError("options.dual applies to lifted and taft families")
    return {"report": rep, "results": results}


def _loewy_taft(fam) -> Dict[str, Any]:
    from .coanalysis import filtration_for, loewy_series
    from .comodules import regular_comodule
    from .fusion import grouplike_comodule

    block = fam.block_monomials(())
    simples = [grouplike_comodule(fam, t, ()) for t in range(fam.m)]
    filt = filtration_for(fam, block, simples=simples)
    hulls = []
    for c in range(fam.m):
        basis = [(l, (c - l) % fam.m, ()) for l in range(fam.n)]
        E = regular_comodule(fam, basis, f"E[{fam.format_mono((0, c, ()))}]")
        ls = loewy_series(E, filt)
        hulls.append({"hull": E.name, "dim": E.dim, **ls.to_json()})
    return {"coradical_filtration": filt.to_json(), "injective_hulls": hulls,
            "max_loewy_length": max(h["loewy_length"] for h in hulls)}


def cmd_analyze(job: Job) -> Dict[str, Any]:
    fam = job.fam
    rep = VerificationReport("analyze")
    results: Dict[str, Any] = {}
    if job.kind == "smash":
        from .bounds import category_data_from_smash
        from .smash import smash_blocks

        blocks = smash_blocks(fam, job.window.get("zmax", fam.spec.zmax))
        for b in blocks:
            rep.extend(b.report, f"block{b.rep}/")
        results["blocks"] = [b.to_json(fam) for b in blocks]
        data = category_data_from_smash(fam)
        results["injective_hull_of_unit"] = {"dim": data.dim_e1, "factors": data.comp_e1}
        return {"report": rep, "results": results}
    if job.kind == "lifted":
        from .coanalysis import coradical_filtration, is_grouplike
        from .dualization import StructureConstants

        basis = fam.basis()
        sc = StructureConstants.from_family(fam, basis, coalgebra_only=True)
        filt = coradical_filtration(sc, basis)
        results["grouplikes"] = [fam.format_mono(b) for b in basis if is_grouplike(fam, b)]
        results["coradical_filtration"] = filt.to_json()
        return {"report": rep, "results": results}
    from .coanalysis import blocks_report, classify_window, finite_type, group_likes, hopf_socle

    window = job.tails()
    blocks = classify_window(fam, window)
    rep.extend(blocks_report(fam, blocks))
    gl = group_likes(fam, window)
    soc = hopf_socle(fam, window, check_fusion=job.options.get("socle_fusion", True))
    if soc.fusion_socle is not None:
        same = set(soc.fusion_socle) == set(gl)
        rep.add(CheckResult("socle.matches_grouplikes", same, 1,
                            None if same else {"grouplikes": len(gl), "fusion_socle": len(soc.fusion_socle)}))
    ft = finite_type(fam)
    results.update({
        "window": window.to_json(),
        "blocks": [b.to_json(fam) for b in blocks],
        "grouplikes": [fam.format_mono(g) for g in gl],
        "socle": soc.to_json(fam),
        "finite_type": ft.to_json(),
    })
    if job.options.get("loewy", True):
        results["loewy"] = _loewy_taft(fam)
    return {"report": rep, "results": results}


def cmd_fusion(job: Job) -> Dict[str, Any]:
    fam = job.fam
    rep = VerificationReport("fusion")
    results: Dict[str, Any] = {}
    if job.kind == "smash":
        from .smash import expected_example_rule, smash_coradical, smash_fusion

        zmax = job.window.get("zmax", 4)
        cor = smash_coradical(fam, 2 * zmax)
        rows = []
        for a in range(1, zmax + 1):
            for b in range(1, zmax + 1):
                res = smash_fusion(fam, a, b, cor)
                rep.extend(res.report, f"S_{a}⊗S_{b}/")
                good = res.summands == expected_example_rule(a, b)
                rep.add(CheckResult(f"S_{a}⊗S_{b}/example_rule", good, 1,
                                    None if good else {"got": res.summands,
                                                       "expected": expected_example_rule(a, b)}))
                rows.append(res.to_json())
        results["rules"] = rows
        return {"report": rep, "results": results}
    if job.kind == "lifted":
        raise ConfigError("fusion applies to bigd, taft, limit and smash families")
    from .fusion import verify_fusion, verify_limit_rules

    window = job.tails()
    fr = verify_fusion(fam, window, seed=job.options.get("seed", 0), max_pairs=job.options.get("pairs"))
    rep.extend(fr)
    results["window"] = window.to_json()
    results["pairs"] = fr.meta["pairs"]
    results["rules"] = fr.meta["rules"]
    if job.kind == "limit" and job.options.get("limit_rules", True) and fam.n == 2 and len(fam.index) == 1:
        lr = verify_limit_rules(fam, zmax=job.window.get("zmax", 4), seed=job.options.get("seed", 0))
        rep.extend(lr, "limit/")
    return {"report": rep, "results": results}


def cmd_bounds(job: Optional[Job], cfg: dict) -> Dict[str, Any]:
    from .bounds import (CategoryDataError, category_data_from_kernel, category_data_from_smash, check_bounds,
                         load_category_data)

    src = cfg.get("options", {}).get("category_data")
    try:
        if src == "kernel" or (src is None and job is not None):
            if job.kind == "smash":
                data = category_data_from_smash(job.fam)
            elif job.kind in ("bigd", "taft", "limit"):
                data = category_data_from_kernel(job.fam, job.tails())
            else:
                raise ConfigError("kernel category data needs a bigd, taft, limit or smash family")
        else:
            data = load_category_data(None if src in (None, "uqsl2") else src)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"category data: {exc}") from None
    rep = check_bounds(data)
    results = {"category_data": data.to_json(), **{k: v for k, v in rep.meta.items()}}
    return {"report": rep, "results": results}


def cmd_dump(job: Job) -> Dict[str, Any]:
    from .families.core import sparse_to_json

    fam = job.fam
    if job.kind == "smash":
        monos = fam.window(job.window.get("zmax", fam.spec.zmax))
    elif job.kind in ("bigd", "limit"):
        monos = fam.window(support=job.window.get("support", 1), max_exp=job.window.get("max_exp", 1))
    else:
        monos = fam.window()
    pair = lambda k: " ⊗ ".join(fam.format_mono(x) for x in k)
    table = []
    for m in monos:
        table.append({
            "monomial": fam.format_mono(m),
            "delta": sparse_to_json(fam.delta_closed(m), pair),
            "epsilon": str(fam.epsilon_mono(m)),
            "antipode": sparse_to_json(fam.antipode_mono(m), fam.format_mono),
        })
    return {"report": VerificationReport("dump"), "results": {"family": fam.describe(), "table": table}}


# ---------------------------------------------------------------------------
# argument handling


def _split(text: str) -> List[str]:
    return [s.strip() for s in text.split(",") if s.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfkernel", description="Exact computations with co-Frobenius Hopf algebras.")
    p.add_argument("--version", action="version", version=f"hopfkernel {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--config", help="JSON job file")
        sp.add_argument("--out", help="write the JSON report here")
        sp.add_argument("--format", choices=["json", "text"])
        sp.add_argument("--family", choices=["bigd", "taft", "limit", "lifted", "smash"])
        sp.add_argument("--n", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--omega")
        sp.add_argument("--alpha")
        sp.add_argument("--q", help="one value or a comma-separated list")
        sp.add_argument("--index-size", type=int)
        sp.add_argument("--index", help="comma-separated labels (limit family)")
        sp.add_argument("--G", dest="G", help="C4, C2xC2, ...")
        sp.add_argument("--g")
        sp.add_argument("--chi")
        sp.add_argument("--p", type=int)
        sp.add_argument("--conductor", type=int)
        sp.add_argument("--support", type=int)
        sp.add_argument("--max-exp", type=int)
        sp.add_argument("--zmax", type=int)
        sp.add_argument("--dual", action="store_true", default=None)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--pairs", type=int)
        sp.add_argument("--no-loewy", action="store_true", default=None)
        sp.add_argument("--category-data", help="path, 'uqsl2' or 'kernel'")
        sp.add_argument("--no-timing", action="store_true", help="omit the timing field")
    return p


def config_from_args(args: argparse.Namespace) -> dict:
    cfg: Dict[str, Any] = {}
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(cfg, dict):
            raise ConfigError("config must be a JSON object")
    fam = dict(cfg.get("family", {}))
    for key in ("n", "m", "omega", "alpha", "G", "g", "chi", "p"):
        val = getattr(args, key)
        if val is not None:
            fam[key] = val
    if args.family:
        fam["kind"] = args.family
    if args.q is not None:
        qs = _split(args.q)
        fam["q"] = qs if len(qs) > 1 else qs[0]
    if args.index_size is not None:
        fam["index_size"] = args.index_size
    if args.index is not None:
        try:
            fam["index"] = [int(x) for x in _split(args.index)]
        except ValueError:
            raise ConfigError("--index takes integers") from None
    if args.zmax is not None and fam.get("kind") == "smash":
        fam["zmax"] = args.zmax
    if fam:
        cfg["family"] = fam
    if args.conductor is not None:
        cfg["field"] = {"kind": "cyclotomic", "conductor": args.conductor}
    win = dict(cfg.get("window", {}))
    for key, attr in (("support", "support"), ("max_exp", "max_exp"), ("zmax", "zmax")):
        val = getattr(args, attr)
        if val is not None:
            win[key] = val
    if win:
        cfg["window"] = win
    opts = dict(cfg.get("options", {}))
    if args.dual:
        opts["dual"] = True
    if args.seed is not None:
        opts["seed"] = args.seed
    if args.pairs is not None:
        opts["pairs"] = args.pairs
    if args.no_loewy:
        opts["loewy"] = False
    if args.category_data is not None:
        opts["category_data"] = args.category_data
    if opts:
        cfg["options"] = opts
    if args.out:
        cfg["out"] = args.out
    if args.format:
        cfg["format"] = args.format
    cfg["command"] = args.command
    return cfg


def run(cfg: dict) -> Dict[str, Any]:
    """Validate, execute and assemble the report dictionary."""
    command = cfg.get("command", "verify")
    if command == "bounds" and "family" not in cfg:
        validate_job({**cfg, "family": {"kind": "taft"}})
        job = None
    else:
        validate_job(cfg)
        job = Job(command, cfg)
    start = time.perf_counter()
    if command == "verify":
        out = cmd_verify(job)
    elif command == "analyze":
        out = cmd_analyze(job)
    elif command == "fusion":
        out = cmd_fusion(job)
    elif command == "bounds":
        out = cmd_bounds(job, cfg)
    else:
        out = cmd_dump(job)
    elapsed = time.perf_counter() - start
    rep: VerificationReport = out["report"]
    echo = {k: v for k, v in cfg.items() if k not in ("out", "format")}
    return {
        "command": command,
        "config": echo,
        "kernel_version": __version__,
        "passed": rep.passed,
        "checks": [c.to_json() for c in rep.checks],
        "results": out["results"],
        "timing": {"seconds": round(elapsed, 3)},
        "_summary": rep.summary_lines(),
    }


def render_json(report: Dict[str, Any], timing: bool = True) -> str:
    body = {k: v for k, v in report.items() if k != "_summary" and (timing or k != "timing")}
    return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_text(report: Dict[str, Any]) -> str:
    lines = [f"hopfkernel {report['kernel_version']} {report['command']}"]
    lines += report["_summary"]
    res = report["results"]
    for key in ("finite_type", "grouplikes", "pairs", "bound_refined", "bound_cor1"):
        if key in res:
            lines.append(f"{key}: {json.dumps(res[key], sort_keys=True, ensure_ascii=False)}")
    if "loewy" in res:
        lines.append(f"max_loewy_length: {res['loewy']['max_loewy_length']}; "
                     f"coradical filtration length: {res['loewy']['coradical_filtration']['length']}")
    if "rows" in res:
        for row in res["rows"]:
            tight = " (tight)" if row["tight"] else ""
            lines.append(f"  {row['simple']}: l(E) = {row['length']} <= {row['refined']} and <= {row['cor1']}{tight}")
    lines.append(f"status: {'PASS' if report['passed'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        report = run(cfg)
    except ConfigError as exc:
        print(f"hopfkernel: config error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # parameters that pass the schema but violate a family or duality precondition
        print(f"hopfkernel: invalid parameters: {exc}", file=sys.stderr)
        return 2
    text = render_json(report, timing=not args.no_timing)
    out = cfg.get("out")
    if out:
        try:
            with open(out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"hopfkernel: cannot write {out}: {exc}", file=sys.stderr)
            return 2
    fmt = cfg.get("format", "text")
    sys.stdout.write(text if fmt == "json" else render_text(report))
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
