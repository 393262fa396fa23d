"""End-to-end acceptance checks; each test records one PASS/FAIL line."""

import subprocess
import sys
import time

from conftest import record
from hopfkernel import coanalysis as ca
from hopfkernel.bounds import category_data_from_kernel, check_bounds, load_category_data
from hopfkernel.comodules import regular_comodule
from hopfkernel.dualization import DualSpec, verify_dual
from hopfkernel.families import BigD, Limit, Taft
from hopfkernel.families.core import verify_hopf
from hopfkernel.families.lifted import Lifted
from hopfkernel.fusion import grouplike_comodule, verify_fusion, verify_limit_rules
from hopfkernel.scalars import FieldSpec, field_make
from hopfkernel.smash import SmashSpec, verify_smash

def field_for(n):
    return field_make(FieldSpec.cyclotomic(n if n % 2 == 0 else 2 * n))

def grid():
    for n in (2, 3, 4, 6):
        F = field_for(n)
        omega = F.zeta(F.spec.modulus // n)
        for alpha in (0, 1):
            for qname, q in (("1", F.one), ("omega", omega), ("t", F.t)):
                for size in (1, 2):
                    yield f"n={n} alpha={alpha} q={qname} |I|={size}", BigD(
                        F, n, n, omega, {i + 1: q for i in range(size)}, alpha)

def _run(criterion, body):
    ok, detail = False, "raised"
    try:
        ok, detail = body()
    finally:
        record(criterion, ok, detail)
    assert ok, detail

def test_criterion_1_hopf_axioms():
    def body():
        bad, count, slowest = [], 0, 0.0
        for label, fam in grid():
            t0 = time.perf_counter()
            rep = verify_hopf(fam, fam.window(support=len(fam.index), max_exp=2), cross_check=False)
            slowest = max(slowest, time.perf_counter() - t0)
            count += 1
            if not rep.passed:
                bad.append((label, [c.name for c in rep.failures()]))
        return not bad and slowest < 60, f"{count} specs, slowest {slowest:.1f}s, failures {bad[:3]}"
    _run(1, body)

def test_criterion_2_closed_equals_generated():
    def body():
        bad, monos = [], 0
        for label, fam in grid():
            for m in fam.window(support=len(fam.index), max_exp=2):
                monos += 1
                if fam.delta_closed(m) != fam.delta_generated(m):
                    bad.append((label, fam.format_mono(m)))
        return not bad, f"{monos} monomials, mismatches {bad[:3]}"
    _run(2, body)

def test_criterion_3_dual_construction():
    def body():
        F = field_make(FieldSpec.cyclotomic(4))
        t0 = time.perf_counter()
        reps = [verify_dual(DualSpec(Lifted.cyclic(F, 4, -1, 1))),
                verify_dual(DualSpec(Lifted(F, 2, (2,), (0,), -1, 1, (0,), 0)))]
        elapsed = time.perf_counter() - t0
        names = {c.name for r in reps for c in r.checks}
        need = {"relations/relations", "coproduct/delta.A1", "coproduct/antipode.A1",
                "independence/pairing_matrix.nonsingular"}
        ok = all(r.passed for r in reps) and need <= names and elapsed < 10
        return ok, f"C4 alpha=1 and C2xC2 alpha=0 in {elapsed:.2f}s"
    _run(3, body)

def test_criterion_4_block_classification():
    def body():
        seen = {ca.MATRIX: 0, ca.TAFT: 0}
        bad = []
        for n in (2, 3):
            F = field_for(n)
            omega = F.zeta(F.spec.modulus // n)
            F2 = field_make(FieldSpec.cyclotomic(2 * n))
            for Fq, q in ((F, F.t), (F2, F2.zeta(1))):
                om = omega if Fq is F else F2.zeta(2)
                fam = BigD(Fq, n, n, om, {1: q}, 1)
                for b in ca.classify_window(fam, fam.tails(1, 2)):
                    if b.tail == ():
                        continue
                    expect = ca.MATRIX if fam.mu(b.tail) else ca.TAFT
                    seen[b.tag] = seen.get(b.tag, 0) + 1
                    if b.tag != expect or not b.report.passed:
                        bad.append((n, ca.format_tail(b.tail)))
        ok = not bad and seen[ca.MATRIX] > 0 and seen[ca.TAFT] > 0
        return ok, f"matrix {seen[ca.MATRIX]}, taft translates {seen[ca.TAFT]}, bad {bad}"
    _run(4, body)

def test_criterion_5_socle_and_finite_type():
    def body():
        F = field_for(6)
        w = F.zeta(2)
        ft = lambda fam: ca.finite_type(fam).value
        cases = [
            ft(BigD(F, 3, 3, w, {1: F.t}, 0)) is True,
            ft(BigD(F, 3, 3, w, {1: w, 2: F.zeta(1)}, 1)) is True,
            ft(BigD(F, 3, 3, w, {1: F.t}, 1)) is False,
        ]
        socles_ok = True
        for alpha, q in ((0, F.t), (1, w), (1, F.t)):
            fam = BigD(F, 3, 3, w, {1: q}, alpha)
            soc = ca.hopf_socle(fam, fam.tails(1, 2))
            socles_ok &= soc.fusion_socle == sorted(soc.grouplikes) and soc.dim == len(soc.grouplikes)
        fam = BigD(F, 3, 3, w, {1: F.t}, 1)
        soc = ca.hopf_socle(fam, fam.tails(1, 2))
        taft_ok = soc.grouplikes == [(0, t, ()) for t in range(3)]
        return all(cases) and socles_ok and taft_ok, f"finite_type {cases}, socle {socles_ok}, taft {taft_ok}"
    _run(5, body)

def test_criterion_6_fusion_rules():
    def body():
        F = field_for(2)
        fam = BigD(F, 2, 2, F.coerce(-1), {1: F.t}, 1)
        win = ca.SupportWindow.build(fam, 1, 1, merge_closed=True)
        rep = verify_fusion(fam, win)
        once = rep.check("fusion.taft_grouplikes_once")
        lim = verify_limit_rules(Limit(F, 2, F.coerce(-1), [1]), zmax=4)
        ok = (rep.passed and lim.passed and win.is_negation_closed() and rep.meta["pairs"] >= 20
              and once is not None and once.passed)
        return ok, f"{rep.meta['pairs']} pairs, limit rules {lim.passed}"
    _run(6, body)

def test_criterion_7_smash_suite():
    def body():
        rep = verify_smash(SmashSpec.z_c2(zmax=8))
        ok = rep.passed and "example_rules" in {c.name for c in rep.checks}
        return ok, f"{len(rep.checks)} checks, failures {[c.name for c in rep.failures()][:3]}"
    _run(7, body)

def test_criterion_8_bounds():
    def body():
        rep = check_bounds(load_category_data())
        m = rep.meta
        row = {r["simple"]: r for r in m["rows"]}["V1"]
        published = (m["d"], m["dimE1"], m["b"], m["r"], row["length"]) == (2, 6, 3, 2, 4)
        sl2 = rep.passed and published and row["refined"] == 12 and row["cor1"] == 14 == 3 * 6 - 2 * 2
        taft_ok = True
        for n in (2, 3, 4):
            F = field_for(n)
            tr = check_bounds(category_data_from_kernel(Taft(F, n, F.zeta(F.spec.modulus // n))))
            taft_ok &= tr.passed and tr.meta["dimE1"] == n and all(
                r["length"] == n and r["tight"] for r in tr.meta["rows"])
        return sl2 and taft_ok, f"4 <= {row['refined']}, 4 <= {row['cor1']}, taft tight {taft_ok}"
    _run(8, body)

def test_criterion_9_loewy():
    def body():
        bad = []
        for n in range(2, 7):
            F = field_for(n)
            T = Taft(F, n, F.zeta(F.spec.modulus // n))
            simples = [grouplike_comodule(T, t, ()) for t in range(n)]
            filt = ca.filtration_for(T, T.basis(), simples=simples)
            lls = []
            for c in range(n):
                E = regular_comodule(T, [(l, (c - l) % n, ()) for l in range(n)])
                lls.append(ca.loewy_series(E, filt).loewy_length)
            if lls != [n] * n or filt.length != max(lls):
                bad.append((n, lls, filt.length))
        return not bad, f"n=2..6, mismatches {bad}"
    _run(9, body)

COMMANDS = [
    ["verify", "--family", "bigd", "--n", "3", "--q", "t", "--index-size", "2"],
    ["verify", "--family", "lifted", "--G", "C4", "--alpha", "1", "--dual"],
    ["analyze", "--family", "bigd", "--n", "3", "--q", "t"],
    ["fusion", "--family", "bigd", "--n", "2", "--q", "t", "--support", "1", "--max-exp", "1"],
    ["fusion", "--family", "smash", "--zmax", "3"],
    ["bounds", "--category-data", "uqsl2"],
    ["dump", "--family", "taft", "--n", "3"],
]

def test_criterion_10_determinism():
    def body():
        bad = []
        for argv in COMMANDS:
            runs = [subprocess.run([sys.executable, "-m", "hopfkernel.cli", *argv, "--format", "json",
                                    "--no-timing"], capture_output=True) for _ in range(2)]
            if runs[0].returncode != 0 or runs[0].stdout != runs[1].stdout or not runs[0].stdout:
                bad.append(argv[:3])
        return not bad, f"{len(COMMANDS)} commands, differing {bad}"
    _run(10, body)
