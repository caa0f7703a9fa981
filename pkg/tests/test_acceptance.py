from __future__ import annotations

import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from math import comb

import jsonschema
import pytest

from liekernel.catalog import (
    SU3_PRINTED, build_hkt, build_sp2, build_su2su2, build_su3, compare_differentials, load_g2,
)
from liekernel.exterior import KForm, KVector
from liekernel.gradings import family
from liekernel.kernelmap import closed_contraction_check, dP, kernel_dimension_identity, lie_kernel, restrict_to_P
from liekernel.liealg import betti, closed_forms, jacobi_check
from liekernel.notation import parse
from liekernel.report import REPORT_SCHEMA
from liekernel.tables import GRADED, SOLVABLE, sample_params
from liekernel.verify import (
    verify_determinants, verify_extdi, verify_families, verify_gradings, verify_hkt,
    verify_multimoment, verify_nk, verify_tables, verify_unimodular,
)

SU2SU2_STAB = (
    "the printed beta_3 = e1f1+e2f2+e3f3 is fixed by the diagonal su(2), "
    "so its stabilizer has dimension 3, not 0"
)


def statuses(report) -> dict:
    return {c.id: c.status for c in report.checks}


def all_pass(report, prefix: str = "") -> list:
    return [c.id for c in report.checks if c.id.startswith(prefix) and c.status == "fail"]


def test_criterion_01_structure_validity():
    t0 = time.perf_counter()
    algebras = [build_su3()[0], build_sp2()[0], build_su2su2()]
    g2 = load_g2()
    if g2 is not None:
        algebras.append(g2)
    for g in algebras:
        assert jacobi_check(g) is None
    for e in GRADED.values():
        assert jacobi_check(parse(e.structure).bind({})) is None, e.id
    for e in SOLVABLE.values():
        points = sample_params(e, 10) if e.params else [{}]
        assert len(points) == (10 if e.params else 1)
        for b in points:
            assert jacobi_check(parse(e.structure).bind(b, check=False)) is None, (e.id, b)
    assert time.perf_counter() - t0 < 10


def test_criterion_02_su3_differentials():
    g, _ = build_su3()
    assert len(SU3_PRINTED) == 8
    assert compare_differentials(g, SU3_PRINTED) == {}
    assert statuses(verify_extdi())["su3.differentials"] == "pass"


def test_criterion_03_hkt():
    t0 = time.perf_counter()
    rep = verify_hkt()
    assert all_pass(rep) == []
    st = statuses(rep)
    for cid in ("hkt.square.I", "hkt.square.J", "hkt.square.K", "hkt.IJ=K", "hkt.JI=-K",
                "hkt.metric.I", "hkt.metric.J", "hkt.metric.K", "hkt.omegaI", "hkt.omegaJ", "hkt.omegaK",
                "hkt.domegaI", "hkt.domegaJ", "hkt.domegaK", "hkt.sign", "hkt.IdI=JdJ=KdK",
                "hkt.IdI.printed", "hkt.dc"):
        assert st[cid] == "pass", cid
    # the printed dω_K differs from the computed one by a single term, a1'b23c13 -> a1'c13c23
    # (a1' = a1 - a2/2 and a2' = sqrt(3)/2 a2, hence the a2 components)
    assert rep.by_id("hkt.domegaK.printed").witness == {
        "missing": {"a1b23c13": "1"},
        "unexpected": {"a1c13c23": "1", "a2c13c23": "-1/2"},
        "different": {"a2b23c13": {"printed": "-1/2+1/2*sqrt(3)", "computed": "1/2*sqrt(3)"}},
    }
    assert build_hkt().sign == -1
    assert time.perf_counter() - t0 < 5


def test_criterion_04_multimoment_kernels():
    rep = verify_multimoment()
    st = statuses(rep)
    for name in "IJK":
        assert st[f"mm.kernel.{name}"] == "pass"
        assert st[f"mm.nu{name}.printed"] in ("pass", "info-diff")
    assert st["mm.nuI.printed"] == "info-diff"


def test_criterion_05_nk_table():
    rep = verify_nk()
    st = statuses(rep)
    for row in ("su3", "sp2", "su2su2", "g2"):
        assert st[f"nk.{row}.dP"] == "pass", row
        assert st[f"nk.{row}.two_plectic"] == "pass", row
    for row, dim in (("su3", 2), ("sp2", 4), ("g2", 8)):
        assert st[f"nk.{row}.stabilizer"] == "pass"
        assert rep.by_id(f"nk.{row}.stabilizer").witness["dim"] == dim


@pytest.mark.xfail(strict=True, reason=SU2SU2_STAB)
def test_criterion_05_su2su2_stabilizer():
    rep = verify_nk()
    assert rep.by_id("nk.su2su2.stabilizer").witness["dim"] == 0


def test_criterion_06_table_scans():
    t0 = time.perf_counter()
    rep = verify_tables(samples=20)
    assert all_pass(rep) == []
    st = statuses(rep)
    for eid in SOLVABLE:
        assert st[f"tables.{eid}.positive"] == "pass"
    assert any(".negative." in cid and s == "pass" for cid, s in st.items())
    assert time.perf_counter() - t0 < 60


def test_criterion_07_determinants():
    rep = verify_determinants()
    assert all_pass(rep) == []
    four = {e.id for e in SOLVABLE.values() if e.determinants is not None and e.table == "T2"}
    assert four == {"T2.r4.lambda2", "T2.r4.lambda", "T2.r4p.lambda2", "T2.d4.lambda", "T2.d4p.lambda"}
    for e in SOLVABLE.values():
        if e.determinants is not None:
            c = rep.by_id(f"det.{e.id}")
            assert c.status == "pass" and c.witness["points"] >= 8 ** len(e.params) - 8


def test_criterion_08_gradings():
    rep = verify_gradings()
    assert all_pass(rep) == []
    st = statuses(rep)
    assert sum(1 for cid, s in st.items() if cid.count(".") == 2 and cid.startswith("gradings.T1.") and s == "pass") == 50
    assert st["gradings.example.extension"] == "pass"


def test_criterion_09_families():
    rep = verify_families(max_n=9, count=5)
    assert all_pass(rep) == []
    assert statuses(rep)["families.f1.5.equals_p5"] == "pass"


def test_criterion_10_unimodular():
    rep = verify_unimodular()
    assert all_pass(rep) == []
    assert statuses(rep)["unimodular.dim<=4"] == "pass"


def _pool():
    algs = [parse(e.structure).bind({}) for e in GRADED.values()]
    for e in SOLVABLE.values():
        algs += [parse(e.structure).bind(b) for b in (sample_params(e, 2) if e.params else [{}])]
    algs += [build_su3()[0], build_sp2()[0], build_su2su2(), family("f3", 7)]
    return [g for g in algs if g.dim >= 3]


def combine(vectors, coeff) -> list:
    cs = [coeff() for _ in vectors]
    return [sum((c * v[t] for c, v in zip(cs, vectors)), Fraction(0)) for t in range(len(vectors[0]))]


def test_criterion_11_property_suites():
    rng = random.Random(11)
    pool = _pool()
    coeff = lambda: Fraction(rng.randint(-5, 5), rng.randint(1, 3))  # noqa: E731
    for g in pool:
        for k in range(min(g.dim - 1, 4)):
            n_k = comb(g.dim, k)
            phi = KForm.from_vector(g.dim, k, [coeff() if rng.random() < 0.3 else 0 for _ in range(n_k)])
            assert not g.d(g.d(phi)).terms
        assert kernel_dimension_identity(g)
    triples = 0
    while triples < 100:
        g = rng.choice(pool)
        P = lie_kernel(g)
        closed = closed_forms(g, 3)
        if not P.dim or not closed:
            continue
        c = KForm.from_vector(g.dim, 3, combine(rng.sample(closed, min(3, len(closed))), coeff))
        p = KVector.from_vector(g.dim, 2, combine(P.basis, coeff))
        assert closed_contraction_check(g, c, p, P)
        triples += 1
    for _ in range(50):
        g = rng.choice(pool)
        beta = KForm.from_vector(g.dim, 2, [coeff() for _ in range(comb(g.dim, 2))])
        shift = g.d(KForm.from_vector(g.dim, 1, [coeff() for _ in range(g.dim)]))
        assert restrict_to_P(g, beta) == restrict_to_P(g, beta + shift)
        assert dP(g, beta) == dP(g, beta + shift)
    for n in range(1, 9):
        g = parse(f"(0^{n})").bind({})
        assert [betti(g, k) for k in range(n + 1)] == [comb(n, k) for k in range(n + 1)]


@pytest.fixture(scope="module")
def end_to_end():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "liekernel", "verify-paper", "--json"],
                          capture_output=True, text=True, timeout=600)
    return proc, time.perf_counter() - t0


def test_criterion_12_end_to_end(end_to_end):
    proc, elapsed = end_to_end
    assert elapsed < 120
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, REPORT_SCHEMA)
    st = {c["id"]: c["status"] for c in doc["checks"]}
    assert st["mm.nuI.printed"] == "info-diff"
    assert st["g2.differentials"] == "info-diff"
    assert [cid for cid, s in st.items() if s == "fail"] == ["nk.su2su2.stabilizer"]
    assert proc.returncode == 1


@pytest.mark.xfail(strict=True, reason=SU2SU2_STAB)
def test_criterion_12_exit_code(end_to_end):
    proc, _ = end_to_end
    assert proc.returncode == 0
