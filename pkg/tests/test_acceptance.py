"""Acceptance gate: one test per criterion, each with its runtime budget.

Run ``pytest tests/test_acceptance.py`` to get the per-criterion summary.
"""

import json
import math
import random
import subprocess
import sys
import time
from itertools import product

import pytest

from loophopf import linalg
from loophopf.cli import main as cli_main
from loophopf.endo import LambdaSeq, compose, identity, invert, is_automorphism, is_coalgebra_map
from loophopf.endo import matrix, matrix_codes
from loophopf.errors import VerificationError
from loophopf.families import (
    FamilyParams,
    build_dual_cyclic,
    build_graded,
    build_Lnd,
    build_nc2,
    clear_caches,
    generator_monomial,
    nc2_candidate,
    relation_failures,
)
from loophopf.hopf import (
    AXIOMS,
    antipode_images,
    classify,
    conjugate,
    embed_table,
    enumerate_dim_p_bialgebras,
    frobenius,
    integral,
    is_commutative,
    is_local,
    is_semisimple,
    normalize_dim_p,
    verify,
)
from loophopf.loop_coalgebra import LoopElement, basis
from loophopf.quivers import thin_split_product_loop
from loophopf.scalars import binom_vanishes, carry_count, field, legendre_sum, lucas_binom
from loophopf.tablefile import dumps, loads, write_table

LND_RANGE = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2)]


def lnd_params():
    for p, n in LND_RANGE:
        for d in range(n + 1):
            yield FamilyParams(p, n, d)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.criterion(1, "binomial vanishing: Lucas <=> Legendre <=> carries, m,n <= 300")
def test_c01_binomial_vanishing_equivalence():
    with Timer() as timer:
        # exact big-integer binomials by Pascal's rule
        pascal = [[1]]
        for s in range(1, 601):
            prev = pascal[-1]
            pascal.append([1] + [prev[i - 1] + prev[i] for i in range(1, s)] + [1])
        for p in (2, 3, 5, 7):
            leg = [legendre_sum(k, p) for k in range(601)]
            pairs = [(m, n) for m in range(1, 301) for n in range(1, 301)]
            vanishes = [binom_vanishes(m, n, p) for m, n in pairs]
            assert vanishes == [leg[m + n] > leg[m] + leg[n] for m, n in pairs]
            assert vanishes == [carry_count(m, n, p) >= 1 for m, n in pairs]
            lucas = [lucas_binom(m + n, n, p) for m, n in pairs]
            assert lucas == [pascal[m + n][n] % p for m, n in pairs]
    assert pascal[600][300] == math.comb(600, 300)
    assert timer.elapsed < 2.0, f"{timer.elapsed:.2f} s"


@pytest.mark.criterion(2, "thin-split enumeration equals Lucas, a+b <= 16")
def test_c02_thin_splits_equal_lucas():
    with Timer() as timer:
        for p in (2, 3, 5):
            for s in range(17):
                for a in range(s + 1):
                    assert thin_split_product_loop(a, s - a, p) == lucas_binom(s, a, p)
    assert timer.elapsed < 5.0, f"{timer.elapsed:.2f} s"


@pytest.mark.criterion(3, "λ-sequences over GF(5), N = 12: coalgebra maps, composition, inverses")
def test_c03_lambda_sequences():
    F5, N = field(5), 12
    rng = random.Random(20240601)
    seqs = [LambdaSeq(F5, tuple(F5(rng.randrange(5)) for _ in range(N - 1))) for _ in range(100)]
    with Timer() as timer:
        saw_zero = saw_unit = False
        for i, f in enumerate(seqs):
            g = seqs[(i + 1) % len(seqs)]
            assert is_coalgebra_map(matrix(f, N), N)
            fg = compose(f, g, N)
            assert matrix_codes(fg, N) == linalg.matmul(F5, matrix_codes(f, N), matrix_codes(g, N))
            invertible = linalg.rank(F5, matrix_codes(f, N)) == N
            assert is_automorphism(f) == bool(f[1]) == invertible
            if is_automorphism(f):
                saw_unit = True
                inv = invert(f, N)
                assert compose(inv, f, N) == identity(F5)
                assert compose(f, inv, N) == identity(F5)
                if is_automorphism(g):
                    assert compose(invert(fg, N), fg, N) == identity(F5)
            else:
                saw_zero = True
        assert saw_zero and saw_unit
    assert timer.elapsed < 5.0, f"{timer.elapsed:.2f} s"


@pytest.mark.criterion(4, "L(n,d) tables pass the full verifier")
def test_c04_Lnd_full_verifier():
    clear_caches()
    with Timer() as timer:
        for P in lnd_params():
            report = verify(build_Lnd(P))
            failing = {name: s.render() for name, s in report.axioms.items() if s.passed is not True}
            assert not failing, (P, failing)
    assert set(report.axioms) == set(AXIOMS)
    assert timer.elapsed < 120.0, f"{timer.elapsed:.2f} s"


@pytest.mark.criterion(5, "defining relations and F = V^d on every basis path")
def test_c05_relations():
    for P in lnd_params():
        assert relation_failures(build_Lnd(P), P) == [], P


@pytest.mark.criterion(6, "n+1 tables, n+1 distinct classes, classify = d")
def test_c06_class_count():
    for p, n in LND_RANGE:
        ds = [classify(build_Lnd(FamilyParams(p, n, d))).d for d in range(n + 1)]
        assert ds == list(range(n + 1)), (p, n, ds)
        assert len(set(ds)) == n + 1


@pytest.mark.criterion(7, "d = 0 semisimple with integral t; d >= 1 local, not semisimple")
def test_c07_semisimple_local_dichotomy():
    for P in lnd_params():
        T = build_Lnd(P)
        if P.d == 0:
            assert is_semisimple(T)
            data = integral(T)
            assert data.t_is_integral and data.eps_t == T.field.one
        else:
            assert is_local(T) and not is_semisimple(T)
            assert not integral(T).has_nonzero_counit


@pytest.mark.criterion(8, "α_{sp+t} = α_p^s α_1^t / (s! t!) in L(2,1)")
def test_c08_divided_power_basis():
    for p in (2, 3, 5):
        T = build_Lnd(FamilyParams(p, 2, 1))
        for s in range(p):
            for t in range(p):
                scale = pow(math.factorial(s) * math.factorial(t), -1, p)
                rhs = generator_monomial(T, (t, s)).scale(scale)
                assert basis(T.field, T.N, s * p + t) == rhs, (p, s, t)


@pytest.mark.criterion(9, "noncommutative example: Hopf, commutativity fails at (1,2)")
def test_c09_noncommutative_example():
    try:
        T = build_nc2()
    except VerificationError as exc:
        pytest.fail(f"build_nc2 rejected by the verifier: {exc}")
    report = verify(T)
    assert report.is_hopf
    assert report.axioms["commutative"].counterexample == (1, 2)


def isomorphic_dim_p(A, B):
    """Brute force over all coalgebra automorphisms of k↻_p."""
    fld, p = A.field, A.field.p
    for codes in product(range(fld.q), repeat=p - 1):
        if codes[0] and conjugate(A, LambdaSeq(fld, tuple(fld.element(c) for c in codes))) == B:
            return True
    return False


@pytest.mark.criterion(10, "all bialgebras on k↻_p, p = 2, 3: exactly 2 classes after normalizing")
def test_c10_dim_p_exhaustive():
    with Timer() as timer:
        for p in (2, 3):
            tables = enumerate_dim_p_bialgebras(field(p))
            assert tables and all(verify(T).is_hopf for T in tables)
            normalized = [normalize_dim_p(T) for T in tables]
            assert {R.tag for R in normalized} == {0, 1}
            # lift everything to one field and confirm the tags are the classes
            big = max((R.table.field for R in normalized), key=lambda F: F.q)
            lifted = {0: [], 1: []}
            for R in normalized:
                U = R.table if R.table.field == big else embed_table(R.table, big)
                assert frobenius(U, basis(big, p, 1)) == basis(big, p, 1).scale(R.tag)
                lifted[R.tag].append(U)
            for tag, group in lifted.items():
                assert all(isomorphic_dim_p(group[0], U) for U in group[1:]), (p, tag)
            assert not isomorphic_dim_p(lifted[0][0], lifted[1][0])
    assert timer.elapsed < 60.0, f"{timer.elapsed:.2f} s"


@pytest.mark.criterion(11, "dual cyclic tables: verified, semisimple, class d = 0")
def test_c11_dual_cyclic():
    for p in (2, 3):
        for n in (1, 2):
            T = build_dual_cyclic(p, n)
            assert verify(T).all_pass
            assert is_semisimple(T)
            assert classify(T).d == 0 == classify(build_Lnd(FamilyParams(p, n, 0))).d


def suite_tables():
    for P in lnd_params():
        yield build_Lnd(P)
    for p, n in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2)]:
        yield build_graded(p, n)
    for p in (2, 3):
        for n in (1, 2):
            yield build_dual_cyclic(p, n)
    yield build_Lnd(FamilyParams(2, 2, 1, 2))
    yield build_Lnd(FamilyParams(3, 2, 0, 2))
    for p in (2, 3):
        for T in enumerate_dim_p_bialgebras(field(p)):
            yield T
            yield normalize_dim_p(T).table


@pytest.mark.criterion(12, "antipode is an involution on every commutative table")
def test_c12_antipode_involution():
    count = 0
    for T in suite_tables():
        if not (verify(T).is_hopf and is_commutative(T)):
            continue
        S = antipode_images(T)
        for m in range(T.N):
            image = LoopElement.zero(T.field, T.N)
            for r, c in S[m].items():
                image = image + S[r].scale(c)
            assert image == basis(T.field, T.N, m)
        count += 1
    assert count >= 40


def run_cli(capsys, *argv):
    code = cli_main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


@pytest.mark.criterion(13, "byte-exact table files and documented CLI exit codes")
def test_c13_files_and_cli(tmp_path, capsys):
    for T in list(suite_tables()) + [nc2_candidate()]:
        text = dumps(T)
        assert dumps(loads(text)) == text

    # scripted end-to-end run
    for p in (2, 3):
        for n in (1, 2, 3):
            seen = set()
            for d in range(n + 1):
                path = tmp_path / f"L{p}{n}{d}.json"
                assert run_cli(capsys, "build", "--family", "ld", "--p", p, "--n", n, "--d", d,
                               "--out", path)[0] == 0
                raw = path.read_bytes()
                assert dumps(loads(raw.decode("utf-8"))).encode("utf-8") == raw
                assert run_cli(capsys, "verify", path)[0] == 0
                code, out = run_cli(capsys, "classify", path)
                assert code == 0 and out.strip() == f"L({n},{d})"
                seen.add(out.strip())
            assert len(seen) == n + 1

    nc = tmp_path / "nc.json"
    write_table(nc2_candidate(), nc)
    assert run_cli(capsys, "verify", nc)[0] == 1
    assert run_cli(capsys, "classify", nc)[0] == 1
    assert run_cli(capsys, "build", "--family", "nc2", "--out", tmp_path / "nc2.json")[0] == 1

    bad = tmp_path / "bad.json"
    doc = json.loads((tmp_path / "L221.json").read_text())
    doc["table"][0][1] = []
    bad.write_text(json.dumps(doc))
    assert run_cli(capsys, "verify", bad)[0] == 2
    (tmp_path / "trunc.json").write_text('{"p": 2, "N": ')
    assert run_cli(capsys, "verify", tmp_path / "trunc.json")[0] == 2
    assert run_cli(capsys, "build", "--family", "ld", "--p", 2, "--n", 1, "--d", 2,
                   "--out", tmp_path / "x.json")[0] == 2
    assert run_cli(capsys, "binom", "--p", 2, "--m", 0, "--n", 5)[0] == 2
    assert run_cli(capsys, "endo", "--p", 5, "--N", 4, "--lambda", "0,1", "--invert")[0] == 1

    # the installed entry point behaves the same in a fresh process
    proc = subprocess.run([sys.executable, "-m", "loophopf", "classify", str(tmp_path / "L331.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "L(3,1)"
    proc = subprocess.run([sys.executable, "-m", "loophopf", "verify", str(bad)], capture_output=True)
    assert proc.returncode == 2
