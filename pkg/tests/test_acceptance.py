"""The nine acceptance criteria, each run exactly and reported as one PASS/FAIL line."""

import random
import time

import pytest

from capelli.cases import (
    capelli_Cd,
    iota_Xd,
    lemma_double_star_holds,
    lemma_shift_offsets,
    lemma_star_holds,
    verify_h_invariance,
    verify_identity,
)
from capelli.context import CaseContext
from capelli.harmonics import intersection_decomposition, ta_component_dim, verify_annihilation
from capelli.nclinalg import (
    cauchy_binet_check,
    index_sets,
    ishikawa_wakayama_check,
    ishikawa_wakayama_general_check,
    symbolic_matrix,
    symmetric_symbolic_matrix,
)
from capelli.partitions import (
    lr_product,
    pad,
    partitions,
    partitions_up_to,
    schur_product_oracle,
    ssyt_count,
    weyl_dim,
)
from capelli.pbw import GLGen, PBWElement, straighten_word
from capelli.poly import symbol
from capelli.weyl import weyl_apply, weyl_equal, weyl_mul
from conftest import random_poly, random_weyl_op


@pytest.fixture
def report(capsys):
    def emit(number, title, failures, checked, elapsed, budget):
        ok = not failures and elapsed <= budget
        detail = f"{checked} checks, {len(failures)} failed, {elapsed:.1f}s of {budget}s"
        if failures:
            detail += f"; first failure: {failures[0]}"
        elif elapsed > budget:
            detail += "; over the time budget"
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})")
        assert ok, detail

    return emit


def real_grid():
    return [CaseContext.real(k, n) for k in (1, 2, 3) for n in (1, 2, 3)]


def complex_grid():
    return [CaseContext.complex(p, q, n) for p in (1, 2) for q in (1, 2) for n in (1, 2)]


def quaternionic_grid():
    return [CaseContext.quaternionic(k, n) for k in (2, 3, 4) for n in (1, 2)]


def admissible(ctx):
    return range(1, min(ctx.rank, ctx.n) + 1)


def up_to_rank(ctx):
    # includes the trivial regime n < d, where both sides vanish
    return range(1, ctx.rank + 1)


def test_criterion_1_capelli_real(report):
    start = time.perf_counter()
    failures, checked = [], 0
    for ctx in real_grid():
        for d in admissible(ctx):
            checked += 1
            if not verify_identity(ctx, d)["holds"]:
                failures.append(f"{ctx.label()},d={d}")
    for k, n in [(2, 1), (3, 1), (3, 2)]:
        ctx = CaseContext.real(k, n)
        for d in range(n + 1, k + 1):
            checked += 1
            if not (iota_Xd(ctx, d).is_zero() and capelli_Cd(ctx, d).is_zero()):
                failures.append(f"trivial regime {ctx.label()},d={d}")
    report(1, "Capelli identity, case R", failures, checked, time.perf_counter() - start, 60)


def test_criterion_2_capelli_complex(report):
    start = time.perf_counter()
    failures, checked = [], 0
    for ctx in complex_grid():
        for d in up_to_rank(ctx):
            checked += 1
            if not verify_identity(ctx, d)["holds"]:
                failures.append(f"{ctx.label()},d={d}")
    report(2, "Capelli identity, case C", failures, checked, time.perf_counter() - start, 30)


def test_criterion_3_capelli_quaternionic(report):
    start = time.perf_counter()
    failures, checked = [], 0
    for ctx in quaternionic_grid():
        for d in admissible(ctx):
            checked += 1
            if not verify_identity(ctx, d)["holds"]:
                failures.append(f"{ctx.label()},d={d}")
    report(3, "Capelli identity, case H", failures, checked, time.perf_counter() - start, 120)


def test_criterion_4_h_invariance(report):
    start = time.perf_counter()
    failures, checked = [], 0
    for ctx in real_grid() + complex_grid() + quaternionic_grid():
        for d in up_to_rank(ctx):
            r = verify_h_invariance(ctx, d)
            checked += 2 * r["basis_size"]
            if not r["holds"]:
                failures.append(f"{ctx.label()},d={d}: {r['pbw_failures'] + r['omega_failures']}")
    report(4, "h-invariance of the Capelli elements", failures, checked, time.perf_counter() - start, 120)


def test_criterion_5_lemma_suite(report):
    start = time.perf_counter()
    failures, checked = [], 0
    rng = random.Random(5)
    for t in range(50):
        d, N = rng.randint(1, 3), rng.randint(1, 4)
        A = [[symbol("a", i, j) * rng.randint(-3, 3) + rng.randint(-2, 2) for j in range(1, N + 1)] for i in range(1, d + 1)]
        B = [[symbol("b", i, j) * rng.randint(-3, 3) + rng.randint(-2, 2) for j in range(1, d + 1)] for i in range(1, N + 1)]
        checked += 1
        if not cauchy_binet_check(A, B):
            failures.append(f"Cauchy-Binet instance {t} (d={d}, N={N})")
    for n in (1, 2):
        for d in range(1, n + 1):
            A, B = symbolic_matrix("a", n, 2 * d), symbolic_matrix("b", n, 2 * d)
            X = symmetric_symbolic_matrix("z", n)
            checked += 2
            if not ishikawa_wakayama_check(A, B):
                failures.append(f"minor Pfaffian identity, n={n}, d={d}")
            if not ishikawa_wakayama_general_check(A, B, X):
                failures.append(f"minor Pfaffian identity with symmetric X, n={n}, d={d}")
    for k in (1, 2, 3):
        for n in (1, 2, 3):
            for d in range(1, min(k, n) + 1):
                for S in index_sets(n, d):
                    for T in index_sets(n, d):
                        checked += 1
                        if not lemma_star_holds(k, n, d, S, T):
                            failures.append(f"determinant lemma k={k},n={n},d={d},S={S},T={T}")
                        if d > 2:
                            continue
                        for I in index_sets(k, d):
                            for c in lemma_shift_offsets(k):
                                checked += 1
                                u = lambda b, c=c, d=d: d - b + c
                                if not lemma_double_star_holds(k, n, d, S, T, I, u):
                                    failures.append(f"commutation lemma k={k},n={n},S={S},T={T},I={I},c={c}")
    report(5, "lemma suite", failures, checked, time.perf_counter() - start, 60)


def harmonics_grid():
    grid = [((l,) if l else (), n, 1) for n in (1, 2, 3, 4) for l in range(5)]
    grid += [(lam, n, 2) for n in (2, 3, 4) for lam in ((1, 0), (1, 1), (2, 0), (2, 1), (2, 2))]
    return grid


def test_criterion_6_decomposition(report):
    start = time.perf_counter()
    failures, checked = [], 0
    for lam, n, k in harmonics_grid():
        r = intersection_decomposition(lam, n, k)
        checked += 1
        if not r["holds"]:
            failures.append(f"lambda={lam},n={n},k={k}: {r['computed_dim']} vs {r['predicted_dim']}")
    anchors = [((1,), 1, 1, 2), ((2,), 2, 1, 9)]
    for lam, n, k, dim in anchors:
        checked += 1
        if intersection_decomposition(lam, n, k)["computed_dim"] != dim:
            failures.append(f"anchor lambda={lam},n={n},k={k} should have dimension {dim}")
    report(6, "decomposition of U cap V", failures, checked, time.perf_counter() - start, 300)


def test_criterion_7_annihilation(report):
    start = time.perf_counter()
    failures, checked = [], 0
    for lam, n, k in harmonics_grid():
        r = verify_annihilation(lam, n, k)
        checked += r["basis_size"] * len(r["degrees"])
        if not r["holds"]:
            failures.append(f"lambda={lam},n={n},k={k}: {r['failures'][:3]}")
    report(7, "annihilation by the Capelli elements", failures, checked, time.perf_counter() - start, 300)


def test_criterion_8_tensor_product_algebra(report):
    start = time.perf_counter()
    failures, checked = [], 0
    p2 = [p for s in range(5) for p in partitions(s, 2)]
    for lam in p2:
        for mu in p2:
            for nu in p2:
                if sum(mu) + sum(nu) != sum(lam):
                    continue
                r = ta_component_dim(mu, nu, lam, 4, 2)
                checked += 1
                if not r["holds"]:
                    failures.append(f"mu={mu},nu={nu},lambda={lam}: dim {r['dim']} vs c={r['expected']}, xi {r['xi']}")
    report(8, "tensor product algebra components", failures, checked, time.perf_counter() - start, 120)


def test_criterion_9_engine_properties(report):
    start = time.perf_counter()
    failures, checked = [], 0
    rng = random.Random(9)
    for t in range(200):
        a, b, c = (random_weyl_op(rng) for _ in range(3))
        f = random_poly(rng)
        checked += 2
        if not weyl_equal(weyl_mul(weyl_mul(a, b), c), weyl_mul(a, weyl_mul(b, c))):
            failures.append(f"Weyl associativity, triple {t}")
        if weyl_apply(weyl_mul(a, b), f) != weyl_apply(a, weyl_apply(b, f)):
            failures.append(f"Weyl action compatibility, triple {t}")
    for t in range(100):
        m, copies = rng.choice([(2, 1), (3, 1), (2, 2), (4, 1)])
        word = [
            GLGen(rng.randint(1, copies), rng.randint(1, m), rng.randint(1, m))
            for _ in range(rng.randint(0, 5))
        ]
        ref = PBWElement({tuple(word): 1}, m, copies)
        for strategy in ("leftmost", "rightmost", "random"):
            checked += 1
            got = straighten_word(word, strategy, seed=t)
            if PBWElement._raw({k: v for k, v in got.items() if v}, m, copies) != ref:
                failures.append(f"PBW confluence, word {t}, {strategy}")
    parts = partitions_up_to(6)
    for mu in parts:
        for nu in parts:
            if sum(mu) + sum(nu) > 6:
                continue
            checked += 1
            if lr_product(mu, nu) != schur_product_oracle(mu, nu, len(mu) + len(nu)):
                failures.append(f"LR vs Schur, mu={mu}, nu={nu}")
    for lam in parts:
        for n in range(max(len(lam), 1), 7):
            checked += 1
            if weyl_dim(pad(lam, n), n) != ssyt_count(lam, n):
                failures.append(f"weyl_dim vs tableaux, lambda={lam}, n={n}")
    report(9, "engine property suites", failures, checked, time.perf_counter() - start, 60)
