"""Verification suites: exact identities and inequalities checked against
brute-force oracles.  Each check function returns a list of :class:`Check`;
mismatch counts are reported as ``lhs`` against ``0``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import numpy as np

from . import oracles
from .bounds import (
    alon_milman_bound,
    alon_milman_stability,
    boundary_excess_gamma,
    close_bound,
    derangement_input,
    hoffman_bound,
    hoffman_ratio,
    hoffman_stability,
    largeclose_bound,
)
from .config import RunConfig
from .coset_spectral import (
    distance_to_u1,
    expected_f1_squared,
    expected_g2,
    expected_g3,
    expected_h2,
    moments,
)
from .families import (
    benefraim_probe,
    cameron_ku_check,
    coset_union,
    corrupted,
    counterexample_family,
    cyclic_coset_partition,
    diaconis_bound,
    dictatorship,
    dictatorship_witness,
    edge_boundary,
    family_B,
    family_C,
    is_centred,
    is_intersecting,
    isoperimetry_report,
    random_family,
    sharpness_family,
)
from .interval import Interval
from .optim_cubic import (
    CubicProblem,
    averaging_reduction_check,
    eg3_lower_bound,
    eg3_problem,
    eg3_tight_bound,
    eg3_tight_expression,
    qprime_closed_form,
    qprime_derivative,
    qprime_objective,
    solve_qprime,
)
from .perms import Coset, PermFamily, Permutation, all_perms, cap_override, derangement_count
from .reconstruct import closed_form_F, closed_form_G, reconstruct, symmetric_difference
from .report import Check, close, compare
from .repr_spectra import (
    cayley_spectrum,
    character,
    class_size,
    dimension,
    dominates,
    partitions,
    second_largest_modulus_nontrivial,
    transposition_class,
    transposition_eigenvalue,
)
from .rng import stream

SUITE_NAMES = ("lemma-h2h3", "eg3", "hoffman", "alon-milman", "diaconis", "cameron-ku", "spectra")


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)
    results: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _zero(name: str, bad: int) -> Check:
    return compare(name, bad, 0)


# family generators -----------------------------------------------------------

def disjoint_coset_unions(n: int) -> list[PermFamily]:
    """Every nonempty union of 1-cosets sharing a row, or sharing a column."""
    out = []
    for point in range(1, n + 1):
        for r in range(1, n + 1):
            for js in itertools.combinations(range(1, n + 1), r):
                out.append(coset_union(n, [Coset(point, j) for j in js]))
                out.append(coset_union(n, [Coset(j, point) for j in js]))
    return out


def coset_union_families(n: int) -> list[PermFamily]:
    """Disjoint unions plus every union of two arbitrary distinct cosets."""
    cosets = [Coset(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    pairs = [coset_union(n, pair) for pair in itertools.combinations(cosets, 2)]
    return disjoint_coset_unions(n) + pairs


def random_families(n: int, count: int, seed: int, tag: str) -> list[PermFamily]:
    return [random_family(n, stream(seed, tag, n * 1_000_000 + k)) for k in range(count)]


# moment identities --------------------------------------------------------------

def check_moment_identities(ns, samples: int, seed: int) -> tuple[list[Check], dict]:
    checks, info = [], {}
    for n in ns:
        fams = random_families(n, samples, seed, "lemma-h2h3") + coset_union_families(n)
        bad = dict.fromkeys(("h2", "h3", "g2", "h2cf", "sumsq", "f1sq", "pyth", "g3", "mean"), 0)
        for A in fams:
            S = moments(A)
            m2, m3 = oracles.h_moments(A)
            g2, g3 = oracles.g_moments(A)
            c, e = S.c, S.eps1
            bad["h2"] += m2 * (n - 1) != S.sumsq
            bad["h3"] += m3 * (n - 1) * (n - 2) / n != S.sumcube
            bad["g2"] += g2 != expected_g2(n, c, e)
            bad["h2cf"] += m2 != expected_h2(n, c, e)
            bad["sumsq"] += S.sumsq != (1 + Fraction(1, n - 1)) * (1 - e) * c - c * c / (n - 1)
            bad["f1sq"] += oracles.f1_second_moment(A) != expected_f1_squared(A)
            bad["pyth"] += Fraction(A.size, factorial(n)) != oracles.f1_second_moment(A) + oracles.distance(A)
            bad["g3"] += g3 != expected_g3(S)
            bad["mean"] += oracles.f1_mean(A) != c / n
        info[f"n={n}"] = len(fams)
        checks += [
            _zero(f"n={n}: E[h^2](n-1) != sum b^2", bad["h2"]),
            _zero(f"n={n}: E[h^3](n-1)(n-2)/n != sum b^3", bad["h3"]),
            _zero(f"n={n}: E[g^2] != closed form in c, eps1", bad["g2"]),
            _zero(f"n={n}: E[h^2] != closed form in c, eps1", bad["h2cf"]),
            _zero(f"n={n}: sum b^2 != (1+1/(n-1))(1-eps1)c - c^2/(n-1)", bad["sumsq"]),
            _zero(f"n={n}: E[f1^2] closed form != brute force", bad["f1sq"]),
            _zero(f"n={n}: E[f^2] != E[f1^2] + E[(f-f1)^2]", bad["pyth"]),
            _zero(f"n={n}: E[g^3] != E[h^3] + 3cE[h^2] + c^3", bad["g3"]),
            _zero(f"n={n}: E[f1] != c/n", bad["mean"]),
        ]
    return checks, info


def check_closed_forms(ns) -> list[Check]:
    bad_F = bad_G = 0
    for n in ns:
        for c in range(1, n):
            for by in ("image", "preimage"):
                S = moments(dictatorship(n, c, 1, by))
                bad_F += S.sumsq != closed_form_F(n, c)
                bad_G += S.sumcube != closed_form_G(n, c)
    span = f"n in {min(ns)}..{max(ns)}"
    return [_zero(f"{span}: dictatorship sum b^2 != F(n,c)", bad_F),
            _zero(f"{span}: dictatorship sum b^3 != G(n,c)", bad_G)]


def check_projection(ns, samples: int, seed: int) -> list[Check]:
    checks = []
    for n in ns:
        unions = disjoint_coset_unions(n)
        checks.append(_zero(f"n={n}: disjoint coset unions with distance_to_u1 != 0",
                            sum(distance_to_u1(A) != 0 for A in unions)))
        fams = random_families(n, samples, seed, "projection")
        wrong = sum((distance_to_u1(A) == 0) != (dictatorship_witness(A) is not None) for A in fams)
        checks.append(_zero(f"n={n}: random families where distance = 0 disagrees with being a dictatorship", wrong))
        if n <= 5:
            orth = sum(not oracles.residual_orthogonal(A) for A in fams[:50])
            checks.append(_zero(f"n={n}: f - f1 not orthogonal to every 1-coset", orth))
            lsq = max(abs(oracles.lstsq_projection_distance(A) - float(distance_to_u1(A))) for A in fams[:50])
            checks.append(close(f"n={n}: least-squares projection distance vs exact (max abs error)", lsq, 0.0, 1e-9))
    return checks


# reconstruction -------------------------------------------------------------------

def reconstruction_trials(ns, cs, rhos, trials: int, seed: int) -> dict:
    """Fraction of exact recoveries of T_{1,1..c} from corrupted dictatorships."""
    out = {}
    for n in ns:
        for c in cs:
            base = dictatorship(n, c)
            planted = {Coset(1, j) for j in range(1, c + 1)}
            for ri, rho in enumerate(rhos):
                hits = zero_sd = 0
                for t in range(trials):
                    rng = stream(seed, "reconstruct", ((n * 10 + c) * 10 + ri) * 100_000 + t)
                    A = corrupted(base, round(rho * base.size), rng)
                    rec = reconstruct(A)
                    hits += set(rec.cosets) == planted
                    zero_sd += rec.symdiff == 0
                out[(n, c, rho)] = (Fraction(hits, trials), Fraction(zero_sd, trials))
    return out


def check_reconstruction(cfg: RunConfig) -> tuple[list[Check], dict]:
    checks = []
    ns = [n for n in (6, 7) if n <= cfg.exhaustive_cap]
    rates = reconstruction_trials(ns, (1, 2, 3), (0, Fraction(1, 100), Fraction(5, 100)), cfg.trials, cfg.seed)
    for (n, c, rho), (hit, zero) in rates.items():
        checks.append(compare(f"n={n} c={c} rho={rho}: exact recovery rate >= 95%", hit, Fraction(95, 100), ">="))
        if rho == 0:
            checks.append(compare(f"n={n} c={c}: symdiff/|A| = 0 at rho = 0 (fraction of trials)", zero, Fraction(1)))
    for n in (5, 6, 7):
        if n > cfg.exhaustive_cap:
            continue
        A = counterexample_family(n)
        rec = reconstruct(A)
        checks.append(compare(f"n={n}: counterexample cosets == {{T1,1, T2,2}}",
                              tuple(map(str, rec.cosets)), ("T1,1", "T2,2")))
        checks.append(compare(f"n={n}: counterexample |A symdiff C| == (n-2)!", rec.symdiff, factorial(n - 2)))
    # T11 at n=5 with 3 members swapped out
    A = corrupted(dictatorship(5, 1), 3, stream(cfg.seed, "reconstruct-example"))
    rec = reconstruct(A)
    checks.append(compare("n=5: T1,1 with 3 swaps -> cosets (T1,1), symdiff 6",
                          (tuple(map(str, rec.cosets)), rec.symdiff), (("T1,1",), 6)))
    ratios = [Fraction(reconstruct(counterexample_family(n)).symdiff, 2 * factorial(n - 1))
              for n in (5, 6, 7) if n <= cfg.exhaustive_cap]
    checks.append(compare("counterexample symdiff/|A| strictly decreasing over n = 5, 6, 7",
                          all(a > b for a, b in zip(ratios, ratios[1:])), True))
    return checks, {f"{k[0]},{k[1]},{k[2]}": v[0] for k, v in rates.items()}


def suite_lemma_h2h3(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("lemma-h2h3")
    ns = [n for n in (4, 5, 6) if n <= cfg.exhaustive_cap]
    checks, info = check_moment_identities(ns, cfg.samples, cfg.seed)
    res.checks += checks
    res.results["families_per_n"] = info
    res.checks += check_closed_forms([n for n in range(4, 9) if n <= cfg.exhaustive_cap])
    res.checks += check_projection([n for n in (4, 5, 6) if n <= cfg.exhaustive_cap], cfg.samples // 10, cfg.seed)
    checks, rates = check_reconstruction(cfg)
    res.checks += checks
    res.results["recovery_rates"] = rates
    return res


# the cubic problem ----------------------------------------------------------------

def random_problem(rng: np.random.Generator) -> CubicProblem:
    def q(lo, hi, den=997):
        return Fraction(int(rng.integers(lo * den, hi * den)) + 1, den)

    theta = Fraction(int(rng.integers(1, 99)), 100)
    L = q(0, 3)
    H = L + q(0, 3)
    gap2 = theta * (1 - theta) * (H - L) ** 2
    # mostly interior optima, sometimes clamped
    eta = gap2 * Fraction(int(rng.integers(0, 120)), 100)
    return CubicProblem(theta, H, L, eta)


def _poly_derivative(p: CubicProblem, delta: Fraction) -> Fraction:
    """Derivative of the objective from its expanded coefficients (no closed form used)."""
    t = p.theta

    def mul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    r = [p.H, -(1 - t)]
    s = [p.L, t]
    cube = lambda v: mul(mul(v, v), v)
    coeffs = [t * a + (1 - t) * b for a, b in zip(cube(r), cube(s))]
    return sum(k * a * delta ** (k - 1) for k, a in enumerate(coeffs) if k)


def check_qprime(count: int, seed: int) -> list[Check]:
    worst = 0.0
    closed_bad = deriv_bad = mono_bad = 0
    for k in range(count):
        rng = stream(seed, "qprime", k)
        p = random_problem(rng)
        sol = solve_qprime(p)
        worst = max(worst, abs(float(sol.objective) - oracles.qprime_numeric(p)))
        if not sol.clamped:
            cf = qprime_closed_form(p)
            ob = sol.objective if isinstance(sol.objective, Interval) else Interval(sol.objective)
            closed_bad += not (cf.lo <= ob.hi and ob.lo <= cf.hi)
        d = Fraction(int(rng.integers(-1000, 1000)), 331)
        deriv_bad += qprime_derivative(p, d) != _poly_derivative(p, d)
        top = p.theta * (1 - p.theta) * (p.H - p.L) ** 2
        prev = None
        for j in range(101):
            cur = solve_qprime(CubicProblem(p.theta, p.H, p.L, top * Fraction(j, 100) ** 2)).objective
            if prev is not None and cur > prev:
                mono_bad += 1
            prev = cur
    worked = solve_qprime(CubicProblem(Fraction(1, 2), 1, 0, Fraction(1, 16)))
    return [
        close(f"{count} random problems: max |closed form - numeric minimum|", worst, 0.0, 1e-9),
        _zero("interior optimum disagrees with the eta-expansion formula", closed_bad),
        _zero("derivative != 3 theta(1-theta)(delta-(H-L))(L+H-(1-2theta)delta)", deriv_bad),
        _zero("objective increases along an eta grid", mono_bad),
        compare("theta=1/2 H=1 L=0 eta=1/16: objective", worked.objective, Fraction(7, 32)),
        compare("theta=1/2 H=1 L=0 eta=1/16: delta", worked.delta, Fraction(1, 2)),
        compare("same: direct evaluation 1/2 (3/4)^3 + 1/2 (1/4)^3",
                qprime_objective(CubicProblem(Fraction(1, 2), 1, 0, 0), Fraction(1, 2)), Fraction(7, 32)),
    ]


def check_averaging(count: int, seed: int) -> list[Check]:
    bad = 0
    for k in range(count):
        rng = stream(seed, "averaging", k)
        theta = Fraction(int(rng.integers(1, 20)), 20)
        H, L = Fraction(int(rng.integers(5, 10))), Fraction(int(rng.integers(0, 5)))
        wl = rng.dirichlet(np.ones(4))
        wr = rng.dirichlet(np.ones(4))
        left = _pieces(theta, wl, rng)
        right = _pieces(1 - theta, wr, rng)
        bad += not averaging_reduction_check(theta, H, L, left, right)
    two_level = averaging_reduction_check(Fraction(1, 3), 2, 1, [(Fraction(1, 3), 3)], [(Fraction(2, 3), Fraction(1, 2))])
    return [_zero(f"{count} random 4+4-piece step functions where averaging fails", bad),
            compare("two-level g: averaging is an equality", two_level, True)]


def _pieces(total: Fraction, weights, rng) -> list[tuple[Fraction, Fraction]]:
    ws = [Fraction(int(round(w * 1000)) + 1) for w in weights]
    s = sum(ws)
    return [(total * w / s, Fraction(int(rng.integers(0, 50)), 7)) for w in ws]


def eg3_families(n: int, samples: int, seed: int) -> list[PermFamily]:
    fams = random_families(n, samples, seed, "lemma-h2h3") + coset_union_families(n)
    return fams


def check_eg3_chain(ns, samples: int, seed: int) -> tuple[list[Check], dict]:
    checks, info = [], {}
    for n in ns:
        bad27 = badtight = order = sumcubes = 0
        used = skipped = 0
        for A in eg3_families(n, samples, seed):
            S = moments(A)
            c = S.c
            if c == 0 or c > Fraction(n, 2):
                skipped += 1
                continue
            used += 1
            eg3 = expected_g3(S)
            lb = eg3_lower_bound(n, c, S.eps1)
            tb = eg3_tight_bound(n, c, S.eps1)
            bad27 += not lb <= eg3
            badtight += not tb <= eg3
            order += not lb <= tb
            # lower bound on sum b^3 implied by the E[g^3] bound
            sb3 = (lb - 3 * c * expected_h2(n, c, S.eps1) - c ** 3) * (n - 1) * (n - 2) / n
            sumcubes += not sb3 <= S.sumcube
        info[f"n={n}"] = {"used": used, "skipped_c_gt_n_over_2_or_empty": skipped}
        checks += [
            _zero(f"n={n}: families with E[g^3] < 27/4 lower bound", bad27),
            _zero(f"n={n}: families with E[g^3] < two-level optimum", badtight),
            _zero(f"n={n}: 27/4 bound exceeds the two-level optimum", order),
            _zero(f"n={n}: sum b^3 below the implied lower bound", sumcubes),
        ]
    return checks, info


def check_eg3_worked() -> list[Check]:
    n, c, e = 6, Fraction(2), Fraction(1, 100)
    num = oracles.qprime_numeric(eg3_problem(n, c, e))
    tight = eg3_tight_expression(n, c, e)
    return [
        close("n=6 c=2 eps1=1/100: two-level optimum vs numeric minimum", float(tight), num, 1e-9),
        compare("n=6 c=2 eps1=1/100: 27/4 bound <= two-level optimum", eg3_lower_bound(n, c, e), tight.lo, "<=",
                shown_rhs=float(tight)),
        compare("eps1=0 collapses to E[F^3] (n=6, c=1)", eg3_lower_bound(6, 1, 0), eg3_problem(6, 1, 0).EF3),
    ]


def suite_eg3(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("eg3")
    res.checks += check_qprime(100, cfg.seed)
    res.checks += check_averaging(200, cfg.seed)
    res.checks += check_eg3_worked()
    checks, info = check_eg3_chain([n for n in (4, 5, 6) if n <= cfg.exhaustive_cap], cfg.samples // 4, cfg.seed)
    res.checks += checks
    res.results["families"] = info
    return res


# Hoffman -------------------------------------------------------------------------

def greedy_intersecting(n: int, rng: np.random.Generator) -> PermFamily:
    """A random maximal intersecting family: scan S_n in random order, keep what agrees with all kept."""
    P = all_perms(n)
    kept = []
    for r in rng.permutation(P.shape[0]):
        row = P[r]
        if all((row == P[k]).any() for k in kept):
            kept.append(r)
    return PermFamily.from_ranks(n, kept)


def intersecting_samples(n: int, count: int, seed: int) -> list[PermFamily]:
    out = [family_B(n), family_C(n), coset_union(n, [Coset(1, 1)])]
    for k in range(count):
        rng = stream(seed, "intersecting", n * 1_000_000 + k)
        A = greedy_intersecting(n, rng)
        # random subfamily keeps the intersecting property
        keep = rng.random(A.size) < rng.uniform(0.3, 1.0)
        out.append(PermFamily.from_ranks(n, A.ranks()[keep]) if k % 2 else A)
    return out


def check_hoffman(cfg: RunConfig) -> list[Check]:
    checks = []
    for n in range(4, 8):
        inp = derangement_input(n, "second")
        checks.append(compare(f"n={n}: Hoffman bound on the derangement graph == (n-1)!",
                              hoffman_bound(inp), factorial(n - 1)))
    if cfg.exhaustive_cap >= 4:
        mis = oracles.maximum_independent_sets("derangement", 4)
        checks.append(compare("n=4: maximum independent set size == 6", len(mis[0]), 6))
        cosets = sum(is_centred(PermFamily.from_ranks(4, s)) is not None for s in mis)
        checks.append(compare("n=4: maximizers that are 1-cosets", cosets, len(mis)))
        checks.append(compare("n=4: number of maximizers == 16 = n^2", len(mis), 16))
    return checks


def check_deza_frankl(ns) -> list[Check]:
    checks = []
    for n in ns:
        blocks = cyclic_coset_partition(n)
        ok = all(
            all(not (a == b).any() for a, b in itertools.combinations(B.members(), 2)) for B in blocks
        )
        checks.append(compare(f"n={n}: cyclic cosets partition S_n into (n-1)! blocks", (len(blocks), sum(b.size for b in blocks)),
                              (factorial(n - 1), factorial(n))))
        checks.append(compare(f"n={n}: members of each block disagree everywhere", ok, True))
        hit = max(max((B & family_C(n)).size for B in blocks), max((B & family_B(n)).size for B in blocks))
        checks.append(compare(f"n={n}: B and C meet each block at most once", hit, 1, "<="))
    return checks


def check_hoffman_stability(n: int, count: int, seed: int) -> list[Check]:
    """distance to the relevant subspace <= the Hoffman stability bound, for intersecting families."""
    bad = bad_int = 0
    fams = intersecting_samples(n, count, seed)
    if n == 4:
        # lambda_min = -3 is shared by (3,1) and (1^4): U = U_(4) + U_(3,1) + U_(1^4)
        inp = derangement_input(4, "second")
        for A in fams:
            bad_int += not is_intersecting(A)
            dist = distance_to_u1(A) - oracles.sign_component_sq(A)
            bad += dist > hoffman_stability(inp, Fraction(A.size, 24))
        label = "U_(4)+U_(3,1)+U_(1^4)"
    else:
        for A in fams:
            bad_int += not is_intersecting(A)
            bad += distance_to_u1(A) > largeclose_bound(n, Fraction(A.size, factorial(n)))
        label = "U_1"
    return [_zero(f"n={n}: sampled families that are not intersecting", bad_int),
            _zero(f"n={n}: intersecting families farther from {label} than the stability bound ({len(fams)} tested)", bad)]


def suite_hoffman(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("hoffman")
    res.checks += check_hoffman(cfg)
    res.checks += check_deza_frankl([n for n in (4, 5) if n <= cfg.exhaustive_cap])
    count = max(1, cfg.samples // 5)
    for n in (4, 5):
        if n <= cfg.exhaustive_cap:
            res.checks += check_hoffman_stability(n, count, cfg.seed)
    inp = derangement_input(5)
    res.checks.append(compare("n=5: stability bound vanishes at the Hoffman ratio",
                              hoffman_stability(inp, hoffman_ratio(inp)), 0))
    res.checks.append(compare("stability bound at alpha = 0", hoffman_stability(inp, 0), 0))
    res.results["lambda_K"] = {n: derangement_input(n).lambda_K for n in range(5, 8)}
    return res


# Alon-Milman ---------------------------------------------------------------------

def check_alon_milman(ns, count: int, seed: int) -> list[Check]:
    checks = []
    for n in ns:
        rep = cayley_spectrum("transposition", n)
        N = factorial(n)
        bad_b = bad_s = bad_q = 0
        for k in range(count):
            A = random_family(n, stream(seed, "alon-milman", n * 1_000_000 + k))
            e = edge_boundary(A)
            bad_b += e < alon_milman_bound(rep.mu2, A.size, N)
            gamma = boundary_excess_gamma(rep.mu2, e, A.size, N)
            bad_s += distance_to_u1(A) > alon_milman_stability(rep.mu2, rep.mu_M, gamma, Fraction(A.size, N))
            bad_q += Fraction(e, N) != oracles.laplacian_quadratic_form(A)
        checks += [
            _zero(f"n={n}: e(S,S^c) below mu2 |S||S^c|/|V| ({count} random S)", bad_b),
            _zero(f"n={n}: distance to U_1 above gamma alpha/(mu_M - mu2)", bad_s),
            _zero(f"n={n}: e(S,S^c)/|V| != <1_S, L 1_S>", bad_q),
        ]
        checks.append(compare(f"n={n}: |S|=(n-1)! gives bound n! - (n-1)!",
                              alon_milman_bound(n, factorial(n - 1), N), N - factorial(n - 1)))
    if 4 in ns:
        A = random_family(4, stream(seed, "alon-milman-spectral"))
        L = np.diag(np.full(24, 6.0)) - oracles.adjacency("transposition", 4)
        w, V = np.linalg.eigh(L)
        xi = V.T @ A.mask().astype(float)
        checks.append(close("n=4: sum mu_i xi_i^2 / |V| vs e(S,S^c)/|V|",
                            float(w @ xi ** 2) / 24, edge_boundary(A) / 24, 1e-9))
    return checks


def check_close_lemma(ns) -> list[Check]:
    bad = 0
    for n in ns:
        for A in (counterexample_family(n), sharpness_family(n, 1, 2), dictatorship(n, 2)):
            rep = isoperimetry_report(A)
            bad += distance_to_u1(A) > close_bound(n, rep.delta, rep.c)
    return [_zero(f"n in {ns}: families farther from U_1 than delta n/(n-2) c/n", bad)]


def suite_alon_milman(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("alon-milman")
    res.checks += check_alon_milman([n for n in (4, 5) if n <= cfg.exhaustive_cap], cfg.samples, cfg.seed)
    res.checks += check_close_lemma([n for n in (5, 6, 7) if n <= cfg.exhaustive_cap])
    g = alon_milman_stability(5, 8, 3, Fraction(1, 5))
    res.checks.append(compare("doubling gamma doubles the stability bound", alon_milman_stability(5, 8, 6, Fraction(1, 5)), 2 * g))
    return res


# Diaconis-Shahshahani ----------------------------------------------------------------

def check_diaconis_random(ns, count: int, seed: int) -> tuple[list[Check], dict]:
    checks, info = [], {}
    for n in ns:
        N, fm1 = factorial(n), factorial(n - 1)
        rng = stream(seed, "diaconis", n)
        dens = rng.uniform(0, 1, size=(count, 1))
        masks = rng.random((count, N)) < dens
        sizes = masks.sum(axis=1).astype(object)
        e = oracles.boundary_batch(n, masks).astype(object)
        lhs, rhs = e * fm1, sizes * (N - sizes)
        bad = int(sum(l < r for l, r in zip(lhs, rhs)))
        eq = [i for i in range(count) if lhs[i] == rhs[i]]
        eq_bad = sum(dictatorship_witness(PermFamily.from_mask(n, masks[i])) is None for i in eq)
        checks.append(_zero(f"n={n}: random subsets violating |dA| >= |A|(n!-|A|)/(n-1)! ({count} tested)", bad))
        checks.append(_zero(f"n={n}: random subsets attaining equality that are not dictatorships", eq_bad))
        info[f"n={n}"] = {"tested": count, "equality_cases": len(eq)}
    return checks, info


def check_diaconis_exhaustive_n3() -> list[Check]:
    masks = np.array(list(itertools.product([False, True], repeat=6)))
    e = oracles.boundary_batch(3, masks)
    sizes = masks.sum(axis=1)
    bad = int(((e * 2) < sizes * (6 - sizes)).sum())
    eq = np.flatnonzero(e * 2 == sizes * (6 - sizes))
    eq_bad = sum(dictatorship_witness(PermFamily.from_mask(3, masks[i])) is None for i in eq)
    return [_zero("n=3: subsets violating the bound (all 64)", bad),
            _zero("n=3: equality cases that are not dictatorships", eq_bad)]


def check_equality_classification_n4() -> list[Check]:
    """All 2^16 unions of 1-cosets at n=4: equality iff disjoint union."""
    P = all_perms(4)
    C = np.array([P[:, i] == j for i in range(4) for j in range(1, 5)])  # (16, 24)
    subsets = np.array(list(itertools.product([False, True], repeat=16)))
    masks = (subsets.astype(np.int32) @ C.astype(np.int32)) > 0
    e = oracles.boundary_batch(4, masks)
    sizes = masks.sum(axis=1)
    eq = e * 6 == sizes * (24 - sizes)
    uniq = {masks[i].tobytes(): masks[i] for i in np.flatnonzero(eq)}
    wrong = sum(dictatorship_witness(PermFamily.from_mask(4, m)) is None for m in uniq.values())
    all_uniq = {masks[i].tobytes(): (masks[i], bool(eq[i])) for i in range(len(masks))}
    missed = sum(dictatorship_witness(PermFamily.from_mask(4, m)) is not None and not q for m, q in all_uniq.values())
    return [_zero("n=4: coset unions attaining equality that are not dictatorships", wrong),
            _zero("n=4: dictatorships not attaining equality", missed)]


def check_counterexample(ns) -> list[Check]:
    checks = []
    for n in ns:
        A = counterexample_family(n)
        rep = isoperimetry_report(A)
        checks.append(compare(f"n={n}: |A| == 2(n-1)!", A.size, 2 * factorial(n - 1)))
        checks.append(compare(f"n={n}: |dA| == 2n(n-2)(n-2)!", rep.boundary_edges, 2 * n * (n - 2) * factorial(n - 2)))
        checks.append(compare(f"n={n}: delta == (n-2)/(n(n-1))", rep.delta, Fraction(n - 2, n * (n - 1))))
        checks.append(compare(f"n={n}: |A minus (T11 u T22)| == (n-2)!", rep.a_minus_b, factorial(n - 2)))
        dist = min(symmetric_difference(A, [Coset(1, j) for j in js])
                   for js in itertools.combinations(range(1, n + 1), 2))
        checks.append(compare(f"n={n}: |A symdiff row dictatorship| >= (n-1)! - (n-2)!", dist,
                              factorial(n - 1) - factorial(n - 2), ">="))
    return checks


def check_dictatorship_equality(ns) -> list[Check]:
    bad = 0
    for n in ns:
        for c in range(0, n + 1):
            A = dictatorship(n, c)
            bad += edge_boundary(A) != diaconis_bound(n, A.size)
    return [_zero(f"n in {ns}: dictatorships not attaining |A|(n!-|A|)/(n-1)!", bad)]


def suite_diaconis(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("diaconis")
    cap = cfg.exhaustive_cap
    res.checks += check_diaconis_exhaustive_n3()
    checks, info = check_diaconis_random([n for n in (4, 5) if n <= cap], cfg.boundary_samples, cfg.seed)
    res.checks += checks
    res.results["random"] = info
    if cap >= 4:
        res.checks += check_equality_classification_n4()
    res.checks += check_dictatorship_equality([n for n in range(3, 8) if n <= cap])
    res.checks += check_counterexample([n for n in range(4, 8) if n <= cap])
    if cap >= 7:
        S = sharpness_family(7, 2, 4)
        rep = isoperimetry_report(S)
        res.checks.append(compare("n=7 c=2 k=4: sharpness family size == 2 * 6!", S.size, 2 * factorial(6)))
        res.checks.append(compare("n=7 c=2 k=4: boundary >= bound", rep.boundary_edges, rep.dm_bound, ">="))
        res.results["sharpness_n7_c2_k4"] = {"boundary": rep.boundary_edges, "delta": rep.delta, "a_minus_b": rep.a_minus_b}
    probes = {}
    for n, k in ((4, 5), (4, 9), (4, 14), (5, 30), (5, 50)):
        if n <= cap:
            p = benefraim_probe(n, k, stream(cfg.seed, "benefraim", n * 1000 + k), trials=10, steps=150)
            probes[f"n={n},k={k}"] = {"lex": p.lex_boundary, "best_found": p.best_other,
                                      "counterexample": p.counterexample is not None}
    res.results["lex_probe"] = probes
    return res


# Cameron-Ku and the family zoo ----------------------------------------------------------

def check_family_zoo(ns, intersect_max: int = 7) -> list[Check]:
    checks = []
    d = derangement_count
    for n in ns:
        B, C = family_B(n), family_C(n)
        checks.append(compare(f"n={n}: |B| == 3(n-2)! - 2(n-3)!", B.size, 3 * factorial(n - 2) - 2 * factorial(n - 3)))
        checks.append(compare(f"n={n}: |C| == (n-1)! - d_(n-1) - d_(n-2) + 1 (including (1 2))",
                              C.size, factorial(n - 1) - d(n - 1) - d(n - 2) + 1))
        if n <= 5:
            checks.append(compare(f"n={n}: |B| == |C|", B.size, C.size))
        else:
            checks.append(compare(f"n={n}: |B| < |C|", B.size, C.size, "<"))
        if n <= intersect_max:
            checks.append(compare(f"n={n}: B and C intersecting", (is_intersecting(B), is_intersecting(C)), (True, True)))
    return checks


def check_cameron_ku(ns) -> list[Check]:
    checks = []
    for n in ns:
        C = family_C(n)
        rep = cameron_ku_check(C)
        checks.append(compare(f"n={n}: C is not centred", rep.centred, None))
        checks.append(compare(f"n={n}: |T11 minus C| >= d_(n-1) + d_(n-2)", rep.missing, rep.obstruction, ">="))
        checks.append(compare(f"n={n}: members of T11 agreeing with (1 2) (exhaustive)", rep.agreeing_count, rep.agreeing_formula))
        tau = PermFamily.from_perms(n, [Permutation.transposition(n, 1, 2)])
        checks.append(compare(f"n={n}: C minus (1 2) is centred at T1,1", str(is_centred(C - tau)), "T1,1"))
        T = coset_union(n, [Coset(1, 1)])
        one = PermFamily.from_ranks(n, T.ranks()[:1])
        checks.append(compare(f"n={n}: T1,1 minus one element is centred", str(cameron_ku_check(T - one).centred), "T1,1"))
    return checks


def check_derangements() -> list[Check]:
    d = derangement_count
    rec = sum(d(n + 1) != n * (d(n) + d(n - 1)) for n in range(1, 12))
    brute = sum(d(n) != int((all_perms(n) != np.arange(1, n + 1)).all(axis=1).sum()) for n in range(1, 8))
    return [_zero("d_(n+1) != n (d_n + d_(n-1)) for n <= 11", rec),
            _zero("d_n != brute-force count for n <= 7", brute),
            compare("d_1, d_2, d_4", (d(1), d(2), d(4)), (0, 1, 9))]


def suite_cameron_ku(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("cameron-ku")
    res.checks += check_family_zoo(range(4, 10))
    res.checks += check_cameron_ku([n for n in (4, 5, 6) if n <= cfg.exhaustive_cap])
    res.checks += check_derangements()
    return res


# spectra ----------------------------------------------------------------------------

def check_spectra_numeric(ns) -> list[Check]:
    checks = []
    for kind in ("transposition", "derangement"):
        for n in ns:
            rep = cayley_spectrum(kind, n)
            exact = np.array([float(x) for x in rep.multiset()])
            num = np.sort(oracles.numeric_spectrum(kind, n))
            checks.append(close(f"{kind} n={n}: max |character eigenvalue - numeric|", float(np.abs(exact - num).max()), 0.0, 1e-9))
            checks.append(compare(f"{kind} n={n}: sum of multiplicities == n!", sum(r.multiplicity for r in rep.rows), factorial(n)))
    return checks


def check_laplacian_transposition(ns) -> list[Check]:
    checks = []
    for n in ns:
        rep = cayley_spectrum("transposition", n)
        at_mu2 = [r.partition for r in rep.rows if r.laplacian == rep.mu2]
        checks.append(compare(f"transposition n={n}: (mu2, mu_M)", (rep.mu2, rep.mu_M), (n, 2 * n - 2)))
        checks.append(compare(f"transposition n={n}: mu2 eigenspace indexed by (n-1,1) only", at_mu2, [(n - 1, 1)]))
    return checks


def check_derangement_min(ns) -> list[Check]:
    checks = []
    for n in ns:
        rep = cayley_spectrum("derangement", n)
        target = Fraction(-derangement_count(n), n - 1)
        checks.append(compare(f"derangement n={n}: lambda_min == -d_n/(n-1)", rep.lambda_min, target))
        checks.append(compare(f"derangement n={n}: (n-1,1) attains lambda_min", rep.eigenvalue((n - 1, 1)), target))
        checks.append(compare(f"derangement n={n}: trivial row is the degree", rep.eigenvalue((n,)), derangement_count(n)))
    return checks


def check_characters(nmax: int) -> list[Check]:
    frob = dom = dims = reg = order = 0
    for n in range(2, nmax + 1):
        parts = partitions(n)
        order += any(not a > b for a, b in zip(parts, parts[1:]))
        order += any(dominates(a, b) and a < b for a in parts for b in parts)
        dims += sum(dimension(l) ** 2 for l in parts) != factorial(n)
        dims += any(character(l, (1,) * n) != dimension(l) for l in parts)
        t = transposition_class(n)
        frob += any(transposition_eigenvalue(l) != Fraction(class_size(t) * character(l, t), dimension(l)) for l in parts)
        ev = {l: transposition_eigenvalue(l) for l in parts}
        dom += any(dominates(a, b) and ev[a] < ev[b] for a in parts for b in parts)
        if n <= 7:
            reg += any(sum(dimension(l) * character(l, mu) for l in parts) != 0 for mu in parts if mu != (1,) * n)
    return [
        _zero(f"n <= {nmax}: partitions not strictly lex-decreasing or not extending dominance", order),
        _zero(f"n <= {nmax}: sum dim^2 != n! or chi(identity) != dim", dims),
        _zero(f"n <= {nmax}: Frobenius eigenvalue != class size * chi(transposition) / dim", frob),
        _zero(f"n <= {nmax}: dominance pairs with decreasing transposition eigenvalue", dom),
        _zero("n <= 7: regular character nonzero off the identity", reg),
        compare("number of partitions of 7", len(partitions(7)), 15),
        compare("transposition eigenvalues (4), (3,1), (2,2)",
                tuple(transposition_eigenvalue(l) for l in ((4,), (3, 1), (2, 2))), (6, 2, 0)),
    ]


def suite_spectra(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("spectra")
    res.checks += check_spectra_numeric([n for n in (4, 5) if n <= min(cfg.numeric_cap, cfg.exhaustive_cap)])
    res.checks += check_laplacian_transposition(range(4, 10))
    res.checks += check_derangement_min(range(4, 8))
    res.checks += check_characters(9)
    ratios = {}
    for n in range(4, 10):
        value, ratio = second_largest_modulus_nontrivial("derangement", n)
        ratios[n] = {"lambda_K": value, "ratio_n2_over_dn": ratio}
        if n >= 5:
            res.checks.append(compare(f"derangement n={n}: |lambda_K| < d_n/(n-1)", value,
                                      Fraction(derangement_count(n), n - 1), "<"))
    res.results["lambda_K"] = ratios
    return res


SUITES = {
    "lemma-h2h3": suite_lemma_h2h3,
    "eg3": suite_eg3,
    "hoffman": suite_hoffman,
    "alon-milman": suite_alon_milman,
    "diaconis": suite_diaconis,
    "cameron-ku": suite_cameron_ku,
    "spectra": suite_spectra,
}


def _run_one(args) -> SuiteResult:
    name, cfg = args
    with cap_override(cfg.exhaustive_cap):
        return SUITES[name](cfg)


def run(name: str, cfg: RunConfig) -> list[SuiteResult]:
    """Run one suite, or all of them (``name="all"``), in a fixed order."""
    if name == "all":
        names = list(SUITE_NAMES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES + ('all',))}")
    jobs = cfg.jobs if cfg.jobs is not None else 1
    with cap_override(cfg.exhaustive_cap):
        if jobs > 1 and len(names) > 1:
            with ProcessPoolExecutor(max_workers=min(jobs, len(names))) as pool:
                return list(pool.map(_run_one, [(n, cfg) for n in names]))
        return [SUITES[n](cfg) for n in names]
