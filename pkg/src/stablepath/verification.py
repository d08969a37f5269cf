"""Verification suites that certify the library's identities end to end.

Each suite runs a batch of exact checks (no tolerances anywhere) and returns
one ``CheckResult`` per check.  Four suites exist:

- ``counterexample``: the 9-vertex tree whose independence polynomial factors
  as (1+x)(1+8x+20x^2+16x^3+x^4).
- ``ratio``: a randomized corpus of small connected graphs, every root and
  several deep decisions per graph; oracle equality, the ratio identity, the
  factor-product certificate, and reconstruction by division.
- ``families``: the named graph families; brute-force oracle agreement,
  rooted-tree isomorphism claims, product identities, and real-rootedness.
- ``corollary``: claw-free generators; divisibility of the path-tree
  polynomial and its real-rootedness, plus the log-concavity/unimodality
  implication chain.

Three of the published index claims fail mechanically as stated; the
``resolve_claims`` helper determines the corrected indices by search and the
suites certify the corrected statements while asserting that the stated ones
really do fail.  See the check details for the specifics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .families import FamilyGraph, generate, fibonacci_weights
from .graph import Graph
from .independence import (
    independence_polynomial,
    independence_polynomial_bruteforce,
)
from .pathtree import (
    DeepDecision,
    divides_tree_polynomial,
    factor_decomposition,
    reconstruct_from_tree,
    sigma_dfs_tree,
    sigma_stable_path_tree,
    stable_path_tree,
    tree_indpoly,
    tree_isomorphic,
    verify_ratio_identity,
)
from .poly import (
    NotDivisibleError,
    Poly,
    X,
    exact_div,
    is_log_concave,
    is_real_rooted,
    is_unimodal,
)

# Sturm chains stay fast well past this degree, but the suites switch to the
# factorization certificate above it so runtimes remain a few seconds even
# for the largest generated trees.
DIRECT_STURM_DEGREE_CAP = 350

DEFAULT_SEED = 20260814


class VerificationError(RuntimeError):
    """An empirical claim resolution came out inconsistent."""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check."""

    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.name}" + (f"  ({self.detail})" if self.detail else "")


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)


def format_results(results: Iterable[CheckResult]) -> str:
    return "\n".join(r.line() for r in results)


class _Tally:
    """Accumulates pass/fail counts for one check, keeping the first failure."""

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.failures = 0
        self.first_failure: Optional[str] = None

    def add(self, ok: bool, context: str = "") -> None:
        self.count += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = context

    def result(self, note: str = "") -> CheckResult:
        if self.failures:
            detail = f"{self.failures}/{self.count} failed; first: {self.first_failure}"
        else:
            detail = f"{self.count} checks"
            if note:
                detail += f"; {note}"
        return CheckResult(self.name, self.failures == 0, detail)


def _mismatch(lhs: Poly, rhs: Poly) -> str:
    """Failure detail per the reporting contract: degrees and leading terms."""
    return (
        f"lhs deg {lhs.degree} lead {lhs.leading}, "
        f"rhs deg {rhs.degree} lead {rhs.leading}"
    )


# ---------------------------------------------------------------------------
# random corpus


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random connected graph on labels 1..n.

    A random recursive tree guarantees connectivity; every remaining pair
    becomes an edge with a density drawn per graph, so the corpus mixes
    near-trees with near-cliques.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    edges = [(rng.randint(1, i - 1), i) for i in range(2, n + 1)]
    present = set(edges)
    density = rng.choice((0.15, 0.3, 0.5, 0.7))
    for pair in combinations(range(1, n + 1), 2):
        if pair not in present and rng.random() < density:
            edges.append(pair)
    return Graph.from_edges(edges, vertices=range(1, n + 1))


# ---------------------------------------------------------------------------
# empirical resolution of the published index claims


@dataclass(frozen=True)
class ResolvedClaims:
    """Corrected indices for the three claims that fail as published.

    fibonacci_shift: the path-power graph on m vertices yields the Fibonacci
        tree of index m - fibonacci_shift (stated: m).
    caterpillar_exponent_offset: I(H_n) = I(H~_n) * (1+x)^(n - offset)
        (stated offset: 2).
    sunlet_index_offset: the sunlet tree from root 1 matches the centipede of
        index 2n - offset, rooted at spine vertex n - 1 (stated offset: 1,
        with no root given).
    """

    fibonacci_shift: int
    caterpillar_exponent_offset: int
    sunlet_index_offset: int

    def describe(self) -> str:
        return (
            f"fibonacci shift {self.fibonacci_shift}, "
            f"caterpillar exponent n-{self.caterpillar_exponent_offset}, "
            f"sunlet target index 2n-{self.sunlet_index_offset} at root n-1"
        )


def _resolve_fibonacci_shift(sample: range) -> int:
    shifts: Optional[set[int]] = None
    for m in sample:
        t = stable_path_tree(generate("fibonacci_tilde", m).graph, 0)
        hits = set()
        for s in range(0, m + 1):
            fib = generate("fibonacci", m - s)
            if fib.graph.n == len(t) and tree_isomorphic(
                t, stable_path_tree(fib.graph, fib.root)
            ):
                hits.add(s)
        shifts = hits if shifts is None else shifts & hits
        if not shifts:
            raise VerificationError(f"no consistent fibonacci shift up to m={m}")
    assert shifts is not None
    # vertex counts differ between consecutive indices, so the hit is unique
    if len(shifts) != 1:
        raise VerificationError(f"ambiguous fibonacci shifts {sorted(shifts)}")
    return shifts.pop()


def _resolve_caterpillar_exponent(sample: range) -> int:
    one_plus_x = Poly((1, 1))
    offsets = set()
    for n in sample:
        num = independence_polynomial(generate("caterpillar", n).graph)
        den = independence_polynomial(generate("caterpillar_tilde", n).graph)
        q = exact_div(num, den)
        if q != one_plus_x ** q.degree:
            raise VerificationError(f"I(H_{n})/I(H~_{n}) is not a power of 1+x")
        offsets.add(n - q.degree)
    if len(offsets) != 1:
        raise VerificationError(f"inconsistent caterpillar exponents {sorted(offsets)}")
    return offsets.pop()


def _resolve_sunlet_offset(sample: range) -> int:
    offsets: Optional[set[int]] = None
    for n in sample:
        t = stable_path_tree(generate("sunlet", n).graph, 1)
        hits = set()
        for off in (0, 1, 2, 3):
            m = 2 * n - off
            if m < 1 or 2 * m != len(t):
                continue
            cent = generate("centipede", m).graph
            if tree_isomorphic(t, stable_path_tree(cent, n - 1)):
                hits.add(off)
        offsets = hits if offsets is None else offsets & hits
        if not offsets:
            raise VerificationError(f"no consistent sunlet index up to n={n}")
    assert offsets is not None
    if len(offsets) != 1:
        raise VerificationError(f"ambiguous sunlet offsets {sorted(offsets)}")
    return offsets.pop()


def resolve_claims(limit: int = 7) -> ResolvedClaims:
    """Determine the corrected indices by exhaustive search on small cases.

    Raises VerificationError unless a single consistent correction exists
    across the whole sample for each claim.
    """
    return ResolvedClaims(
        fibonacci_shift=_resolve_fibonacci_shift(range(1, limit + 1)),
        caterpillar_exponent_offset=_resolve_caterpillar_exponent(range(2, limit + 1)),
        sunlet_index_offset=_resolve_sunlet_offset(range(3, limit + 1)),
    )


# ---------------------------------------------------------------------------
# real-rootedness with a factorization fallback for large trees


def _tree_real_rooted(
    g: Graph, root: int, tree_poly: Poly, chain: list[tuple[str, Poly, bool]], label: str
) -> tuple[bool, str]:
    """Certify that a stable-path tree polynomial is real-rooted.

    Below the degree cap this is a direct Sturm verdict.  Above it, the tree
    polynomial is matched exactly against I(G) times the factor product; all
    factors are small, each gets a Sturm verdict, and a product of real-rooted
    polynomials is real-rooted.
    """
    if tree_poly.degree <= DIRECT_STURM_DEGREE_CAP:
        return is_real_rooted(tree_poly), "sturm"
    base = independence_polynomial(g)
    factors = factor_decomposition(g, root)
    if factors.product_with(base) != tree_poly:
        return False, "factor product does not reproduce the tree polynomial"
    if not is_real_rooted(base):
        return False, "base polynomial fails the Sturm test"
    chain.append((f"{label} base", base, True))
    for fp, _mult in factors.factor_polynomials():
        if not is_real_rooted(fp):
            return False, f"factor of degree {fp.degree} fails the Sturm test"
        chain.append((f"{label} factor", fp, True))
    return True, "factorization into sturm-certified factors"


def _chain_result(name: str, entries: Iterable[tuple[str, Poly, bool]]) -> CheckResult:
    """Real-rooted implies log-concave implies unimodal, on certified inputs."""
    tally = _Tally(name)
    for label, p, real_rooted in entries:
        if not real_rooted or any(c < 0 for c in p.coeffs):
            continue
        lc = is_log_concave(p)
        um = is_unimodal(p)
        tally.add(lc and um, f"{label}: log-concave={lc} unimodal={um}")
    return tally.result()


# ---------------------------------------------------------------------------
# suites


def counterexample_suite() -> list[CheckResult]:
    """The 9-vertex tree: polynomial forms, division, and real-rooted factors."""
    g = generate("counterexample9").graph
    p = independence_polynomial(g)
    sum_form = Poly((1, 3, 1)) * Poly((1, 5, 6, 1)) + X * Poly((1, 2)) ** 3
    quartic = Poly((1, 8, 20, 16, 1))
    product_form = Poly((1, 1)) * quartic

    results = [
        CheckResult(
            "counterexample9/recursion-vs-bruteforce",
            independence_polynomial_bruteforce(g) == p,
            f"I = {p}",
        ),
        CheckResult(
            "counterexample9/sum-form",
            p == sum_form,
            "(1+3x+x^2)(1+5x+6x^2+x^3) + x(1+2x)^3",
        ),
        CheckResult(
            "counterexample9/product-form",
            p == product_form,
            "(1+x)(1+8x+20x^2+16x^3+x^4)",
        ),
    ]
    try:
        quotient = exact_div(p, Poly((1, 1)))
        results.append(
            CheckResult(
                "counterexample9/division-by-1+x",
                quotient == quartic,
                f"quotient {quotient}",
            )
        )
    except NotDivisibleError as exc:
        results.append(CheckResult("counterexample9/division-by-1+x", False, str(exc)))
    factor_ok = is_real_rooted(Poly((1, 1))) and is_real_rooted(quartic)
    results.append(
        CheckResult("counterexample9/factors-real-rooted", factor_ok, "1+x and the quartic")
    )
    results.append(
        _chain_result(
            "counterexample9/implication-chain",
            [("I(T9)", p, factor_ok), ("quartic factor", quartic, factor_ok)],
        )
    )
    return results


def ratio_suite(
    count: int = 500,
    size_range: tuple[int, int] = (5, 10),
    seed: int = DEFAULT_SEED,
    edge_orders: int = 3,
    api_every: int = 25,
) -> list[CheckResult]:
    """Randomized corpus: every root, label order plus random edge orders.

    Per (graph, root, decision) triple the suite checks the ratio identity,
    the factor-product certificate, and reconstruction by division, all
    exactly.  Every ``api_every``-th graph additionally goes through the
    public one-call predicates so the packaged surface is exercised too.
    """
    rng = random.Random(seed)
    oracle = _Tally("corpus/recursion-vs-bruteforce")
    label_match = _Tally("corpus/label-order-trees-coincide")
    ratio = _Tally("corpus/ratio-identity")
    factor = _Tally("corpus/factor-certificate")
    recon = _Tally("corpus/reconstruction")
    spanning = _Tally("corpus/dfs-spanning-tree")
    api = _Tally("corpus/public-predicates")

    for idx in range(count):
        n = rng.randint(*size_range)
        g = random_connected_graph(rng, n)
        tag = f"graph#{idx} n={n} m={g.m}"
        pg = independence_polynomial(g)
        oracle.add(independence_polynomial_bruteforce(g) == pg, tag)
        decisions = [DeepDecision.label_order()]
        decisions += [DeepDecision.shuffled(g, rng) for _ in range(edge_orders)]
        for u in g.vertices:
            pg_minus_u = independence_polynomial(g.without(u))
            ordered = stable_path_tree(g, u)
            for sigma in decisions:
                t = sigma_stable_path_tree(g, u, sigma)
                where = f"{tag} root={u} sigma={sigma.describe()}"
                if sigma.kind == "label-order":
                    # same path set; construction order differs (level vs depth)
                    label_match.add(set(t.paths) == set(ordered.paths), where)
                pt = tree_indpoly(t)
                lhs = pg_minus_u * pt
                rhs = pg * tree_indpoly(t, removed=(0,))
                ratio.add(lhs == rhs, f"{where}: {_mismatch(lhs, rhs)}")
                prod = factor_decomposition(g, u, sigma).product_with(pg)
                factor.add(prod == pt, f"{where}: {_mismatch(prod, pt)}")
                span = sigma_dfs_tree(g, u, sigma)
                span_ok = len(span) == g.n and sorted(
                    p[-1] for p in span.paths
                ) == list(g.vertices)
                spanning.add(span_ok, where)
                # reconstruction, reusing the tree and spanning tree at hand
                index = t.node_index()
                if any(p not in index for p in span.paths):
                    recon.add(False, f"{where}: dfs path missing from the tree")
                else:
                    removed = [index[p] for p in span.paths]
                    try:
                        rec = exact_div(pt, tree_indpoly(t, removed=removed))
                        recon.add(rec == pg, f"{where}: {_mismatch(rec, pg)}")
                    except NotDivisibleError:
                        recon.add(False, f"{where}: division leaves a remainder")
        if idx % api_every == 0:
            u = rng.choice(list(g.vertices))
            ok = (
                verify_ratio_identity(g, u)
                and divides_tree_polynomial(g, u)
                and reconstruct_from_tree(g, u) == pg
            )
            api.add(ok, f"{tag} root={u}")

    return [
        oracle.result(),
        label_match.result(),
        ratio.result(),
        factor.result(),
        recon.result(),
        spanning.result(),
        api.result(),
    ]


def _family_members(vertex_max: int) -> list[FamilyGraph]:
    """Every generated family member with at most vertex_max vertices."""
    from .families import _MIN_N, FAMILY_NAMES

    members = []
    for family in FAMILY_NAMES:
        if family == "counterexample9":
            if vertex_max >= 9:
                members.append(generate(family))
            continue
        n = _MIN_N[family]
        while True:
            fam = generate(family, n)
            if fam.graph.n > vertex_max:
                break
            members.append(fam)
            n += 1
    return members


def _iso_case(
    tally: _Tally, tree_from: FamilyGraph, target: FamilyGraph, target_root: int
) -> None:
    t = stable_path_tree(tree_from.graph, tree_from.root)
    r = stable_path_tree(target.graph, target_root)
    tally.add(
        len(t) == target.graph.n and tree_isomorphic(t, r),
        f"{tree_from.family}_{tree_from.n} vs {target.family}_{target.n} root {target_root}",
    )


def families_suite(
    oracle_vertex_max: int = 18,
    iso_nmax: int = 14,
    identity_nmax: int = 18,
    fib_product_nmax: int = 12,
    sturm_nmax: int = 18,
    fib_nmax: int = 22,
    fib_exact_nmax: int = 18,
) -> list[CheckResult]:
    """Family corpus: oracle agreement, isomorphism claims, product
    identities, and real-rootedness of every family polynomial."""
    try:
        claims = resolve_claims()
    except VerificationError as exc:
        return [CheckResult("families/claim-resolution", False, str(exc))]
    results = [CheckResult("families/claim-resolution", True, claims.describe())]
    one_plus_x = Poly((1, 1))

    oracle = _Tally("families/recursion-vs-bruteforce")
    for fam in _family_members(oracle_vertex_max):
        pg = independence_polynomial(fam.graph)
        oracle.add(
            independence_polynomial_bruteforce(fam.graph) == pg,
            f"{fam.family}_{fam.n} ({fam.graph.n} vertices)",
        )
    results.append(oracle.result(f"all members with <= {oracle_vertex_max} vertices"))

    iso = _Tally("families/tree-isomorphisms")
    for n in range(1, iso_nmax + 1):
        _iso_case(iso, generate("centipede_tilde", n), generate("centipede", n), 1)
    for n in range(2, iso_nmax + 1):
        # resolved root: the first leaf hanging off spine vertex 1
        _iso_case(iso, generate("caterpillar_tilde", n), generate("caterpillar", n), n + 1)
    for n in range(1, iso_nmax + 1):
        _iso_case(iso, generate("m_graph", n), generate("caterpillar", n), 1)
    for n in range(3, iso_nmax + 1):
        target = generate("centipede", 2 * n - claims.sunlet_index_offset)
        _iso_case(iso, generate("sunlet", n), target, n - 1)
        # the published index is one higher; the node counts already differ
        t = stable_path_tree(generate("sunlet", n).graph, 1)
        iso.add(len(t) != 2 * (2 * n - 1), f"sunlet_{n}: stated target size matches")
    for n in range(4, iso_nmax + 1):
        a = stable_path_tree(generate("apple", n).graph, 1)
        at = stable_path_tree(generate("apple_tilde", n).graph, 1)
        iso.add(tree_isomorphic(a, at), f"apple~_{n} vs apple_{n}")
    for m in range(1, iso_nmax + 1):
        fib = generate("fibonacci", m - claims.fibonacci_shift)
        _iso_case(iso, generate("fibonacci_tilde", m), fib, fib.root)
    results.append(iso.result(f"n <= {iso_nmax}; corrected indices: {claims.describe()}"))

    ident = _Tally("families/product-identities")
    for n in range(2, identity_nmax + 1):
        w = independence_polynomial(generate("centipede", n).graph)
        wt = independence_polynomial(generate("centipede_tilde", n).graph)
        expect = wt * one_plus_x ** (n // 2)
        ident.add(w == expect, f"centipede_{n}: {_mismatch(w, expect)}")
        h = independence_polynomial(generate("caterpillar", n).graph)
        ht = independence_polynomial(generate("caterpillar_tilde", n).graph)
        expect = ht * one_plus_x ** (n - claims.caterpillar_exponent_offset)
        ident.add(h == expect, f"caterpillar_{n}: {_mismatch(h, expect)}")
        # the published caterpillar exponent n-2 leaves the degrees unequal
        ident.add(h != ht * one_plus_x ** (n - 2), f"caterpillar_{n}: stated exponent holds")
    shift = claims.fibonacci_shift
    for n in range(0, fib_product_nmax + 1):
        fib = independence_polynomial(generate("fibonacci", n).graph)
        weights = fibonacci_weights(n + shift)
        prod = Poly((1,))
        for k in range(0, n + shift + 1):
            tilde = independence_polynomial(generate("fibonacci_tilde", k).graph)
            prod = prod * tilde ** weights[n + shift - k]
        ident.add(fib == prod, f"fibonacci_{n}: {_mismatch(fib, prod)}")
    results.append(ident.result(f"n <= {identity_nmax}, fibonacci products n <= {fib_product_nmax}"))

    chain_entries: list[tuple[str, Poly, bool]] = []
    direct = _Tally("families/real-rooted-direct")
    for family, lo in (
        ("centipede", 1),
        ("caterpillar", 1),
        ("m_graph", 1),
        ("sunlet", 3),
        ("apple", 4),
    ):
        for n in range(lo, sturm_nmax + 1):
            p = independence_polynomial(generate(family, n).graph)
            verdict = is_real_rooted(p)
            direct.add(verdict, f"{family}_{n} degree {p.degree}")
            chain_entries.append((f"{family}_{n}", p, verdict))
    results.append(direct.result(f"sturm verdicts, n <= {sturm_nmax}"))

    fib_rr = _Tally("families/real-rooted-fibonacci")
    for n in range(0, fib_nmax + 1):
        ok, note = _fibonacci_certificate(
            n, shift, exact_product=n <= fib_exact_nmax, chain=chain_entries
        )
        fib_rr.add(ok, f"fibonacci_{n}: {note}")
    results.append(
        fib_rr.result(
            f"n <= {fib_nmax}; exact product cross-check for n <= {fib_exact_nmax}"
        )
    )

    results.append(_chain_result("families/implication-chain", chain_entries))
    return results


def _fibonacci_certificate(
    n: int, shift: int, exact_product: bool, chain: list[tuple[str, Poly, bool]]
) -> tuple[bool, str]:
    """Real-rootedness certificate for the n-th Fibonacci tree polynomial.

    The stable-path tree of the path-power graph on n+shift vertices is
    checked node-for-node isomorphic to the Fibonacci tree, so the two share
    one independence polynomial.  That polynomial equals the base polynomial
    times the factor product; every piece is small enough for a direct Sturm
    verdict, and a product of real-rooted polynomials is real-rooted.  With
    ``exact_product`` the identity itself is re-verified against the forest
    recursion, which is feasible up to tens of thousands of vertices.
    """
    tilde = generate("fibonacci_tilde", n + shift)
    fib = generate("fibonacci", n)
    t = stable_path_tree(tilde.graph, tilde.root)
    if len(t) != fib.graph.n or not tree_isomorphic(
        t, stable_path_tree(fib.graph, fib.root)
    ):
        return False, "tree does not match the fibonacci tree"
    base = independence_polynomial(tilde.graph)
    if not is_real_rooted(base):
        return False, "base polynomial fails the Sturm test"
    chain.append((f"fibonacci_tilde_{n + shift}", base, True))
    factors = factor_decomposition(tilde.graph, tilde.root)
    for fp, _mult in factors.factor_polynomials():
        if not is_real_rooted(fp):
            return False, f"factor of degree {fp.degree} fails the Sturm test"
    note = f"{fib.graph.n}-vertex tree, {len(factors)} distinct factors"
    direct: Optional[Poly] = None
    if exact_product:
        direct = independence_polynomial(fib.graph)
        if factors.product_with(base) != direct:
            return False, "factor product differs from the forest recursion"
        chain.append((f"fibonacci_{n}", direct, True))
        note += ", product cross-checked"
    if n <= 12:
        if direct is None:
            direct = independence_polynomial(fib.graph)
        if not is_real_rooted(direct):
            return False, "direct Sturm verdict disagrees with the certificate"
        note += ", sturm cross-checked"
    return True, note


def corollary_suite(nmax: int = 18) -> list[CheckResult]:
    """Claw-free generators: divisibility and real-rootedness of the
    stable-path tree polynomial, then the implication chain."""
    try:
        claims = resolve_claims()
    except VerificationError as exc:
        return [CheckResult("corollary/claim-resolution", False, str(exc))]

    claw = _Tally("corollary/claw-free")
    divides = _Tally("corollary/tree-divisibility")
    tree_rr = _Tally("corollary/tree-real-rooted")
    graph_rr = _Tally("corollary/graph-real-rooted")
    chain_entries: list[tuple[str, Poly, bool]] = []

    cases: list[FamilyGraph] = []
    for n in range(1, nmax + 1):
        cases.append(generate("centipede_tilde", n))
    for n in range(2, nmax + 1):
        cases.append(generate("caterpillar_tilde", n))
    for n in range(4, nmax + 1):
        cases.append(generate("apple_tilde", n))
    for m in range(1, nmax + 1):
        cases.append(generate("fibonacci_tilde", m))

    for fam in cases:
        label = f"{fam.family}_{fam.n}"
        claw.add(fam.graph.is_claw_free(), label)
        t = stable_path_tree(fam.graph, fam.root)
        pt = tree_indpoly(t)
        pg = independence_polynomial(fam.graph)
        try:
            exact_div(pt, pg)
            divides.add(True, label)
        except NotDivisibleError:
            divides.add(False, f"{label}: I(G) does not divide I(T)")
        ok, method = _tree_real_rooted(fam.graph, fam.root, pt, chain_entries, label)
        tree_rr.add(ok, f"{label} ({method})")
        chain_entries.append((f"{label} tree", pt, ok))
        graph_verdict = is_real_rooted(pg)
        graph_rr.add(graph_verdict, label)
        chain_entries.append((label, pg, graph_verdict))

    return [
        CheckResult("corollary/claim-resolution", True, claims.describe()),
        claw.result(),
        divides.result(),
        tree_rr.result(),
        graph_rr.result(),
        _chain_result("corollary/implication-chain", chain_entries),
    ]


# ---------------------------------------------------------------------------
# registry

SUITE_NAMES = ("counterexample", "ratio", "families", "corollary")


def run_suite(name: str, **kwargs) -> list[CheckResult]:
    """Run one suite by name; keyword arguments forward to the suite."""
    if name == "counterexample":
        return counterexample_suite(**kwargs)
    if name == "ratio":
        return ratio_suite(**kwargs)
    if name == "families":
        return families_suite(**kwargs)
    if name == "corollary":
        return corollary_suite(**kwargs)
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")


def run_all(
    ratio_count: int = 500, seed: int = DEFAULT_SEED, n_max: Optional[int] = None
) -> list[CheckResult]:
    """Run every suite; n_max, when given, lowers the family size caps."""
    results = counterexample_suite()
    results += ratio_suite(count=ratio_count, seed=seed)
    if n_max is None:
        results += families_suite()
        results += corollary_suite()
    else:
        results += families_suite(
            oracle_vertex_max=min(18, max(n_max, 9)),
            iso_nmax=min(14, n_max),
            identity_nmax=min(18, n_max),
            fib_product_nmax=min(12, n_max),
            sturm_nmax=min(18, n_max),
            fib_nmax=min(22, n_max),
            fib_exact_nmax=min(18, n_max),
        )
        results += corollary_suite(nmax=min(18, n_max))
    return results
