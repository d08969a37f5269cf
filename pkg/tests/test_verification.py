import random

import pytest

from stablepath.verification import (
    CheckResult,
    all_passed,
    counterexample_suite,
    families_suite,
    format_results,
    random_connected_graph,
    ratio_suite,
    resolve_claims,
    run_all,
    run_suite,
)


class TestCheckResult:
    def test_line_format(self):
        assert CheckResult("a/b", True, "42 checks").line() == "[PASS] a/b  (42 checks)"
        assert CheckResult("a/b", False).line() == "[FAIL] a/b"

    def test_helpers(self):
        good = [CheckResult("x", True), CheckResult("y", True)]
        assert all_passed(good)
        assert not all_passed(good + [CheckResult("z", False)])
        assert format_results(good).count("\n") == 1


class TestRandomCorpus:
    def test_connected_and_sized(self):
        rng = random.Random(1)
        for _ in range(30):
            n = rng.randint(2, 10)
            g = random_connected_graph(rng, n)
            assert g.n == n
            assert g.is_connected()
            assert g.vertices == tuple(range(1, n + 1))

    def test_deterministic_for_seed(self):
        a = random_connected_graph(random.Random(7), 8)
        b = random_connected_graph(random.Random(7), 8)
        assert a == b

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            random_connected_graph(random.Random(0), 0)


class TestClaimResolution:
    def test_resolved_indices(self):
        claims = resolve_claims()
        assert claims.fibonacci_shift == 1
        assert claims.caterpillar_exponent_offset == 1
        assert claims.sunlet_index_offset == 2

    def test_describe_mentions_all_three(self):
        text = resolve_claims().describe()
        assert "fibonacci" in text and "caterpillar" in text and "sunlet" in text


class TestSuites:
    def test_counterexample_suite_passes(self):
        results = counterexample_suite()
        assert all_passed(results), format_results(results)
        assert len(results) == 6

    def test_ratio_suite_small(self):
        results = ratio_suite(count=6, seed=99)
        assert all_passed(results), format_results(results)
        names = {r.name for r in results}
        assert "corpus/ratio-identity" in names
        assert "corpus/reconstruction" in names

    def test_families_suite_small(self):
        results = families_suite(
            oracle_vertex_max=10,
            iso_nmax=6,
            identity_nmax=6,
            fib_product_nmax=4,
            sturm_nmax=6,
            fib_nmax=6,
            fib_exact_nmax=6,
        )
        assert all_passed(results), format_results(results)

    def test_corollary_suite_small(self):
        results = run_suite("corollary", nmax=8)
        assert all_passed(results), format_results(results)

    def test_run_suite_rejects_unknown(self):
        with pytest.raises(ValueError):
            run_suite("nonesuch")

    def test_run_all_scaled_down(self):
        results = run_all(ratio_count=3, n_max=5)
        assert all_passed(results), format_results(results)
        assert any(r.name.startswith("counterexample9/") for r in results)
        assert any(r.name.startswith("corpus/") for r in results)
        assert any(r.name.startswith("families/") for r in results)
        assert any(r.name.startswith("corollary/") for r in results)
