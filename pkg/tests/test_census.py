"""The census engine: seeds, search, deduplication, provenance."""

import random
from fractions import Fraction

import pytest

from support import blowdown_recovers, random_reduced_vector, replay_chops
from toricensus.blowup import BlowupVector, derived_params, reduce
from toricensus.canonical import canonicalize, congruent
from toricensus.census import (
    _census_seed,
    census_state_key,
    run_census,
    trapezoid_seeds,
)
from toricensus.lattice import random_unimodular_map
from toricensus.polygon import DelzantPolygon, edge_profile, map_polygon

F = Fraction


def vec(lam, *deltas):
    return BlowupVector(F(lam), tuple(F(d) for d in deltas))


X3_K3 = vec(1, "1/3", "1/3", "1/9")
X3_K4 = vec(1, "1/3", "1/3", "1/9", "1/27")
X3_K5 = vec(1, "1/3", "1/3", "1/9", "1/27", "1/81")
TWO_SEEDS = vec(1, "3/5", "9/26", "1/20")
NONE_A = vec(1, "9/20", "9/20", "1/10", "1/10", "1/10", "1/10")
NONE_B = vec(1, "1/5", "1/5", "1/5", "1/5")


class TestTrapezoidSeeds:
    def test_square_seed_only(self):
        p = derived_params(X3_K3)  # a = b = 2/3
        seeds = trapezoid_seeds(p)
        assert [s.ell for s in seeds] == [0]
        assert seeds[0].polygon.vertices == ((0, 0), (F(2, 3), 0), (F(2, 3), F(2, 3)), (0, F(2, 3)))

    def test_seed_count_tracks_a_over_b(self):
        p = derived_params(vec(1, "1/2", "1/4", "1/8"))  # a/b = 3/2
        assert [s.ell for s in trapezoid_seeds(p)] == [0, 1]
        p = derived_params(vec(1, "7/10", "1/10", "1/10"))  # a/b = 3, strict
        assert [s.ell for s in trapezoid_seeds(p)] == [0, 1, 2]

    def test_integral_ratio_is_excluded(self):
        from toricensus.blowup import DerivedParams

        p = DerivedParams(delta=F(1, 2), a=F(1), b=F(1))
        assert [s.ell for s in trapezoid_seeds(p)] == [0]

    def test_seed_shape(self):
        from toricensus.blowup import DerivedParams

        a, b = F(1), F(1, 3)
        for seed in trapezoid_seeds(DerivedParams(delta=F(1, 9), a=a, b=b)):
            poly = seed.polygon
            ell = seed.ell
            assert poly.area == a * b
            expected = ((0, b), (2 * ell, a + ell * b), (0, b), (-2 * ell, a - ell * b))
            assert canonicalize(edge_profile(poly)) == canonicalize(expected)


class TestStateKey:
    def test_congruent_embeddings_share_keys(self):
        p = DelzantPolygon(((0, 0), (1, 0), (1, 1), (0, 1)))
        q = map_polygon(random_unimodular_map(11, 7), p)
        sizes = (F(1, 3), F(1, 4))
        assert census_state_key(p, sizes) == census_state_key(q, sizes)

    def test_remaining_multiset_distinguishes(self):
        p = DelzantPolygon(((0, 0), (1, 0), (1, 1), (0, 1)))
        assert census_state_key(p, (F(1, 3),)) != census_state_key(p, (F(1, 4),))

    def test_ordering_of_remaining_is_ignored(self):
        p = DelzantPolygon(((0, 0), (1, 0), (1, 1), (0, 1)))
        assert census_state_key(p, (F(1, 3), F(1, 4))) == census_state_key(p, (F(1, 4), F(1, 3)))


class TestCounts:
    def test_x3_family_k3(self):
        r = run_census(X3_K3)
        assert r.count == 3
        assert r.mirror_inclusive_count == 5
        assert sum(1 for c in r.classes if not c.chiral) == 1
        assert r.bound_report.bound == 5 and r.bound_report.attained

    def test_x3_family_k4(self):
        r = run_census(X3_K4)
        assert r.count == 15
        assert r.mirror_inclusive_count == 30
        assert all(c.chiral for c in r.classes)
        assert r.bound_report.bound == 30 and r.bound_report.attained

    def test_x3_family_k5(self):
        r = run_census(X3_K5)
        assert r.count == 105
        assert r.mirror_inclusive_count == 210
        assert r.bound_report.bound == 210 and r.bound_report.attained

    def test_equal_sizes_collapse_to_one_class(self):
        r = run_census(vec(1, "1/3", "1/3", "1/3"))
        assert r.count == 1
        assert not r.classes[0].chiral

    def test_two_seeds_both_contribute(self):
        r = run_census(TWO_SEEDS)
        assert r.count == 15 == r.bound_report.bound
        assert r.bound_report.attained
        assert {c.seed_ell for c in r.classes} == {0, 1}

    def test_bound_not_attained_stays_below(self):
        r = run_census(vec(1, "1/2", "1/4", "1/8", "1/8"))
        assert r.count == 15
        assert r.bound_report.bound == 90
        assert not r.bound_report.attained


class TestNonexistenceAgreesWithSearch:
    @pytest.mark.parametrize("v", [NONE_A, NONE_B], ids=["criterion-a", "criterion-b"])
    def test_short_circuit_and_enumeration_agree(self, v):
        r = run_census(v)
        assert r.nonexistence.none_exist
        assert r.count == 0 and r.classes == ()
        # bypass the short circuit: the raw search must also come up empty
        params = derived_params(v)
        sizes = tuple(sorted((params.delta,) + v.deltas[2:]))
        for seed in trapezoid_seeds(params):
            assert _census_seed(seed.polygon.vertices, sizes, False) == {}


class TestResultShape:
    def test_classes_sorted_and_deduplicated(self):
        r = run_census(X3_K4)
        canons = [c.canonical for c in r.classes]
        assert canons == sorted(canons)
        assert len(set(canons)) == len(canons)

    def test_representative_matches_canonical(self):
        for c in run_census(X3_K3).classes:
            assert canonicalize(edge_profile(c.representative)) == c.canonical

    def test_provenance_replays_to_the_class(self):
        for v in (X3_K3, TWO_SEEDS):
            params = derived_params(v)
            for c in run_census(v).classes:
                assert congruent(replay_chops(c, params), c.representative)

    def test_blowdown_oracle_recovers_the_vector(self):
        for v in (X3_K3, X3_K4, TWO_SEEDS, vec(1, "1/2", "1/4", "1/8", "1/8")):
            for c in run_census(v).classes:
                assert blowdown_recovers(c.representative, v)

    def test_deterministic_across_runs(self):
        assert run_census(TWO_SEEDS) == run_census(TWO_SEEDS)

    def test_jobs_do_not_change_the_result(self):
        assert run_census(TWO_SEEDS, jobs=2) == run_census(TWO_SEEDS, jobs=1)
        assert run_census(X3_K3, jobs=4) == run_census(X3_K3)

    def test_single_order_finds_the_same_classes(self):
        for v in (X3_K3, X3_K4, TWO_SEEDS):
            full = {c.canonical for c in run_census(v).classes}
            one = {c.canonical for c in run_census(v, single_order=True).classes}
            assert one == full

    def test_rejects_non_reduced(self):
        with pytest.raises(ValueError, match="reduced"):
            run_census(vec(1, "1/2", "2/5", "3/10"))

    def test_rejects_bad_jobs(self):
        with pytest.raises(ValueError, match="jobs"):
            run_census(X3_K3, jobs=0)


class TestRandomVectors:
    def test_engine_invariants_on_a_random_sample(self):
        rng = random.Random(3141)
        for _ in range(15):
            v = random_reduced_vector(rng)
            r = run_census(v)
            assert r.count <= r.bound_report.bound
            if r.nonexistence.none_exist:
                assert r.count == 0
            area = (v.lam**2 - sum(d * d for d in v.deltas)) / 2
            for c in r.classes:
                assert c.representative.n == v.k + 3
                assert c.representative.area == area

    def test_blowdown_oracle_on_random_censuses(self):
        rng = random.Random(2718)
        checked = 0
        while checked < 5:
            v = random_reduced_vector(rng, k=rng.choice((3, 4)))
            r = run_census(v)
            if not r.classes:
                continue
            for c in r.classes[:10]:
                assert blowdown_recovers(c.representative, v)
            checked += 1
