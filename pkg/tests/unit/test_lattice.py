"""Unit tests for lattice loops, weights and densities."""

import math
from collections import Counter

import numpy as np
import pytest

from combinat import catalan, central_binomial, crossing_partition_row
from lattice import (
    boundary_crossings,
    chung_feller_map,
    enumerate_loops,
    histogram_rows,
    iterate_to_fixed_point,
    lattice_density_bruteforce,
    lattice_density_closed,
    loop_statistics,
    oracle_sizes,
    path_weight,
    site_for,
    time_below_steps,
    transfer_matrix_density,
)
from utils.data_types import LatticePath, LatticeSpec, Query, WeightModel
from utils.exceptions import DomainError, EnumerationBoundError, TruncationError

PARAMETERS = [0.0, 0.5, 1.0, 2.0]


def _path(text):
    return LatticePath.from_string(text)


class TestLatticePath:
    """Test LatticePath validation and serialization."""

    def test_string_round_trip(self):
        """Test U/D strings parse and serialize."""
        path = _path("UDDU")
        assert path.steps == (1, -1, -1, 1)
        assert path.to_string() == "UDDU"
        assert path.positions() == [0, 1, 0, -1, 0]

    def test_non_loop_rejected(self):
        """Test unbalanced step sequences are rejected."""
        with pytest.raises(ValueError, match="return to 0"):
            _path("UUD")

    def test_bad_symbol_rejected(self):
        """Test symbols other than U and D are rejected."""
        with pytest.raises(ValueError, match="only U and D"):
            _path("UX")


class TestLatticeSpec:
    """Test discretization parameters."""

    def test_from_total_time(self):
        """Test eps = m eta^2 and T = 2 eps n."""
        spec = LatticeSpec.from_total_time(200, 1.0, 1.0)
        assert spec.epsilon == pytest.approx(1 / 400)
        assert spec.eta == pytest.approx(0.05)
        assert spec.mass * spec.eta ** 2 == pytest.approx(spec.epsilon, rel=1e-15)

    def test_inconsistent_spacing_rejected(self):
        """Test an eps that is not m eta^2 is rejected."""
        with pytest.raises(ValueError, match="mass \\* eta"):
            LatticeSpec(n=2, mass=1.0, eta=0.1, epsilon=0.02, total_time=0.08)


class TestEnumerateLoops:
    """Test exhaustive loop enumeration."""

    def test_small_counts(self):
        """Test n = 0, 1, 2 give 1, 2, 6 loops."""
        assert [p.to_string() for p in enumerate_loops(0)] == [""]
        assert sorted(p.to_string() for p in enumerate_loops(1)) == ["DU", "UD"]
        assert len(list(enumerate_loops(2))) == 6

    def test_count_matches_central_binomial(self):
        """Test enumeration count against (2n choose n)."""
        for n in range(0, 9):
            paths = list(enumerate_loops(n))
            assert len(paths) == central_binomial(n).value
            assert len(set(paths)) == len(paths)

    def test_statistics_total_up_to_bound(self):
        """Test the vectorized enumeration covers all loops for n <= 12."""
        for n in range(0, 13):
            assert loop_statistics(n).total == central_binomial(n).value

    def test_bound_refused_eagerly(self):
        """Test n above the bound is refused before iteration starts."""
        with pytest.raises(EnumerationBoundError, match="bound is 12"):
            enumerate_loops(13)
        with pytest.raises(EnumerationBoundError):
            loop_statistics(13)

    def test_explicit_bound_override(self):
        """Test an explicit bound lowers the limit."""
        with pytest.raises(EnumerationBoundError, match="bound is 3"):
            enumerate_loops(4, bound=3)


class TestPathStatistics:
    """Test below-time and crossing counts."""

    def test_two_step_loops(self):
        """Test UD and DU."""
        assert time_below_steps(_path("UD")) == 0
        assert time_below_steps(_path("DU")) == 2
        assert boundary_crossings(_path("UD")) == 0
        assert boundary_crossings(_path("DU")) == 2

    def test_n2_histograms(self):
        """Test the histograms over the six 4-step loops."""
        below = Counter(time_below_steps(p) for p in enumerate_loops(2))
        crossings = Counter(boundary_crossings(p) for p in enumerate_loops(2))
        assert dict(below) == {0: 2, 2: 2, 4: 2}
        assert dict(crossings) == {0: 2, 2: 3, 4: 1}

    def test_vectorized_matches_per_path(self):
        """Test the matrix enumeration against per-path counting."""
        for n in range(0, 7):
            stats = loop_statistics(n)
            below = Counter(time_below_steps(p) for p in enumerate_loops(n))
            crossings = Counter(boundary_crossings(p) for p in enumerate_loops(n))
            assert histogram_rows(stats.below_time) == [(2 * k, below.get(2 * k, 0)) for k in range(n + 1)]
            assert histogram_rows(stats.crossings) == [(2 * l, crossings.get(2 * l, 0)) for l in range(n + 1)]

    def test_below_time_uniform(self):
        """Test every below-time class holds C_n loops for n <= 10."""
        for n in range(0, 11):
            stats = loop_statistics(n)
            assert stats.below_time.tolist() == [catalan(n).value] * (n + 1)

    def test_crossings_match_partition_counts(self):
        """Test the crossing histogram equals J(n, l) for n <= 10."""
        for n in range(0, 11):
            assert loop_statistics(n).crossings.tolist() == crossing_partition_row(n)

    def test_worker_count_does_not_change_result(self):
        """Test parallel enumeration is identical to serial enumeration."""
        serial = loop_statistics(10, workers=1)
        parallel = loop_statistics(10, workers=4)
        np.testing.assert_array_equal(serial.below_time, parallel.below_time)
        np.testing.assert_array_equal(serial.crossings, parallel.crossings)


class TestChungFellerMap:
    """Test the below-time reducing swap."""

    def test_non_crossing_fixed(self):
        """Test a loop staying in x >= 0 is unchanged."""
        assert chung_feller_map(_path("UUDD")) == _path("UUDD")

    def test_hand_examples(self):
        """Test swaps worked out by hand."""
        assert chung_feller_map(_path("DUUD")) == _path("UDUD")
        assert chung_feller_map(_path("UDDU")) == _path("UUDD")
        assert time_below_steps(chung_feller_map(_path("DUUD"))) == 0

    @pytest.mark.parametrize("n", range(1, 9))
    def test_bijection_between_classes(self, n):
        """Test the map sends class 2k one-to-one onto class 2(k-1)."""
        classes = {}
        for path in enumerate_loops(n):
            classes.setdefault(time_below_steps(path), set()).add(path)

        for k in range(1, n + 1):
            source = classes[2 * k]
            images = {chung_feller_map(path) for path in source}
            assert len(images) == len(source) == catalan(n).value
            assert images == classes[2 * (k - 1)]

    def test_iteration_count(self):
        """Test k applications reach a non-crossing loop from below-time 2k."""
        for path in enumerate_loops(7):
            fixed, applications = iterate_to_fixed_point(path)
            assert time_below_steps(fixed) == 0
            assert applications == time_below_steps(path) // 2


class TestPathWeight:
    """Test potential-dependent weights."""

    def test_free_weight(self):
        """Test Free weights every loop by 1."""
        spec = LatticeSpec.from_total_time(2, 1.0, 1.0)
        for path in enumerate_loops(2):
            assert path_weight(path, WeightModel.free(), spec) == 1.0

    def test_step_and_delta_weights(self):
        """Test DU under Step and Delta."""
        spec = LatticeSpec.from_total_time(1, 1.0, 0.8)
        path = _path("DU")
        assert path_weight(path, WeightModel.step(1.5), spec) == pytest.approx(math.exp(-2 * spec.epsilon * 1.5))
        assert path_weight(path, WeightModel.delta(0.7), spec) == pytest.approx(math.exp(-2 * 0.7 * spec.eta))

    def test_zero_strength_is_free(self):
        """Test Step(0) and Delta(0) weight like Free."""
        spec = LatticeSpec.from_total_time(3, 2.0, 1.0)
        for path in enumerate_loops(3):
            assert path_weight(path, WeightModel.step(0), spec) == 1.0
            assert path_weight(path, WeightModel.delta(0), spec) == 1.0

    def test_length_mismatch_rejected(self):
        """Test a path of the wrong length is rejected."""
        spec = LatticeSpec.from_total_time(2, 1.0, 1.0)
        with pytest.raises(DomainError, match="Path length"):
            path_weight(_path("UD"), WeightModel.free(), spec)

    def test_negative_step_height_rejected(self):
        """Test V < 0 is not a valid step model."""
        with pytest.raises(ValueError, match="nonnegative"):
            WeightModel.step(-1.0)


class TestDensities:
    """Test brute-force and closed-form return densities."""

    def test_n1_bruteforce(self):
        """Test n = 1 densities from the two loops UD and DU."""
        spec = LatticeSpec.from_total_time(1, 1.0, 0.6)
        assert lattice_density_bruteforce(1, WeightModel.free(), spec) == 0.5
        assert lattice_density_bruteforce(1, WeightModel.step(1.0), spec) == pytest.approx(
            (1 + math.exp(-2 * spec.epsilon)) / 4, rel=1e-15)
        assert lattice_density_bruteforce(1, WeightModel.delta(1.0), spec) == pytest.approx(
            (1 + math.exp(-2 * spec.eta)) / 4, rel=1e-15)

    def test_bruteforce_matches_literal_sum(self):
        """Test the histogram sum against a direct sum of path weights."""
        spec = LatticeSpec.from_total_time(5, 1.0, 1.0)
        for model in (WeightModel.step(1.0), WeightModel.delta(-0.5)):
            literal = math.fsum(path_weight(p, model, spec) for p in enumerate_loops(5)) / 4 ** 5
            assert lattice_density_bruteforce(5, model, spec) == pytest.approx(literal, rel=1e-14)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_closed_matches_bruteforce(self, n):
        """Test closed forms against enumeration to 1e-12 for V, a in {0, 0.5, 1, 2}."""
        spec = LatticeSpec.from_total_time(n, 1.0, 1.0)
        for strength in PARAMETERS:
            for model in (WeightModel.step(strength), WeightModel.delta(strength)):
                closed = lattice_density_closed(n, model, spec)
                brute = lattice_density_bruteforce(n, model, spec)
                assert closed == pytest.approx(brute, rel=1e-12)

    def test_step_zero_equals_free(self):
        """Test Step(0) reproduces the free density exactly."""
        for n in (1, 10, 1000, 100_000):
            spec = LatticeSpec.from_total_time(n, 1.0, 1.0)
            assert lattice_density_closed(n, WeightModel.step(0), spec) == lattice_density_closed(
                n, WeightModel.free(), spec)

    def test_negative_coupling_finite(self):
        """Test a < 0 gives a finite density above the free one."""
        spec = LatticeSpec.from_total_time(1000, 1.0, 1.0)
        free = lattice_density_closed(1000, WeightModel.free(), spec)
        attractive = lattice_density_closed(1000, WeightModel.delta(-1.0), spec)
        assert math.isfinite(attractive)
        assert attractive > free

    def test_spec_mismatch_rejected(self):
        """Test n must agree with the lattice spacing spec."""
        spec = LatticeSpec.from_total_time(4, 1.0, 1.0)
        with pytest.raises(DomainError, match="does not match"):
            lattice_density_closed(5, WeightModel.free(), spec)


class TestTransferMatrix:
    """Test the transfer-matrix oracle."""

    @pytest.mark.parametrize("n", range(1, 11))
    def test_return_density_matches_bruteforce(self, n):
        """Test x0 = x1 = 0 against enumeration."""
        spec = LatticeSpec.from_total_time(n, 1.0, 1.0)
        for model in (WeightModel.free(), WeightModel.step(1.0), WeightModel.delta(2.0), WeightModel.delta(-0.5)):
            transfer = transfer_matrix_density(n, 0, 0, model, spec, cutoff=n)
            assert transfer == pytest.approx(lattice_density_bruteforce(n, model, spec), rel=1e-12)

    def test_single_path(self):
        """Test Free from 0 to 2 in two steps is (1/2)^2."""
        spec = LatticeSpec.from_total_time(1, 1.0, 1.0)
        assert transfer_matrix_density(1, 0, 2, WeightModel.free(), spec, cutoff=3) == 0.25

    def test_symmetries(self):
        """Test endpoint exchange (Free, Delta) and reflection (Free)."""
        spec = LatticeSpec.from_total_time(12, 1.0, 1.0)
        for model in (WeightModel.free(), WeightModel.delta(1.0)):
            forward = transfer_matrix_density(12, 3, -1, model, spec, cutoff=15)
            backward = transfer_matrix_density(12, -1, 3, model, spec, cutoff=15)
            assert forward == pytest.approx(backward, rel=1e-13)

        free = WeightModel.free()
        assert transfer_matrix_density(12, 3, -1, free, spec, cutoff=15) == pytest.approx(
            transfer_matrix_density(12, -3, 1, free, spec, cutoff=15), rel=1e-13)

    def test_larger_cutoff_unchanged(self):
        """Test the minimal cutoff already gives the untruncated sum."""
        spec = LatticeSpec.from_total_time(8, 1.0, 1.0)
        model = WeightModel.step(2.0)
        assert transfer_matrix_density(8, 2, -2, model, spec, cutoff=10) == pytest.approx(
            transfer_matrix_density(8, 2, -2, model, spec, cutoff=40), rel=1e-14)

    def test_small_cutoff_refused(self):
        """Test a truncating cutoff is refused."""
        spec = LatticeSpec.from_total_time(5, 1.0, 1.0)
        with pytest.raises(TruncationError, match="truncate"):
            transfer_matrix_density(5, 0, 2, WeightModel.free(), spec, cutoff=6)


class TestOracleSizes:
    """Test lattice sizes commensurate with continuum endpoints."""

    def test_unit_query(self):
        """Test (x0, x1, T, m) = (1, -1, 1, 1) gives n = j^2 / 2."""
        assert oracle_sizes(Query(1.0, -1.0, 1.0, 1.0), unit=1.0) == [200, 800, 3200]

    def test_sites(self):
        """Test endpoints land on sites +-j."""
        spec = LatticeSpec.from_total_time(800, 1.0, 1.0)
        assert site_for(1.0, spec) == 40
        assert site_for(-1.0, spec) == -40

    def test_off_lattice_rejected(self):
        """Test an endpoint between sites is rejected."""
        spec = LatticeSpec.from_total_time(200, 1.0, 1.0)
        with pytest.raises(DomainError, match="lattice site"):
            site_for(0.33, spec)

    def test_non_multiple_of_unit_rejected(self):
        """Test endpoints must be multiples of the unit."""
        with pytest.raises(DomainError, match="multiple of unit"):
            oracle_sizes(Query(0.5, -1.0, 1.0, 1.0), unit=1.0)
