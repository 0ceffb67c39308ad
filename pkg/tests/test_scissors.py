"""Tests for the closed-form heralded states and success probabilities."""

import math

import numpy as np
import pytest

from qscissors.fock import PhotonNumberDistribution, thermal_distribution
from qscissors.optics import BeamSplitterParams, SqueezerParams
from qscissors.scissors import (
    Placement,
    ScissorsConfig,
    SupportKind,
    UndefinedStateError,
    probability_a,
    probability_b,
    truncated_state_a,
    truncated_state_b,
)

QUARTER_PI = math.pi / 4.0


def config(s=0.5, theta=QUARTER_PI, n=1, placement=Placement.BOUT_COUT, phi=0.0):
    return ScissorsConfig(
        sq=SqueezerParams(s, phi),
        bs=BeamSplitterParams(theta),
        detected_n=n,
        placement=placement,
    )


class TestMaxFock:
    def test_canonical_thermal_point(self):
        # thermal nbar=1, s=0.5, 50:50 splitter, one detected photon
        dist = thermal_distribution(1.0, cutoff=60)
        state = truncated_state_a(dist, config())
        assert state.probability == pytest.approx(0.14029289069041112, abs=1e-15)
        assert state.dist.probs == pytest.approx(
            [0.7007195171256103, 0.2992804828743896], abs=1e-14
        )
        assert state.support is SupportKind.MAX_FOCK
        assert state.fock_bound == 1

    def test_fully_transmitting_splitter_gives_one_photon(self):
        dist = thermal_distribution(1.0, cutoff=20)
        state = truncated_state_a(dist, config(theta=0.0))
        assert np.array_equal(state.dist.probs, [0.0, 1.0])

    def test_fully_reflecting_splitter_gives_vacuum(self):
        dist = thermal_distribution(1.0, cutoff=20)
        state = truncated_state_a(dist, config(theta=math.pi / 2.0))
        assert state.dist.probs[0] == pytest.approx(1.0, abs=1e-15)
        assert state.dist.probs[1] == pytest.approx(0.0, abs=1e-15)

    def test_zero_strength_probability(self):
        # without amplification only the reflected input photon can herald
        dist = thermal_distribution(1.0, cutoff=20)
        assert probability_a(dist, config(s=0.0)) == pytest.approx(
            dist.probs[1] * 0.5, abs=1e-15
        )
        state = truncated_state_a(dist, config(s=0.0))
        assert np.array_equal(state.dist.probs, [1.0, 0.0])

    def test_zero_detections(self):
        dist = thermal_distribution(1.0, cutoff=20)
        s = 0.7
        expected = dist.probs[0] / math.cosh(s) ** 2
        assert probability_a(dist, config(s=s, n=0)) == pytest.approx(expected, abs=1e-15)

    def test_zero_probability_raises(self):
        no_single_photon = PhotonNumberDistribution(np.array([1.0, 0.0]))
        with pytest.raises(UndefinedStateError):
            truncated_state_a(no_single_photon, config(s=0.0))

    def test_insufficient_input_cutoff(self):
        short = PhotonNumberDistribution(np.array([1.0]))
        with pytest.raises(ValueError, match="up to"):
            truncated_state_a(short, config(n=2))

    def test_wrong_placement_rejected(self):
        dist = thermal_distribution(1.0, cutoff=10)
        with pytest.raises(ValueError, match="placement|splitter"):
            truncated_state_a(dist, config(placement=Placement.AOUT_COUT))

    def test_pump_phase_never_enters(self):
        dist = thermal_distribution(1.0, cutoff=20)
        reference = truncated_state_a(dist, config(phi=0.0))
        for phi in (math.pi / 3.0, math.pi, 2.4):
            other = truncated_state_a(dist, config(phi=phi))
            assert np.array_equal(reference.dist.probs, other.dist.probs)
            assert reference.probability == other.probability

    def test_heralding_probabilities_do_not_exceed_unity(self):
        dist = thermal_distribution(1.0, cutoff=40)
        total = sum(probability_a(dist, config(n=n)) for n in range(21))
        assert total <= 1.0

    def test_renormalization_reconstructs_weights(self):
        # probability times the normalized entries re-creates each raw weight
        dist = thermal_distribution(1.5, cutoff=30)
        cfg = config(s=0.8, theta=0.6, n=3)
        state = truncated_state_a(dist, cfg)
        sech2 = 1.0 / math.cosh(0.8) ** 2
        t2 = math.tanh(0.8) ** 2
        trans2 = math.cos(0.6) ** 2
        refl2 = math.sin(0.6) ** 2
        raw = np.array(
            [
                sech2 * math.comb(3, k) * dist.probs[3 - k] * t2**k * trans2**k
                * refl2 ** (3 - k)
                for k in range(4)
            ]
        )
        assert state.probability * state.dist.probs == pytest.approx(raw, rel=1e-14)

    def test_strong_amplification_limit(self):
        # tanh^2 -> 1 turns the one-photon weight into rho_0/(rho_0 + rho_1)
        dist = thermal_distribution(1.0, cutoff=20)
        limit = dist.probs[0] / (dist.probs[0] + dist.probs[1])
        state = truncated_state_a(dist, config(s=20.0))
        assert state.dist.probs[1] == pytest.approx(limit, abs=1e-12)


class TestMinFock:
    def test_vacuum_component_removed(self):
        dist = thermal_distribution(1.0, cutoff=40)
        cfg = config(placement=Placement.AOUT_COUT)
        state = truncated_state_b(dist, cfg)
        assert state.dist.probs[0] == 0.0
        assert state.support is SupportKind.MIN_FOCK
        assert state.fock_bound == 1

    def test_canonical_thermal_point(self):
        dist = thermal_distribution(1.0, cutoff=60)
        cfg = config(placement=Placement.AOUT_COUT)
        state = truncated_state_b(dist, cfg)
        assert state.probability == pytest.approx(0.07464342056830255, abs=1e-15)
        assert state.dist.probs[1:5] == pytest.approx(
            [0.5625, 0.28125, 0.10546875, 0.03515625], abs=1e-14
        )
        assert state.dist.probs.sum() == pytest.approx(1.0, abs=1e-12)
        assert 0.0 <= state.dist.tail_mass < 1e-12

    def test_zero_detections_rescales_input(self):
        # with no amplifier heralding, entries pick up |R|^(2n) only
        dist = thermal_distribution(1.0, cutoff=50)
        cfg = config(s=0.9, n=0, placement=Placement.AOUT_COUT)
        state = truncated_state_b(dist, cfg)
        expected = dist.probs * 0.5 ** np.arange(51)
        expected /= expected.sum()
        assert state.dist.probs == pytest.approx(expected, abs=1e-14)

    def test_zero_strength_gives_zero_probability(self):
        dist = thermal_distribution(1.0, cutoff=20)
        cfg = config(s=0.0, placement=Placement.AOUT_COUT)
        assert probability_b(dist, cfg) == 0.0
        with pytest.raises(UndefinedStateError):
            truncated_state_b(dist, cfg)

    def test_fully_reflecting_splitter_kills_heralding(self):
        dist = thermal_distribution(1.0, cutoff=20)
        cfg = config(theta=math.pi / 2.0, placement=Placement.AOUT_COUT)
        assert probability_b(dist, cfg) < 1e-30

    def test_explicit_output_cutoff_trims_support(self):
        dist = thermal_distribution(1.0, cutoff=40)
        cfg = config(placement=Placement.AOUT_COUT)
        state = truncated_state_b(dist, cfg, cutoff=10)
        assert state.dist.cutoff == 10
        assert state.dist.tail_mass > 0.0

    def test_output_cutoff_below_detected_count_rejected(self):
        dist = thermal_distribution(1.0, cutoff=40)
        cfg = config(n=3, placement=Placement.AOUT_COUT)
        with pytest.raises(ValueError):
            truncated_state_b(dist, cfg, cutoff=2)

    def test_pump_phase_never_enters(self):
        dist = thermal_distribution(1.0, cutoff=30)
        first = truncated_state_b(dist, config(phi=0.1, placement=Placement.AOUT_COUT))
        second = truncated_state_b(dist, config(phi=2.9, placement=Placement.AOUT_COUT))
        assert np.array_equal(first.dist.probs, second.dist.probs)
        assert first.probability == second.probability

    def test_wrong_placement_rejected(self):
        dist = thermal_distribution(1.0, cutoff=10)
        with pytest.raises(ValueError):
            truncated_state_b(dist, config(placement=Placement.BOUT_COUT))


class TestConfig:
    def test_negative_detected_count_rejected(self):
        with pytest.raises(ValueError):
            config(n=-1)
