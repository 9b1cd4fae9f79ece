import math
import numpy as np
import pytest
from crgate.functions.dicke import dicke_state
from crgate.functions.estimates import leakage_estimates, total_time
from crgate.functions.hilbert import build_space
from crgate.functions.run_protocol import (
    computational_indices,
    parse_label,
    propagate_schedule,
    run_protocol,
    run_superposition,
)
from crgate.functions.schedule import build_schedule, step_durations
from crgate.models.ProtocolStep import STEP_LABELS
from crgate.models.Schedule import Schedule
from crgate.models.Tier import Tier
from tests.params import unit_params


def rung(n: int, k: int, target_level: int, photons: int) -> np.ndarray:
    return dicke_state(build_space(n, 3), k, target_level=target_level, photons=photons).amplitudes


def expected_trace(theta: float, target: int) -> list[np.ndarray]:
    """States after each step for |1..1>|target>|0c> with n = 4 under the ideal tier."""
    c, s = math.cos(theta), math.sin(theta)

    def G(level: int, photons: int) -> np.ndarray:
        return rung(4, 0, level, photons)

    def W(level: int, photons: int) -> np.ndarray:
        return rung(4, 1, level, photons)

    if target == 0:
        return [
            -1j * W(0, 0),
            -G(0, 1),
            -G(0, 1),
            -c * G(0, 1) + 1j * s * G(2, 0),
            -c * G(0, 1) - s * G(1, 1),
            1j * c * W(0, 0) + 1j * s * W(1, 0),
            c * G(0, 0) + s * G(1, 0),
        ]
    return [
        -1j * W(1, 0),
        -G(1, 1),
        1j * G(2, 0),
        1j * c * G(2, 0) + s * G(0, 1),
        -c * G(1, 1) + s * G(0, 1),
        1j * c * W(1, 0) - 1j * s * W(0, 0),
        c * G(1, 0) - s * G(0, 0),
    ]


def test_step_durations() -> None:
    params = unit_params(4)
    durations = step_durations(4, params)
    assert list(durations) == list(STEP_LABELS)
    assert durations["i"] == pytest.approx(math.pi / (2 * math.sqrt(3) * params.Omega))
    assert durations["ii"] == pytest.approx(math.pi / (2 * math.sqrt(3) * params.g_prime))
    assert durations["iii"] == pytest.approx(math.pi / (2 * params.g_prime))
    assert durations["iv"] == pytest.approx(params.theta / params.g_dprime)
    assert durations["v"] == pytest.approx(3 * durations["iii"])
    assert durations["vi"] == durations["ii"]
    assert durations["vii"] == durations["i"]


def test_step_durations_reject() -> None:
    with pytest.raises(ValueError):
        step_durations(1, unit_params(2))
    with pytest.raises(ValueError):
        step_durations(3, unit_params(3, Omega=0.0))


def test_schedule_matches_operation_time() -> None:
    params = unit_params(5)
    schedule = build_schedule(5, params, Tier.T0)
    timing = total_time(5, params)
    assert schedule.total_duration == pytest.approx(timing.total - timing.adjustment)
    assert [step.label for step in schedule.steps] == list(STEP_LABELS)
    assert schedule.steps[0].active_systems == (0, 1, 2, 3)
    assert schedule.steps[2].active_systems == (4,)
    assert schedule.sample_dt is None


def test_schedule_tiers() -> None:
    params = unit_params(3)
    assert build_schedule(3, params, Tier.T0).steps[0].hamiltonian_tag == "two_level"
    assert build_schedule(3, params, Tier.T1).steps[6].hamiltonian_tag == "engineered"
    lab = build_schedule(3, params, Tier.T2, steps_per_cavity_period=10)
    assert lab.steps[0].sampled and lab.steps[0].hamiltonian is None
    assert not lab.steps[3].sampled
    assert lab.sample_dt == pytest.approx(2 * math.pi / params.omega_c / 10)


def test_schedule_rejects_reordered_steps() -> None:
    schedule = build_schedule(3, unit_params(3), Tier.T0)
    with pytest.raises(ValueError):
        Schedule(steps=tuple(reversed(schedule.steps)), params=schedule.params, n=3, tier=Tier.T0, space=schedule.space)


@pytest.mark.parametrize("target", [0, 1])
@pytest.mark.parametrize("theta", [0.3, math.pi / 4])
def test_ideal_tier_traces(target: int, theta: float) -> None:
    schedule = build_schedule(4, unit_params(4, theta=theta), Tier.T0)
    final, trace = run_protocol(f"111|{target}|0c", schedule)
    assert len(trace) == 7
    for step, (state, expected) in enumerate(zip(trace, expected_trace(theta, target))):
        assert np.abs(state.amplitudes - expected).max() < 1e-10, f"step {STEP_LABELS[step]}"
    assert np.allclose(final.amplitudes, trace[-1].amplitudes)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("theta", [0.0, math.pi / 4, math.pi / 2, 1.0])
def test_ideal_tier_is_exact(n: int, theta: float) -> None:
    schedule = build_schedule(n, unit_params(n, theta=theta), Tier.T0)
    indices = computational_indices(schedule.space)
    final, _ = propagate_schedule(schedule, np.eye(schedule.space.dim, dtype=complex)[:, indices])
    realized = final[indices, :]
    expected = np.eye(2 ** n, dtype=complex)
    expected[-2:, -2:] = [[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]]
    assert np.abs(realized - expected).max() < 1e-10


def test_inputs_without_all_controls_set_are_untouched() -> None:
    schedule = build_schedule(4, unit_params(4), Tier.T0)
    labels = [schedule.space.label(index) for index in computational_indices(schedule.space)]
    untouched = [label for label in labels if not label.startswith("111|")]
    assert len(untouched) == 14
    for label in untouched:
        final, _ = run_protocol(label, schedule)
        assert np.abs(final.amplitudes - parse_label(schedule.space, label).amplitudes).max() < 1e-10


def test_cavity_returns_to_vacuum() -> None:
    schedule = build_schedule(3, unit_params(3, theta=0.9), Tier.T0)
    for label in ("11|0|0c", "11|1|0c"):
        final, trace = run_protocol(label, schedule)
        assert np.allclose(final.amplitudes.reshape(-1, 3)[:, 1:], 0, atol=1e-10)
        assert np.abs(trace[1].amplitudes.reshape(-1, 3)[:, 1]).max() > 0.9


def test_protocol_is_linear() -> None:
    schedule = build_schedule(3, unit_params(3), Tier.T1)
    combined = run_superposition(schedule, {"11|0|0c": 0.6, "11|1|0c": 0.8j})
    first, _ = run_protocol("11|0|0c", schedule)
    second, _ = run_protocol("11|1|0c", schedule)
    assert np.abs(combined.amplitudes - (0.6 * first.amplitudes + 0.8j * second.amplitudes)).max() < 1e-9


@pytest.mark.parametrize("n", [3, 4])
def test_engineered_tier_stays_in_sector(n: int) -> None:
    params = unit_params(n)
    schedule = build_schedule(n, params, Tier.T1)
    bound = leakage_estimates(n, params).p2_bound
    assert bound is not None
    indices = computational_indices(schedule.space)
    for index in indices:
        final, _ = run_protocol(schedule.space.label(index), schedule)
        assert float(np.sum(np.abs(final.amplitudes[indices]) ** 2)) >= 1 - 5 * bound


@pytest.mark.parametrize("label", ["11|2|0c", "11|0|1c", "21|0|0c"])
def test_inputs_outside_sector_are_rejected(label: str) -> None:
    schedule = build_schedule(3, unit_params(3), Tier.T0)
    with pytest.raises(ValueError):
        run_protocol(label, schedule)
    final, _ = run_protocol(label, schedule, allow_outside_sector=True)
    assert final.norm() == pytest.approx(1.0)


@pytest.mark.parametrize("label", ["110|0c", "1x|0|0c", "11|0|5c", "11|0|1c|2"])
def test_malformed_labels(label: str) -> None:
    with pytest.raises(ValueError):
        parse_label(build_space(3, 3), label)
