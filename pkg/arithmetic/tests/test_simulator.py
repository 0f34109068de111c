import json

import numpy as np
from django.test import SimpleTestCase
from scipy.stats import chisquare

from arithmetic.adder import AdderSpec, build_full_adder
from arithmetic.circuits import Circuit, build_iqft, build_qft
from arithmetic.core import DigitString, RegisterLayout, StateVector
from arithmetic.exceptions import LayoutError, SimulationError
from arithmetic.simulator import (
    Histogram,
    NoiseConfig,
    execute,
    marginal_probabilities,
    measure,
    trace,
)


def qubit_case_study():
    spec = AdderSpec(2, 2, (3, 2, 1, 2))
    return spec, execute(build_full_adder(spec))


class ExecuteTests(SimpleTestCase):

    def test_empty_circuit_returns_copy(self):
        layout = RegisterLayout.from_sizes(3, [('a', 2)])
        initial = StateVector(3, 2, np.full(9, 1 / 3))
        final = execute(Circuit(layout, []), initial)
        np.testing.assert_allclose(final.amplitudes, initial.amplitudes)
        self.assertIsNot(final.amplitudes, initial.amplitudes)

    def test_qft_of_zero_is_uniform(self):
        layout = RegisterLayout.from_sizes(3, [('a', 3)])
        state = execute(build_qft(layout, range(3)))
        np.testing.assert_allclose(state.probabilities(), np.full(27, 1 / 27), atol=1e-12)

    def test_initial_state_must_match_layout(self):
        layout = RegisterLayout.from_sizes(2, [('a', 2)])
        with self.assertRaises(LayoutError):
            execute(Circuit(layout, []), StateVector(3, 2))
        with self.assertRaises(LayoutError):
            execute(Circuit(layout, []), StateVector(2, 3))


class TraceTests(SimpleTestCase):

    def test_snapshot_labels(self):
        spec = AdderSpec(2, 2, (3, 2, 1, 2))
        labels = [label for label, _ in trace(build_full_adder(spec))]
        self.assertEqual(labels, ['encode', 'qft', 'adder1', 'adder2', 'adder3', 'iqft'])

    def test_partial_sums(self):
        spec = AdderSpec(2, 2, (3, 2, 1, 2))
        layout = spec.layout()
        fourier = spec.result_qudits()
        undo = build_iqft(layout, fourier)
        snapshots = dict(trace(build_full_adder(spec)))
        for label, expected in [('adder1', 5), ('adder2', 6), ('adder3', 8)]:
            with self.subTest(label=label):
                state = execute(undo, snapshots[label])
                probs = marginal_probabilities(state, fourier)
                self.assertGreaterEqual(probs[expected], 1 - 1e-9)


class MarginalTests(SimpleTestCase):

    def test_marginal_of_product_state(self):
        state = StateVector(3, 3, np.kron(np.kron([0.6, 0.8, 0.0], [0, 0, 1]), [0, 1, 0]))
        np.testing.assert_allclose(marginal_probabilities(state, [0]), [0.36, 0.64, 0.0])
        np.testing.assert_allclose(marginal_probabilities(state, [1, 2]), np.eye(9)[2 * 3 + 1])
        np.testing.assert_allclose(marginal_probabilities(state, [2, 1]), np.eye(9)[1 * 3 + 2])

    def test_invalid_qudits(self):
        state = StateVector.zero(2, 2)
        with self.assertRaises(LayoutError):
            marginal_probabilities(state, [])
        with self.assertRaises(LayoutError):
            marginal_probabilities(state, [2])
        with self.assertRaises(LayoutError):
            marginal_probabilities(state, [1, 1])


class MeasureTests(SimpleTestCase):

    def test_deterministic_outcome(self):
        spec, state = qubit_case_study()
        histogram = measure(state, spec.result_qudits(), 1024, seed=7)
        self.assertEqual(list(histogram.counts), [DigitString.parse('1000', 2)])
        self.assertEqual(histogram.shots, 1024)
        key, count = histogram.most_common()
        self.assertEqual(str(key), '1000')
        self.assertEqual(count, 1024)

    def test_readout_noise_keeps_majority(self):
        spec, state = qubit_case_study()
        noise = NoiseConfig(0.05, seed=11)
        histogram = measure(state, spec.result_qudits(), 4096, noise=noise)
        self.assertEqual(histogram.shots, 4096)
        self.assertGreater(len(histogram.counts), 1)
        self.assertGreater(histogram.counts[DigitString.parse('1000', 2)], 2048)
        self.assertEqual(str(histogram.most_common()[0]), '1000')

    def test_same_seed_same_histogram(self):
        spec, state = qubit_case_study()
        noise = NoiseConfig(0.1, seed=99)
        first = measure(state, spec.result_qudits(), 2000, noise=noise)
        second = measure(state, spec.result_qudits(), 2000, noise=noise)
        self.assertEqual(first.to_json(), second.to_json())

    def test_sampling_matches_distribution(self):
        rng = np.random.default_rng(5)
        amplitudes = rng.normal(size=16) + 1j * rng.normal(size=16)
        state = StateVector(2, 4, amplitudes / np.linalg.norm(amplitudes))
        shots = 100_000
        histogram = measure(state, range(4), shots, seed=2024)
        observed = np.zeros(16)
        for key, count in histogram.counts.items():
            observed[key.to_integer()] = count
        probs = state.probabilities()
        expected = probs / probs.sum() * shots
        self.assertGreater(chisquare(observed, expected).pvalue, 0.001)

    def test_key_follows_requested_order(self):
        state = StateVector(2, 2, [0, 0, 1, 0])
        self.assertEqual([str(k) for k in measure(state, [0, 1], 100).counts], ['10'])
        self.assertEqual([str(k) for k in measure(state, [1, 0], 100).counts], ['01'])
        self.assertEqual([str(k) for k in measure(state, [1], 100).counts], ['0'])

    def test_repeated_qudits_rejected(self):
        state = StateVector(2, 2, [0, 0, 1, 0])
        with self.assertRaises(LayoutError):
            measure(state, [0, 0], 100)

    def test_invalid_shots(self):
        _, state = qubit_case_study()
        with self.assertRaises(SimulationError):
            measure(state, range(4), 0)


class NoiseConfigTests(SimpleTestCase):

    def test_probability_range(self):
        NoiseConfig(0.0)
        NoiseConfig(1.0)
        with self.assertRaises(SimulationError):
            NoiseConfig(-0.01)
        with self.assertRaises(SimulationError):
            NoiseConfig(1.5)

    def test_full_flip_never_returns_true_value(self):
        spec, state = qubit_case_study()
        histogram = measure(state, spec.result_qudits(), 500, noise=NoiseConfig(1.0, seed=3))
        self.assertEqual(histogram.counts.get(DigitString.parse('1000', 2), 0), 0)
        self.assertEqual(histogram.counts.get(DigitString.parse('0111', 2)), 500)


class HistogramTests(SimpleTestCase):

    def test_json_format(self):
        histogram = Histogram(3, 2, {
            DigitString.parse('21', 3): 4,
            DigitString.parse('02', 3): 6,
        })
        data = json.loads(histogram.to_json())
        self.assertEqual(data, {'base': 3, 'shots': 10, 'counts': {'02': 6, '21': 4}})
        self.assertEqual(list(data['counts']), ['02', '21'])
        self.assertTrue(histogram.to_json().endswith('}\n'))
        self.assertAlmostEqual(histogram.frequency('02'), 0.6)
        self.assertEqual(histogram.frequency('11'), 0.0)

    def test_empty_histogram_has_no_frequency(self):
        with self.assertRaises(SimulationError):
            Histogram(2, 2, {}).frequency('01')

    def test_tie_goes_to_smaller_key(self):
        histogram = Histogram(2, 2, {
            DigitString.parse('10', 2): 5,
            DigitString.parse('01', 2): 5,
        })
        self.assertEqual(str(histogram.most_common()[0]), '01')

    def test_rejects_mismatched_keys(self):
        with self.assertRaises(SimulationError):
            Histogram(2, 3, {DigitString.parse('10', 2): 1})
        with self.assertRaises(SimulationError):
            Histogram(2, 2, {DigitString.parse('10', 2): -1})
