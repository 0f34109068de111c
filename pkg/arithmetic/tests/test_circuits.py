import json
import math

import numpy as np
from django.test import SimpleTestCase

from arithmetic.circuits import (
    Circuit,
    GateKind,
    GateOp,
    build_iqft,
    build_qft,
    concat,
)
from arithmetic.core import RegisterLayout, StateVector
from arithmetic.exceptions import CircuitError
from arithmetic.simulator import execute


def dft_matrix(size):
    ak = np.outer(np.arange(size), np.arange(size))
    return np.exp(2j * np.pi * ak / size) / math.sqrt(size)


def single_register(base, size):
    return RegisterLayout.from_sizes(base, [('x', size)])


class QftStructureTests(SimpleTestCase):

    def test_single_qudit_is_one_hadamard(self):
        for d in (2, 3, 4):
            circuit = build_qft(single_register(d, 1), range(0, 1))
            self.assertEqual([op.kind for op in circuit], [GateKind.HADAMARD])

    def test_three_qubit_tally(self):
        tally = build_qft(single_register(2, 3), range(3)).tally
        self.assertEqual(tally[GateKind.HADAMARD], 3)
        self.assertEqual(tally[GateKind.CPHASE], 3)
        self.assertEqual(tally[GateKind.SWAP], 1)
        self.assertEqual(tally[GateKind.SHIFT], 0)

    def test_closed_form_tallies(self):
        for d in (2, 3, 5):
            for width in range(1, 8):
                with self.subTest(d=d, width=width):
                    layout = single_register(d, width + 2)
                    for circuit in (build_qft(layout, range(1, width + 1)),
                                    build_iqft(layout, range(1, width + 1))):
                        tally = circuit.tally
                        self.assertEqual(tally[GateKind.HADAMARD], width)
                        self.assertEqual(tally[GateKind.CPHASE], width * (width - 1) // 2)
                        self.assertEqual(tally[GateKind.SWAP], width // 2)

    def test_cphase_angles(self):
        circuit = build_qft(single_register(3, 3), range(3))
        angles = [op.theta for op in circuit if op.kind == GateKind.CPHASE]
        expected = [2 * math.pi / 9, 2 * math.pi / 27, 2 * math.pi / 9]
        np.testing.assert_allclose(angles, expected)

    def test_iqft_reverses_qft(self):
        layout = single_register(4, 3)
        qft, iqft = build_qft(layout, range(3)), build_iqft(layout, range(3))
        self.assertEqual(len(qft), len(iqft))
        for forward, backward in zip(qft.ops, reversed(iqft.ops)):
            self.assertEqual(forward.kind, backward.kind)
            self.assertEqual(forward.qudits, backward.qudits)
            if forward.kind == GateKind.CPHASE:
                self.assertEqual(backward.theta, -forward.theta)
            if forward.kind == GateKind.HADAMARD:
                self.assertTrue(backward.adjoint)
        self.assertEqual({op.label for op in iqft}, {'iqft'})

    def test_invalid_ranges(self):
        layout = single_register(2, 3)
        with self.assertRaises(CircuitError):
            build_qft(layout, range(0))
        with self.assertRaises(CircuitError):
            build_qft(layout, range(2, 5))
        with self.assertRaises(CircuitError):
            build_qft(layout, range(0, 3, 2))


class QftMatrixTests(SimpleTestCase):

    def sizes(self):
        for d in (2, 3, 4, 5):
            width = 1
            while d ** width <= 256:
                yield d, width
                width += 1

    def test_qft_equals_dft(self):
        for d, width in self.sizes():
            with self.subTest(d=d, width=width):
                matrix = build_qft(single_register(d, width), range(width)).to_matrix()
                np.testing.assert_allclose(matrix, dft_matrix(d ** width), atol=1e-9)

    def test_iqft_is_conjugate_transpose(self):
        for d, width in self.sizes():
            if d ** width > 64:
                continue
            with self.subTest(d=d, width=width):
                layout = single_register(d, width)
                qft = build_qft(layout, range(width)).to_matrix()
                iqft = build_iqft(layout, range(width)).to_matrix()
                np.testing.assert_allclose(iqft, qft.conj().T, atol=1e-9)
                np.testing.assert_allclose(iqft @ qft, np.eye(d ** width), atol=1e-9)

    def test_qft_then_iqft_restores_basis_state(self):
        rng = np.random.default_rng(11)
        for d, width in [(2, 5), (3, 3), (4, 3), (5, 2)]:
            layout = single_register(d, width)
            roundtrip = concat([build_qft(layout, range(width)), build_iqft(layout, range(width))])
            index = int(rng.integers(d ** width))
            initial = StateVector(d, width, np.eye(d ** width)[index])
            final = execute(roundtrip, initial)
            self.assertGreaterEqual(final.fidelity(initial), 1 - 1e-9)

    def test_qft_on_sub_range(self):
        layout = RegisterLayout.from_sizes(2, [('a', 1), ('b', 2)])
        matrix = build_qft(layout, range(1, 3)).to_matrix()
        np.testing.assert_allclose(matrix, np.kron(np.eye(2), dft_matrix(4)), atol=1e-9)


class ConcatTests(SimpleTestCase):

    def setUp(self):
        self.layout = single_register(3, 2)

    def test_concat_with_empty(self):
        qft = build_qft(self.layout, range(2))
        self.assertEqual(concat([qft, Circuit(self.layout)]).ops, qft.ops)

    def test_tallies_add_up(self):
        a = build_qft(self.layout, range(2))
        b = build_iqft(self.layout, range(1, 2))
        joined = concat([a, b])
        for kind in GateKind:
            self.assertEqual(joined.tally[kind], a.tally[kind] + b.tally[kind])

    def test_concat_qft_iqft_is_identity(self):
        joined = concat([build_qft(self.layout, range(2)), build_iqft(self.layout, range(2))])
        np.testing.assert_allclose(joined.to_matrix(), np.eye(9), atol=1e-9)

    def test_layout_mismatch(self):
        other = single_register(3, 3)
        with self.assertRaises(CircuitError):
            concat([build_qft(self.layout, range(2)), build_qft(other, range(2))])


class GateOpTests(SimpleTestCase):

    def test_parameter_consistency(self):
        with self.assertRaises(CircuitError):
            GateOp(GateKind.HADAMARD, (0,), theta=1.0)
        with self.assertRaises(CircuitError):
            GateOp(GateKind.CPHASE, (0, 1))
        with self.assertRaises(CircuitError):
            GateOp(GateKind.SHIFT, (0,))
        with self.assertRaises(CircuitError):
            GateOp(GateKind.SWAP, (0, 0))
        with self.assertRaises(CircuitError):
            GateOp(GateKind.SWAP, (0, 1), adjoint=True)

    def test_ops_outside_layout_rejected(self):
        layout = single_register(2, 2)
        with self.assertRaises(CircuitError):
            Circuit(layout, [GateOp(GateKind.HADAMARD, (2,))])
        with self.assertRaises(CircuitError):
            Circuit(layout, [GateOp(GateKind.SHIFT, (0,), k=2)])

    def test_shift_inverse(self):
        op = GateOp(GateKind.SHIFT, (0,), k=1)
        self.assertEqual(op.inverse(4).k, 3)


class ExportTests(SimpleTestCase):

    def test_json_shape(self):
        layout = RegisterLayout.from_sizes(3, [('anc', 1), ('a0', 1)])
        circuit = concat([
            Circuit(layout, [GateOp(GateKind.SHIFT, (1,), k=2, label='encode')]),
            build_qft(layout, range(2)),
        ])
        data = json.loads(circuit.to_json())
        self.assertEqual(data['base'], 3)
        self.assertEqual(data['registers'], [{'name': 'anc', 'size': 1}, {'name': 'a0', 'size': 1}])
        self.assertEqual(data['ops'][0], {'kind': 'SHIFT', 'qudits': [1], 'k': 2, 'label': 'encode'})
        cphase = data['ops'][2]
        self.assertEqual(cphase['kind'], 'CPHASE')
        self.assertAlmostEqual(cphase['theta'], 2 * math.pi / 9)
        self.assertNotIn('theta', data['ops'][1])

    def test_inverse_hadamard_marked_in_json(self):
        layout = RegisterLayout.from_sizes(4, [('a0', 2)])
        ops = json.loads(build_iqft(layout, range(2)).to_json())['ops']
        hadamards = [op for op in ops if op['kind'] == 'HADAMARD']
        self.assertEqual(len(hadamards), 2)
        self.assertTrue(all(op['adjoint'] is True for op in hadamards))
        self.assertTrue(all(op['label'] == 'iqft' for op in ops))
        self.assertTrue(all('adjoint' not in op for op in ops if op['kind'] != 'HADAMARD'))

    def test_qasm_for_qubits(self):
        layout = RegisterLayout.from_sizes(2, [('anc', 0), ('a0', 2)])
        circuit = concat([
            Circuit(layout, [GateOp(GateKind.SHIFT, (0,), k=1)]),
            build_qft(layout, range(2)),
        ])
        text = circuit.to_qasm(measure=layout.register('a0'))
        lines = text.splitlines()
        self.assertEqual(lines[:2], ['OPENQASM 2.0;', 'include "qelib1.inc";'])
        self.assertIn('qreg a0[2];', lines)
        self.assertNotIn('qreg anc[0];', lines)
        self.assertIn('x a0[0];', lines)
        self.assertIn('h a0[0];', lines)
        self.assertIn(f'cp({math.pi / 2!r}) a0[1],a0[0];', lines)
        self.assertIn('swap a0[0],a0[1];', lines)
        self.assertEqual(lines[-1], 'measure a0[1] -> c[1];')

    def test_qasm_rejects_qudits(self):
        with self.assertRaises(CircuitError):
            build_qft(single_register(4, 2), range(2)).to_qasm()
