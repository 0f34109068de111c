"""
Промежуточное представление схемы и построители QFT / IQFT.

Схема это плоский список GateOp над RegisterLayout. Метки (label) у операций
нужны только для читаемого экспорта и для снимков состояния по этапам.
"""
import json
import logging
import math
from collections import Counter
from dataclasses import dataclass, replace

import numpy as np
from django.db import models

from .exceptions import CircuitError, LayoutError
from .gates import (
    apply_matrix_to_tensor,
    cphase_matrix,
    hadamard_adjoint_matrix,
    hadamard_matrix,
    shift_matrix,
    swap_matrix,
)

logger = logging.getLogger(__name__)

# Ограничение для плотной матрицы схемы (d**q)**2 элементов
MAX_MATRIX_DIMENSION = 4096


class GateKind(models.TextChoices):
    HADAMARD = 'HADAMARD', 'Адамар H_d'
    CPHASE = 'CPHASE', 'Управляемый фазовый сдвиг CP_d'
    SWAP = 'SWAP', 'Перестановка кудитов'
    SHIFT = 'SHIFT', 'Сдвиг X_d^k'


_ARITY = {
    GateKind.HADAMARD: 1,
    GateKind.CPHASE: 2,
    GateKind.SWAP: 2,
    GateKind.SHIFT: 1,
}


@dataclass(frozen=True)
class GateOp:
    kind: GateKind
    qudits: tuple
    theta: float = None
    k: int = None
    adjoint: bool = False
    label: str = ''

    def __post_init__(self):
        kind = GateKind(self.kind)
        object.__setattr__(self, 'kind', kind)
        qudits = tuple(int(q) for q in self.qudits)
        object.__setattr__(self, 'qudits', qudits)

        if len(qudits) != _ARITY[kind]:
            raise CircuitError(f'{kind} действует на {_ARITY[kind]} кудит(а), передано {qudits}')
        if len(set(qudits)) != len(qudits):
            raise CircuitError(f'Кудиты операции {kind} повторяются: {qudits}')
        if (self.theta is not None) != (kind == GateKind.CPHASE):
            raise CircuitError(f'Угол theta задаётся только для CPHASE, а не для {kind}')
        if (self.k is not None) != (kind == GateKind.SHIFT):
            raise CircuitError(f'Сдвиг k задаётся только для SHIFT, а не для {kind}')
        if self.adjoint and kind != GateKind.HADAMARD:
            raise CircuitError('Флаг adjoint допустим только для HADAMARD')

    def matrix(self, base):
        if self.kind == GateKind.HADAMARD:
            return hadamard_adjoint_matrix(base) if self.adjoint else hadamard_matrix(base)
        if self.kind == GateKind.CPHASE:
            return cphase_matrix(base, self.theta)
        if self.kind == GateKind.SHIFT:
            return shift_matrix(base, self.k)
        return swap_matrix(base)

    def inverse(self, base):
        if self.kind == GateKind.HADAMARD:
            return replace(self, adjoint=not self.adjoint)
        if self.kind == GateKind.CPHASE:
            return replace(self, theta=-self.theta)
        if self.kind == GateKind.SHIFT:
            return replace(self, k=(base - self.k) % base)
        return self

    def to_dict(self):
        data = {'kind': self.kind.value, 'qudits': list(self.qudits)}
        if self.theta is not None:
            data['theta'] = float(self.theta)
        if self.k is not None:
            data['k'] = int(self.k)
        if self.adjoint:
            data['adjoint'] = True
        if self.label:
            data['label'] = self.label
        return data


class Circuit:
    """
    Неизменяемая схема: раскладка регистров + упорядоченный список операций
    """

    def __init__(self, layout, ops=()):
        self.layout = layout
        self.ops = tuple(ops)
        for op in self.ops:
            try:
                layout.check_qudits(op.qudits)
            except LayoutError as exc:
                raise CircuitError(f'Операция {op.kind} вне раскладки: {exc}') from exc
            if op.kind == GateKind.SHIFT and not 0 <= op.k < layout.base:
                raise CircuitError(f'Сдвиг {op.k} вне диапазона [0, {layout.base})')
        self._tally = Counter(op.kind for op in self.ops)

    @property
    def base(self):
        return self.layout.base

    @property
    def tally(self):
        """Число операций каждого вида (все виды присутствуют в словаре)"""
        return {kind: self._tally.get(kind, 0) for kind in GateKind}

    def gate_count(self, include_shift=False):
        tally = self.tally
        total = tally[GateKind.HADAMARD] + tally[GateKind.CPHASE] + tally[GateKind.SWAP]
        if include_shift:
            total += tally[GateKind.SHIFT]
        return total

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __repr__(self):
        counts = ', '.join(f'{kind.value}={n}' for kind, n in self.tally.items())
        return f'Circuit(base={self.base}, qudits={self.layout.total_qudits}, {counts})'

    def relabel(self, label):
        return Circuit(self.layout, [replace(op, label=label) for op in self.ops])

    def inverse(self):
        return Circuit(self.layout, [op.inverse(self.base) for op in reversed(self.ops)])

    def segments(self):
        """Подряд идущие операции с одинаковой меткой: [(label, [ops]), ...]"""
        result = []
        for op in self.ops:
            if result and result[-1][0] == op.label:
                result[-1][1].append(op)
            else:
                result.append((op.label, [op]))
        return result

    def to_matrix(self):
        """
        Плотная унитарная матрица схемы (только для небольших схем).

        Все операции применяются разом ко всем столбцам единичной матрицы:
        последняя ось тензора это номер столбца.
        """
        dimension = self.layout.dimension
        if dimension > MAX_MATRIX_DIMENSION:
            raise CircuitError(f'Матрица {dimension}x{dimension} слишком велика')
        shape = (self.base,) * self.layout.total_qudits
        tensor = np.eye(dimension, dtype=np.complex128).reshape(shape + (dimension,))
        for op in self.ops:
            tensor = apply_matrix_to_tensor(tensor, op.matrix(self.base), op.qudits)
        return np.ascontiguousarray(tensor).reshape(dimension, dimension)

    # ==================== ЭКСПОРТ ====================

    def to_dict(self):
        return {
            'base': self.base,
            'registers': [{'name': reg.name, 'size': reg.size} for reg in self.layout.registers],
            'ops': [op.to_dict() for op in self.ops],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + '\n'

    def to_qasm(self, measure=None):
        """
        Текст в стиле OpenQASM 2 (только d = 2).

        measure: регистр, который нужно измерить в classical-регистр c.
        """
        if self.base != 2:
            raise CircuitError(f'Экспорт QASM поддерживается только для d=2, а не d={self.base}')

        names = {}
        lines = ['OPENQASM 2.0;', 'include "qelib1.inc";']
        for reg in self.layout.registers:
            if reg.size == 0:
                continue
            lines.append(f'qreg {reg.name}[{reg.size}];')
            for offset, index in enumerate(reg.qudits):
                names[index] = f'{reg.name}[{offset}]'
        if measure is not None:
            lines.append(f'creg c[{measure.size}];')

        for op in self.ops:
            args = ','.join(names[q] for q in op.qudits)
            if op.kind == GateKind.HADAMARD:
                lines.append(f'h {args};')
            elif op.kind == GateKind.CPHASE:
                lines.append(f'cp({op.theta!r}) {args};')
            elif op.kind == GateKind.SWAP:
                lines.append(f'swap {args};')
            elif op.k == 1:
                lines.append(f'x {args};')
            else:
                lines.append(f'id {args};')

        if measure is not None:
            for offset, index in enumerate(measure.qudits):
                lines.append(f'measure {names[index]} -> c[{offset}];')
        return '\n'.join(lines) + '\n'


def _target_range(layout, target_qudits):
    targets = range(target_qudits.start, target_qudits.stop) if isinstance(
        target_qudits, range) else target_qudits
    if not isinstance(targets, range) or targets.step != 1:
        raise CircuitError('Целевые кудиты QFT должны быть непрерывным диапазоном')
    if len(targets) < 1:
        raise CircuitError('Пустой диапазон кудитов для QFT')
    try:
        layout.check_qudits(targets)
    except LayoutError as exc:
        raise CircuitError(str(exc)) from exc
    return targets


def build_qft(layout, target_qudits, label='qft'):
    """
    QFT на непрерывном диапазоне кудитов (старший первым).

    Для позиции l: H_d, затем CP_d(2π/d**s) от каждого более младшего кудита
    на расстоянии s-1; в конце ⌊q'/2⌋ SWAP разворачивают порядок.
    Итоговая унитарная матрица равна матрице ДПФ размера d**q'.
    """
    targets = _target_range(layout, target_qudits)
    d = layout.base
    width = len(targets)
    ops = []
    for l in range(width):
        target = targets[l]
        ops.append(GateOp(GateKind.HADAMARD, (target,), label=label))
        for s in range(2, width - l + 1):
            control = targets[l + s - 1]
            theta = 2 * math.pi / d ** s
            ops.append(GateOp(GateKind.CPHASE, (control, target), theta=theta, label=label))
    for l in range(width // 2):
        ops.append(GateOp(GateKind.SWAP, (targets[l], targets[width - 1 - l]), label=label))

    logger.debug('QFT на %d кудитах (d=%d): %d операций', width, d, len(ops))
    return Circuit(layout, ops)


def build_iqft(layout, target_qudits, label='iqft'):
    """Обратный порядок операций QFT, углы CP со знаком минус, H_d -> H_d†"""
    return build_qft(layout, target_qudits).inverse().relabel(label)


def concat(circuits):
    circuits = list(circuits)
    if not circuits:
        raise CircuitError('Нечего объединять')
    layout = circuits[0].layout
    ops = []
    for circuit in circuits:
        if circuit.layout != layout:
            raise CircuitError('Нельзя объединить схемы с разными раскладками регистров')
        ops.extend(circuit.ops)
    return Circuit(layout, ops)
