"""
Исполнение схем и измерения.

Генератор случайных чисел: numpy.random.default_rng(seed), то есть PCG64
со 128-битным состоянием. Одинаковые (состояние, seed, shots, шум) дают
одинаковую гистограмму.
"""
import json
import logging
from dataclasses import dataclass, field

import numpy as np

from .circuits import Circuit, GateKind
from .core import DigitString, StateVector
from .exceptions import LayoutError, SimulationError
from .gates import apply_gate, swap_gate_apply

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoiseConfig:
    """Симметричная ошибка считывания: цифра заменяется другой с вероятностью p"""
    readout_flip_probability: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.readout_flip_probability <= 1.0:
            raise SimulationError(
                f'Вероятность ошибки {self.readout_flip_probability} вне [0, 1]'
            )


@dataclass(frozen=True)
class Histogram:
    base: int
    width: int
    counts: dict = field(default_factory=dict)

    def __post_init__(self):
        for key, count in self.counts.items():
            if key.width != self.width or key.base != self.base:
                raise SimulationError(f'Ключ {key} не соответствует регистру ширины {self.width}')
            if count < 0:
                raise SimulationError(f'Отрицательный счётчик для {key}')
        ordered = dict(sorted(self.counts.items(), key=lambda item: item[0].digits))
        object.__setattr__(self, 'counts', ordered)

    @property
    def shots(self):
        return sum(self.counts.values())

    def most_common(self):
        """Самый частый исход; при равенстве берётся меньший"""
        if not self.counts:
            raise SimulationError('Пустая гистограмма')
        return max(self.counts.items(), key=lambda item: (item[1], [-x for x in item[0].digits]))

    def frequency(self, key):
        if not self.counts:
            raise SimulationError('Пустая гистограмма')
        if isinstance(key, str):
            key = DigitString.parse(key, self.base)
        return self.counts.get(key, 0) / self.shots

    def to_dict(self):
        return {
            'base': self.base,
            'shots': self.shots,
            'counts': {str(key): int(count) for key, count in self.counts.items()},
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + '\n'


def execute(circuit, initial=None):
    """Применить операции схемы по порядку; исходное состояние не меняется"""
    layout = circuit.layout
    if initial is None:
        state = StateVector.zero(layout.base, layout.total_qudits)
    else:
        if initial.base != layout.base or initial.num_qudits != layout.total_qudits:
            raise LayoutError(
                f'Состояние ({initial.base}, {initial.num_qudits}) не подходит к схеме '
                f'({layout.base}, {layout.total_qudits})'
            )
        state = initial.copy()

    for op in circuit.ops:
        if op.kind == GateKind.SWAP:
            swap_gate_apply(state, *op.qudits)
        else:
            apply_gate(state, op.matrix(layout.base), op.qudits)

    state.check_normalized()
    return state


def trace(circuit, initial=None):
    """
    Снимки состояния после каждого помеченного этапа схемы:
    [(label, StateVector), ...]
    """
    snapshots = []
    state = initial
    for label, ops in circuit.segments():
        state = execute(Circuit(circuit.layout, ops), state)
        snapshots.append((label, state))
    return snapshots


def marginal_probabilities(state, qudits):
    """
    Распределение по выбранным кудитам в заданном порядке:
    первый кудит в qudits даёт старшую цифру исхода.
    """
    qudits = [int(q) for q in qudits]
    if not qudits:
        raise LayoutError('Не выбраны кудиты для измерения')
    if len(set(qudits)) != len(qudits):
        raise LayoutError(f'Кудиты для измерения повторяются: {qudits}')
    for q in qudits:
        if not 0 <= q < state.num_qudits:
            raise LayoutError(f'Кудит {q} вне диапазона 0..{state.num_qudits - 1}')
    probs = np.abs(state.tensor()) ** 2
    others = tuple(axis for axis in range(state.num_qudits) if axis not in qudits)
    marginal = probs.sum(axis=others) if others else probs
    # После суммирования оси идут по возрастанию номеров кудитов
    ascending = sorted(qudits)
    marginal = np.transpose(marginal, [ascending.index(q) for q in qudits])
    return marginal.reshape(-1)


def measure(state, register_qudits, shots, noise=None, seed=0):
    """
    Выборка shots исходов из точного маргинального распределения.

    Состояние не коллапсирует. Если задан noise, каждая цифра независимо
    с вероятностью p заменяется равновероятно выбранным другим значением;
    seed берётся из noise.
    """
    if shots < 1:
        raise SimulationError(f'Нужно хотя бы одно измерение, получено {shots}')
    qudits = list(register_qudits)
    probs = marginal_probabilities(state, qudits)
    total = probs.sum()
    if abs(total - 1.0) > 1e-9:
        raise SimulationError(f'Сумма маргинальных вероятностей {total!r} != 1')

    d = state.base
    width = len(qudits)
    shape = (d,) * width
    rng = np.random.default_rng(noise.seed if noise is not None else seed)
    outcomes = rng.choice(probs.size, size=shots, p=probs / total)

    if noise is not None and noise.readout_flip_probability > 0:
        digits = np.stack(np.unravel_index(outcomes, shape), axis=-1)
        flips = rng.random(digits.shape) < noise.readout_flip_probability
        offsets = rng.integers(1, d, size=digits.shape)
        digits = np.where(flips, (digits + offsets) % d, digits)
        outcomes = np.ravel_multi_index(tuple(digits.T), shape)

    tallies = np.bincount(outcomes, minlength=probs.size)
    counts = {}
    for index in np.flatnonzero(tallies):
        key = DigitString(d, tuple(int(x) for x in np.unravel_index(index, shape)))
        counts[key] = int(tallies[index])

    logger.debug('Измерено %d кудитов, %d shots, %d различных исходов', width, shots, len(counts))
    return Histogram(d, width, counts)
