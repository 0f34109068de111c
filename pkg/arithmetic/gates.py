"""
Библиотека вентилей: обобщённый Адамар H_d, управляемый фазовый сдвиг CP_d,
сдвиг X_d^k и SWAP, плюс их применение к вектору состояния.

Применение идёт по осям тензора (d, ..., d) через tensordot, полная
матрица d**q x d**q никогда не строится.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .exceptions import GateError, LayoutError

logger = logging.getLogger(__name__)

UNITARY_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class GateMatrix:
    base: int
    arity: int
    entries: np.ndarray = field(repr=False)
    name: str = ''

    def __post_init__(self):
        if self.base < 2:
            raise GateError(f'Основание {self.base} < 2')
        if self.arity not in (1, 2):
            raise GateError(f'Поддерживаются только 1- и 2-кудитные вентили, arity={self.arity}')
        size = self.base ** self.arity
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.shape != (size, size):
            raise GateError(f'Матрица {entries.shape} не соответствует {size}x{size}')
        entries.setflags(write=False)
        object.__setattr__(self, 'entries', entries)
        if self.unitarity_error() > UNITARY_TOLERANCE:
            raise GateError(f'Матрица {self.name or "?"} не унитарна')

    @property
    def dimension(self):
        return self.entries.shape[0]

    def unitarity_error(self):
        product = self.entries.conj().T @ self.entries
        return float(np.max(np.abs(product - np.eye(self.dimension))))

    def adjoint(self):
        return GateMatrix(self.base, self.arity, self.entries.conj().T, f'{self.name}†')

    def is_diagonal(self):
        return not np.any(self.entries - np.diag(np.diag(self.entries)))


def _check_base(d):
    if d < 2:
        raise GateError(f'Основание кудита должно быть >= 2, получено {d}')


@lru_cache(maxsize=None)
def hadamard_matrix(d):
    """H_d[m, j] = exp(2πi·j·m/d) / √d"""
    _check_base(d)
    levels = np.arange(d)
    entries = np.exp(2j * np.pi * np.outer(levels, levels) / d) / np.sqrt(d)
    return GateMatrix(d, 1, entries, 'H')


@lru_cache(maxsize=None)
def hadamard_adjoint_matrix(d):
    return hadamard_matrix(d).adjoint()


@lru_cache(maxsize=None)
def cphase_matrix(d, theta):
    """Диагональ exp(i·θ·j·m) для уровня управления j и уровня цели m"""
    _check_base(d)
    levels = np.arange(d)
    phases = np.exp(1j * theta * np.outer(levels, levels)).reshape(-1)
    return GateMatrix(d, 2, np.diag(phases), 'CP')


@lru_cache(maxsize=None)
def shift_matrix(d, k):
    """Перестановка |m⟩ -> |(m + k) mod d⟩"""
    _check_base(d)
    if not 0 <= k < d:
        raise GateError(f'Сдвиг {k} вне диапазона [0, {d})')
    return GateMatrix(d, 1, np.roll(np.eye(d), k, axis=0), 'X')


@lru_cache(maxsize=None)
def swap_matrix(d):
    _check_base(d)
    entries = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            entries[j * d + i, i * d + j] = 1.0
    return GateMatrix(d, 2, entries, 'SWAP')


def apply_matrix_to_tensor(tensor, gate, axes):
    """
    Применить вентиль к осям axes тензора.

    Лишние хвостовые оси (например, пакет столбцов единичной матрицы)
    не затрагиваются.
    """
    d = gate.base
    arity = gate.arity
    op = gate.entries.reshape((d,) * (2 * arity))
    result = np.tensordot(op, tensor, axes=(list(range(arity, 2 * arity)), list(axes)))
    return np.moveaxis(result, list(range(arity)), list(axes))


def _check_targets(state, targets, arity):
    targets = tuple(int(t) for t in targets)
    if len(targets) != arity:
        raise GateError(f'Вентилю на {arity} кудит(а) передано {len(targets)} целей')
    if len(set(targets)) != len(targets):
        raise GateError(f'Цели вентиля повторяются: {targets}')
    for target in targets:
        if not 0 <= target < state.num_qudits:
            raise LayoutError(f'Кудит {target} вне диапазона 0..{state.num_qudits - 1}')
    return targets


def apply_gate(state, gate, targets):
    """Применить вентиль к кудитам targets (на месте), вернуть тот же state"""
    if gate.base != state.base:
        raise GateError(f'Основание вентиля {gate.base} != основанию состояния {state.base}')
    targets = _check_targets(state, targets, gate.arity)
    tensor = apply_matrix_to_tensor(state.tensor(), gate, targets)
    state.amplitudes = np.ascontiguousarray(tensor).reshape(-1)
    return state


def swap_gate_apply(state, i, j):
    """Поменять местами кудиты i и j"""
    i, j = _check_targets(state, (i, j), 2)
    tensor = np.swapaxes(state.tensor(), i, j)
    state.amplitudes = np.ascontiguousarray(tensor).reshape(-1)
    return state
