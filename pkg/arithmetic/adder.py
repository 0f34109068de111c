"""
n-цифровой N-входовой QFT-сумматор (вычитатель) для кудитов.

Схема: кодирование входов сдвигами X_d^k -> QFT на (анцилла + a0) ->
N-1 компонент ADDER из управляемых фазовых сдвигов -> IQFT.
Результат читается с регистра Фурье (кудиты 0 .. t+n-1).
"""
import logging
import math
from dataclasses import dataclass

from django.db import models

from .circuits import Circuit, GateKind, GateOp, build_iqft, build_qft, concat
from .core import RegisterLayout, from_integer
from .exceptions import CircuitError, SpecError

logger = logging.getLogger(__name__)


class Mode(models.TextChoices):
    ADD = 'add', 'Сложение'
    SUB = 'sub', 'Вычитание'


def required_ancillas(num_inputs, base):
    """
    Число анцилл t: наименьшее t с base**t >= num_inputs (целочисленно)
    """
    if num_inputs < 1:
        raise SpecError(f'Число входов должно быть >= 1, получено {num_inputs}')
    if base < 2:
        raise SpecError(f'Основание должно быть >= 2, получено {base}')
    t, reach = 0, 1
    while reach < num_inputs:
        reach *= base
        t += 1
    return t


@dataclass(frozen=True)
class AdderSpec:
    base: int
    digits_per_input: int
    inputs: tuple
    mode: Mode = Mode.ADD
    # Необязательные знаки входов (+1 / -1), перекрывают знаки из mode
    signs: tuple = None

    def __post_init__(self):
        if self.base < 2:
            raise SpecError(f'Основание должно быть >= 2, получено {self.base}')
        if self.digits_per_input < 1:
            raise SpecError(f'Число цифр на вход должно быть >= 1, получено {self.digits_per_input}')
        inputs = tuple(int(x) for x in self.inputs)
        if not inputs:
            raise SpecError('Нужен хотя бы один вход')
        limit = self.base ** self.digits_per_input
        for value in inputs:
            if not 0 <= value < limit:
                raise SpecError(
                    f'Вход {value} не представим {self.digits_per_input} цифрами '
                    f'по основанию {self.base}'
                )
        object.__setattr__(self, 'inputs', inputs)
        object.__setattr__(self, 'mode', Mode(self.mode))

        if self.signs is not None:
            signs = tuple(int(s) for s in self.signs)
            if len(signs) != len(inputs):
                raise SpecError(f'Знаков {len(signs)}, а входов {len(inputs)}')
            if signs[0] != 1:
                raise SpecError('Первый вход кодируется напрямую, его знак должен быть +1')
            if any(s not in (1, -1) for s in signs):
                raise SpecError(f'Знаки должны быть +1 или -1: {signs}')
            object.__setattr__(self, 'signs', signs)

    @property
    def num_inputs(self):
        return len(self.inputs)

    @property
    def ancillas(self):
        return required_ancillas(self.num_inputs, self.base)

    @property
    def fourier_width(self):
        return self.ancillas + self.digits_per_input

    @property
    def capacity(self):
        return self.base ** self.fourier_width

    @property
    def total_qudits(self):
        return self.ancillas + self.num_inputs * self.digits_per_input

    @property
    def input_signs(self):
        if self.signs is not None:
            return self.signs
        rest = 1 if self.mode == Mode.ADD else -1
        return (1,) + (rest,) * (self.num_inputs - 1)

    def layout(self):
        return RegisterLayout.for_adder(
            self.base, self.digits_per_input, self.num_inputs, self.ancillas
        )

    def result_qudits(self):
        """Регистр Фурье: анцилла + первый вход"""
        return range(0, self.fourier_width)


def classical_oracle(spec):
    """Точный результат: (a0 + Σ s_i·a_i) mod d**(t+n)"""
    total = sum(sign * value for sign, value in zip(spec.input_signs, spec.inputs))
    return total % spec.capacity


def _fourier_register(layout):
    anc = layout.register(0)
    first = layout.register(1)
    return range(anc.start, first.start + first.size)


def build_encoding(layout, values, label='encode'):
    """По одному SHIFT на каждую ненулевую цифру каждого входного регистра"""
    ops = []
    for i, value in enumerate(values):
        reg = layout.register(f'a{i}')
        digits = from_integer(value, layout.base, reg.size)
        for index, digit in zip(reg.qudits, digits.digits):
            if digit:
                ops.append(GateOp(GateKind.SHIFT, (index,), k=digit, label=label))
    return Circuit(layout, ops)


def build_adder_component(layout, source_register, sign, label='adder'):
    """
    Компонент ADDER: прибавляет (sign=+1) или вычитает (sign=-1) значение
    регистра source_register к регистру Фурье (анцилла + a0).

    Цифра источника с весом d**j управляет CP_d(sign·2π·d**(j-l)) на каждой
    позиции Фурье l = j+1 .. t+n (l считается от старшей позиции, с 1):
    ровно t+n-j вентилей на цифру.
    """
    if sign not in (1, -1):
        raise CircuitError(f'Знак компонента должен быть +1 или -1, получено {sign}')
    if isinstance(source_register, int) and source_register < 2:
        raise CircuitError('Источник не может совпадать с регистром Фурье')
    source = layout.register(source_register)
    fourier = _fourier_register(layout)
    if source.start < fourier.stop:
        raise CircuitError(f'Регистр {source.name} пересекается с регистром Фурье')
    if source.size > len(fourier):
        raise CircuitError(f'Регистр {source.name} шире регистра Фурье')

    d = layout.base
    width = len(fourier)
    ops = []
    for j in range(source.size):
        control = source.start + source.size - 1 - j
        for r in range(j, width):
            l = r + 1
            theta = sign * 2 * math.pi * float(d) ** (j - l)
            ops.append(GateOp(GateKind.CPHASE, (control, fourier[r]), theta=theta, label=label))
    return Circuit(layout, ops)


def build_full_adder(spec):
    """
    Полная схема: кодирование, QFT, ADDER^1 .. ADDER^(N-1), IQFT
    """
    layout = spec.layout()
    fourier = spec.result_qudits()
    parts = [
        build_encoding(layout, spec.inputs),
        build_qft(layout, fourier),
    ]
    for i, sign in enumerate(spec.input_signs[1:], start=1):
        parts.append(build_adder_component(layout, i + 1, sign, label=f'adder{i}'))
    parts.append(build_iqft(layout, fourier))
    circuit = concat(parts)

    logger.debug(
        'Сумматор d=%d n=%d N=%d t=%d: %d операций',
        spec.base, spec.digits_per_input, spec.num_inputs, spec.ancillas, len(circuit),
    )
    return circuit
