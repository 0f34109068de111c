"""
Базовые типы: цифры, раскладка регистров и плотный вектор состояния.

Соглашение о порядке цифр везде одно: старшая цифра первая (MSB-first).
Кудит 0 самый старший, индекс базисного состояния равен
sum(digit(k) * d ** (q - 1 - k)).
"""
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .exceptions import DigitOverflowError, LayoutError, SimulationError

NORM_TOLERANCE = 1e-9

# Защита от случайного выделения гигантского массива
MAX_AMPLITUDES = 1 << 26

_ALPHABET = '0123456789abcdefghijklmnopqrstuvwxyz'


def _check_base(base):
    if not isinstance(base, (int, np.integer)) or base < 2:
        raise LayoutError(f'Основание должно быть целым >= 2, получено {base!r}')


# 1. Число в виде цифр
@dataclass(frozen=True)
class DigitString:
    base: int
    digits: tuple = ()

    def __post_init__(self):
        _check_base(self.base)
        digits = tuple(int(x) for x in self.digits)
        for digit in digits:
            if not 0 <= digit < self.base:
                raise LayoutError(f'Цифра {digit} вне диапазона [0, {self.base})')
        object.__setattr__(self, 'digits', digits)

    @property
    def width(self):
        return len(self.digits)

    def __len__(self):
        return len(self.digits)

    def to_integer(self):
        return reduce(lambda acc, digit: acc * self.base + digit, self.digits, 0)

    def lsb_first(self):
        """Цифры в порядке весов d**0, d**1, ..."""
        return self.digits[::-1]

    def __str__(self):
        if self.base <= len(_ALPHABET):
            return ''.join(_ALPHABET[x] for x in self.digits)
        return '.'.join(str(x) for x in self.digits)

    @classmethod
    def parse(cls, text, base):
        """Обратная операция к str(): '1000' или '12.0.7' для d > 36"""
        _check_base(base)
        if base <= len(_ALPHABET):
            try:
                digits = [_ALPHABET.index(ch) for ch in text.lower()]
            except ValueError:
                raise LayoutError(f'Недопустимый символ в {text!r}') from None
        else:
            try:
                digits = [int(part) for part in text.split('.')] if text else []
            except ValueError:
                raise LayoutError(f'Недопустимая запись цифр {text!r}') from None
        return cls(base, tuple(digits))


def from_integer(value, base, width):
    """
    Разложить неотрицательное число на width цифр по основанию base (MSB-first)
    """
    _check_base(base)
    if width < 0:
        raise LayoutError(f'Отрицательная ширина {width}')
    if value < 0 or value >= base ** width:
        raise DigitOverflowError(
            f'{value} не помещается в {width} цифр по основанию {base}'
        )
    digits = []
    for _ in range(width):
        value, digit = divmod(value, base)
        digits.append(digit)
    return DigitString(base, tuple(reversed(digits)))


def to_integer(digit_string):
    return digit_string.to_integer()


# 2. Регистры
@dataclass(frozen=True)
class Register:
    name: str
    size: int
    start: int

    @property
    def qudits(self):
        return range(self.start, self.start + self.size)


@dataclass(frozen=True)
class RegisterLayout:
    base: int
    registers: tuple = field(default_factory=tuple)

    def __post_init__(self):
        _check_base(self.base)
        names = [reg.name for reg in self.registers]
        if len(set(names)) != len(names):
            raise LayoutError(f'Имена регистров повторяются: {names}')
        offset = 0
        for reg in self.registers:
            if reg.size < 0 or reg.start != offset:
                raise LayoutError(f'Регистр {reg.name} нарушает непрерывность индексов')
            offset += reg.size

    @classmethod
    def from_sizes(cls, base, sizes):
        """sizes: список пар (имя, число кудитов)"""
        registers = []
        offset = 0
        for name, size in sizes:
            registers.append(Register(name, int(size), offset))
            offset += int(size)
        return cls(base, tuple(registers))

    @classmethod
    def for_adder(cls, base, digits_per_input, num_inputs, ancillas):
        """Анцилла из t кудитов, затем N входных регистров по n кудитов"""
        sizes = [('anc', ancillas)]
        sizes += [(f'a{i}', digits_per_input) for i in range(num_inputs)]
        return cls.from_sizes(base, sizes)

    @property
    def total_qudits(self):
        return sum(reg.size for reg in self.registers)

    @property
    def dimension(self):
        return self.base ** self.total_qudits

    def register(self, key):
        """Регистр по имени или по порядковому номеру"""
        if isinstance(key, str):
            for reg in self.registers:
                if reg.name == key:
                    return reg
            raise LayoutError(f'Нет регистра {key!r}')
        try:
            return self.registers[key]
        except IndexError:
            raise LayoutError(f'Нет регистра с номером {key}') from None

    def check_qudits(self, qudits):
        for index in qudits:
            if not 0 <= index < self.total_qudits:
                raise LayoutError(
                    f'Кудит {index} вне раскладки из {self.total_qudits} кудитов'
                )


# 3. Вектор состояния
class StateVector:
    """
    Плотный вектор из d**q комплексных амплитуд.

    Буфер принадлежит одному владельцу: apply_gate и swap_gate_apply
    заменяют amplitudes на месте.
    """

    def __init__(self, base, num_qudits, amplitudes=None):
        _check_base(base)
        dimension = base ** num_qudits
        if dimension > MAX_AMPLITUDES:
            raise LayoutError(f'Состояние из {dimension} амплитуд слишком велико')
        self.base = base
        self.num_qudits = num_qudits
        if amplitudes is None:
            amplitudes = np.zeros(dimension, dtype=np.complex128)
            amplitudes[0] = 1.0
        else:
            amplitudes = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
            if amplitudes.size != dimension:
                raise LayoutError(
                    f'Ожидалось {dimension} амплитуд, получено {amplitudes.size}'
                )
        self.amplitudes = amplitudes

    @classmethod
    def zero(cls, base, num_qudits):
        return cls(base, num_qudits)

    @property
    def dimension(self):
        return self.amplitudes.size

    def tensor(self):
        """Представление (d, d, ..., d): ось k соответствует кудиту k"""
        return self.amplitudes.reshape((self.base,) * self.num_qudits)

    def copy(self):
        return StateVector(self.base, self.num_qudits, self.amplitudes.copy())

    def probabilities(self):
        return np.abs(self.amplitudes) ** 2

    def norm(self):
        return float(np.sum(self.probabilities()))

    def check_normalized(self, tolerance=NORM_TOLERANCE):
        norm = self.norm()
        if abs(norm - 1.0) > tolerance:
            raise SimulationError(f'Норма состояния {norm!r} отличается от 1')
        return norm

    def amplitude(self, digits):
        """Амплитуда базисного состояния, заданного цифрами всех кудитов"""
        return self.amplitudes[basis_index(self.base, digits)]

    def fidelity(self, other):
        return float(abs(np.vdot(self.amplitudes, other.amplitudes)) ** 2)

    def __repr__(self):
        return f'StateVector(base={self.base}, num_qudits={self.num_qudits})'


def basis_index(base, digits):
    """Индекс базисного состояния по цифрам кудитов (кудит 0 старший)"""
    return DigitString(base, tuple(digits)).to_integer()


def basis_state(layout, register_digits):
    """
    Базисное состояние: по одной DigitString на каждый регистр раскладки
    """
    if len(register_digits) != len(layout.registers):
        raise LayoutError(
            f'Нужно {len(layout.registers)} наборов цифр, получено {len(register_digits)}'
        )
    concatenated = []
    for reg, digits in zip(layout.registers, register_digits):
        if digits.base != layout.base:
            raise LayoutError(
                f'Основание {digits.base} у регистра {reg.name} не совпадает с {layout.base}'
            )
        if digits.width != reg.size:
            raise LayoutError(
                f'Регистр {reg.name} шириной {reg.size}, а цифр {digits.width}'
            )
        concatenated.extend(digits.digits)

    state = StateVector(layout.base, layout.total_qudits)
    state.amplitudes[0] = 0.0
    state.amplitudes[basis_index(layout.base, concatenated)] = 1.0
    return state
