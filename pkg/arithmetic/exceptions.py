"""
Исключения библиотеки кудитной арифметики
"""


class QuditError(ValueError):
    """Базовая ошибка: неверные входные данные для библиотеки"""


class DigitOverflowError(QuditError):
    """Число не помещается в заданное количество цифр"""


class LayoutError(QuditError):
    """Несоответствие регистров, ширины, основания или индексов кудитов"""


class GateError(QuditError):
    """Неверные параметры вентиля"""


class CircuitError(QuditError):
    """Ошибка построения или экспорта схемы"""


class SpecError(QuditError):
    """Недопустимая спецификация сумматора"""


class FormulaError(QuditError):
    """Формула подсчёта вентилей дала нецелое значение"""


class SimulationError(QuditError):
    """Нарушение инварианта при симуляции (например, нормировки)"""
