"""
Оценка ресурсов: формула числа вентилей, выходная ёмкость d**(t+n),
сверка с подсчётом по построенной схеме и таблица для сравнения оснований.

Формула не зависит от d напрямую: основание входит только через
t = ⌈log_d N⌉. Вентили кодирования SHIFT в формулу не входят.
"""
import csv
import io
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .adder import AdderSpec, build_full_adder, required_ancillas
from .circuits import GateKind
from .exceptions import FormulaError

logger = logging.getLogger(__name__)

SWEEP_HEADER = ('d', 'n', 'N', 't', 'capacity', 'gate_count')


def gate_count_formula(n, N, t):
    """
    (N+1)·n·[(n+1)/2 + t] + t² + 2t + n, на единицу меньше при нечётном t+n
    """
    if n < 1 or N < 1 or t < 0:
        raise FormulaError(f'Недопустимые размеры n={n}, N={N}, t={t}')
    value = (N + 1) * n * (Fraction(n + 1, 2) + t) + t * t + 2 * t + n
    if value.denominator != 1:
        raise FormulaError(f'Формула дала нецелое значение {value}')
    count = int(value)
    if (t + n) % 2:
        count -= 1
    return count


def capacity(n, t, d):
    return d ** (t + n)


@dataclass(frozen=True)
class ResourceReport:
    base: int
    digits: int
    num_inputs: int
    ancillas: int
    formula_count: int
    tally: dict = field(default_factory=dict)
    capacity: int = 0
    # Число квантовых каналов q = t + N·n
    width: int = 0

    @property
    def tally_count(self):
        return self.tally[GateKind.HADAMARD] + self.tally[GateKind.CPHASE] + self.tally[GateKind.SWAP]

    @property
    def reconciled(self):
        return self.formula_count == self.tally_count

    def to_dict(self):
        return {
            'd': self.base,
            'n': self.digits,
            'N': self.num_inputs,
            't': self.ancillas,
            'capacity': self.capacity,
            'width': self.width,
            'formula': self.formula_count,
            'tally': {kind.value: count for kind, count in self.tally.items()},
            'match': self.reconciled,
        }


def resource_report(spec):
    """Отчёт по спецификации: формула против подсчёта по схеме"""
    circuit = build_full_adder(spec)
    t = spec.ancillas
    report = ResourceReport(
        base=spec.base,
        digits=spec.digits_per_input,
        num_inputs=spec.num_inputs,
        ancillas=t,
        formula_count=gate_count_formula(spec.digits_per_input, spec.num_inputs, t),
        tally=circuit.tally,
        capacity=capacity(spec.digits_per_input, t, spec.base),
        width=spec.total_qudits,
    )
    if not report.reconciled:
        logger.warning(
            'Формула %d не совпала с подсчётом %d (d=%d, n=%d, N=%d)',
            report.formula_count, report.tally_count, spec.base, spec.digits_per_input, spec.num_inputs,
        )
    return report


def report_for_sizes(base, digits, num_inputs):
    """Отчёт без конкретных входов: число H/CP/SWAP от значений не зависит"""
    return resource_report(AdderSpec(base, digits, (0,) * num_inputs))


@dataclass(frozen=True, order=True)
class SweepRow:
    d: int
    capacity: int
    n: int
    N: int
    t: int
    gate_count: int

    def as_csv_row(self):
        return (self.d, self.n, self.N, self.t, self.capacity, self.gate_count)


def sweep(d_values, max_capacity, max_inputs=8):
    """
    Все точки (n, N), N = 2..max_inputs, с ёмкостью не больше max_capacity.
    Строки отсортированы по (d, ёмкость), затем по (n, N).
    """
    rows = []
    for d in sorted(set(d_values)):
        n = 1
        # При N = 2 анцилла одна для любого d, это минимальная ёмкость для n
        while capacity(n, required_ancillas(2, d), d) <= max_capacity:
            for N in range(2, max_inputs + 1):
                t = required_ancillas(N, d)
                cap = capacity(n, t, d)
                if cap <= max_capacity:
                    rows.append(SweepRow(d, cap, n, N, t, gate_count_formula(n, N, t)))
            n += 1
    rows.sort()
    logger.info('Таблица sweep: %d строк для оснований %s', len(rows), sorted(set(d_values)))
    return rows


def write_sweep_csv(rows, stream=None):
    """CSV с заголовком d,n,N,t,capacity,gate_count и переводами строк LF"""
    buffer = stream if stream is not None else io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow(row.as_csv_row())
    if stream is None:
        return buffer.getvalue()
    return None


def equal_capacity_gaps(rows, base_a, base_b, num_inputs):
    """
    Пары строк с одинаковыми N и ёмкостью для двух оснований:
    [(capacity, gate_count_a, gate_count_b), ...] по возрастанию ёмкости
    """
    def by_capacity(base):
        return {
            row.capacity: row.gate_count
            for row in rows
            if row.d == base and row.N == num_inputs
        }

    left, right = by_capacity(base_a), by_capacity(base_b)
    return [(cap, left[cap], right[cap]) for cap in sorted(left.keys() & right.keys())]
