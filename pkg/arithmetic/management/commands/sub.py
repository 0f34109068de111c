from arithmetic.adder import Mode

from .add import Command as AddCommand


class Command(AddCommand):
    help = 'Построить и просимулировать QFT-вычитатель: a0 - a1 - ... - a(N-1)'
    mode = Mode.SUB
