#!/usr/bin/env python
"""
Скрипт пересборки эталонных артефактов в artifacts/
(два примера сложения {3,2,1,2}, схемы, таблица для сравнения d=2 и d=4)
"""
import os
import sys

import django


def run_step(description, *args):
    from django.core.management import call_command
    from django.core.management.base import CommandError

    print(f"\n{'=' * 60}")
    print(description)
    print(f"{'=' * 60}")
    try:
        call_command(*args)
        return True
    except CommandError as e:
        print(f"❌ Ошибка: {e}")
        return False


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'qudit_lab.settings')
    django.setup()

    out = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'artifacts')
    print(f"🚀 Сборка артефактов в {out}")

    steps = [
        ("1. Кубиты: d=2, n=2, N=4",
         'add', '--base', '2', '--digits', '2', '--inputs', '3,2,1,2',
         '--output', os.path.join(out, 'qubit_histogram.json')),
        ("2. Кубиты с 5% шумом считывания",
         'add', '--base', '2', '--digits', '2', '--inputs', '3,2,1,2', '--noise', '0.05',
         '--shots', '4096', '--output', os.path.join(out, 'qubit_histogram_noise.json')),
        ("3. Кукварты: d=4, n=1, N=4",
         'add', '--base', '4', '--digits', '1', '--inputs', '3,2,1,2',
         '--output', os.path.join(out, 'ququart_histogram.json')),
        ("4. Схема для кубитов (JSON)",
         'export-circuit', '--base', '2', '--digits', '2', '--inputs', '3,2,1,2',
         '--output', os.path.join(out, 'qubit_circuit.json')),
        ("5. Схема для кубитов (QASM)",
         'export-circuit', '--base', '2', '--digits', '2', '--inputs', '3,2,1,2',
         '--format', 'qasm', '--output', os.path.join(out, 'qubit_circuit.qasm')),
        ("6. Схема для ququart (JSON)",
         'export-circuit', '--base', '4', '--digits', '1', '--inputs', '3,2,1,2',
         '--output', os.path.join(out, 'ququart_circuit.json')),
        ("7. Число вентилей против ёмкости",
         'sweep', '--bases', '2,4', '--max-capacity', '4096',
         '--output', os.path.join(out, 'capacity_sweep.csv')),
    ]

    failed = [step[0] for step in steps if not run_step(*step)]
    if failed:
        print(f"\n❌ Не удалось: {', '.join(failed)}")
        sys.exit(1)

    print("\n🎉 Все артефакты собраны!")


if __name__ == '__main__':
    main()
