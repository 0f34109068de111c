# arithmetic/checks.py
from django.conf import settings
from django.core.checks import Error, register

QUDIT_TAG = 'qudit'


@register(QUDIT_TAG)
def check_simulation_settings(app_configs, **kwargs):
    """
    Проверка параметров симуляции из settings / .env
    """
    errors = []

    noise = getattr(settings, 'QUDIT_DEFAULT_NOISE', 0.0)
    if not 0.0 <= noise <= 1.0:
        errors.append(Error(
            f'QUDIT_DEFAULT_NOISE={noise} вне диапазона [0, 1]',
            hint='Вероятность ошибки считывания задаётся долей, например 0.05',
            id='arithmetic.E001',
        ))

    shots = getattr(settings, 'QUDIT_DEFAULT_SHOTS', 1024)
    if shots < 1:
        errors.append(Error(
            f'QUDIT_DEFAULT_SHOTS={shots}: нужно хотя бы одно измерение',
            id='arithmetic.E002',
        ))

    max_amplitudes = getattr(settings, 'QUDIT_MAX_AMPLITUDES', 2 ** 22)
    if max_amplitudes < 2:
        errors.append(Error(
            f'QUDIT_MAX_AMPLITUDES={max_amplitudes} слишком мало',
            id='arithmetic.E003',
        ))

    max_inputs = getattr(settings, 'QUDIT_SWEEP_MAX_INPUTS', 8)
    if max_inputs < 2:
        errors.append(Error(
            f'QUDIT_SWEEP_MAX_INPUTS={max_inputs}: sweep требует N >= 2',
            id='arithmetic.E004',
        ))

    return errors
