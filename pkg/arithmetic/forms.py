# arithmetic/forms.py
from django import forms
from django.conf import settings

from .adder import AdderSpec, Mode, required_ancillas


def _split(value):
    return [part.strip() for part in str(value).split(',') if part.strip()]


def flag_name(field_name):
    """Имя поля формы -> флаг командной строки: num_inputs -> --num-inputs"""
    return '--' + field_name.replace('_', '-')


def errors_as_flags(form):
    """Ошибки формы одной строкой, с указанием флага"""
    parts = []
    for field_name, messages in form.errors.items():
        prefix = 'параметры' if field_name == '__all__' else flag_name(field_name)
        parts.extend(f'{prefix}: {message}' for message in messages)
    return '; '.join(parts)


class CircuitSizeForm(forms.Form):
    """Общие поля: основание и число цифр на вход"""
    base = forms.IntegerField(min_value=2, label='Основание d')
    digits = forms.IntegerField(min_value=1, label='Цифр на вход n')


class InputsMixin(forms.Form):
    inputs = forms.CharField(label='Входы через запятую')
    inputs_base = forms.IntegerField(
        min_value=2, max_value=36, required=False, label='Основание записи входов',
    )

    def clean_inputs(self):
        raw = _split(self.cleaned_data['inputs'])
        if not raw:
            raise forms.ValidationError('нужен хотя бы один вход')
        return raw

    def parse_inputs(self, cleaned):
        """Перевести строки входов в числа и проверить, что они < d**n"""
        raw = cleaned.get('inputs')
        base, digits = cleaned.get('base'), cleaned.get('digits')
        if raw is None or base is None or digits is None:
            return
        radix = cleaned.get('inputs_base') or 10
        values = []
        for text in raw:
            try:
                value = int(text, radix)
            except ValueError:
                self.add_error('inputs', f'{text!r} не число в системе счисления {radix}')
                return
            if not 0 <= value < base ** digits:
                self.add_error('inputs', f'{value} не помещается в {digits} цифр по основанию {base}')
                return
            values.append(value)
        cleaned['values'] = tuple(values)

        total = required_ancillas(len(values), base) + len(values) * digits
        if base ** total > settings.QUDIT_MAX_AMPLITUDES:
            self.add_error(
                'digits',
                f'состояние из {base}**{total} амплитуд превышает QUDIT_MAX_AMPLITUDES',
            )


class AdderForm(CircuitSizeForm, InputsMixin):
    """Параметры команд add / sub"""
    signs = forms.CharField(required=False, label='Знаки входов (+,-,...)')
    shots = forms.IntegerField(min_value=1, label='Число измерений')
    noise = forms.FloatField(min_value=0.0, max_value=1.0, label='Вероятность ошибки считывания')
    seed = forms.IntegerField(min_value=0, label='Зерно генератора')
    format = forms.ChoiceField(choices=[('json', 'JSON'), ('text', 'Текст')])

    def clean_signs(self):
        raw = _split(self.cleaned_data.get('signs') or '')
        if not raw:
            return None
        mapping = {'+': 1, '-': -1, '+1': 1, '-1': -1}
        try:
            return tuple(mapping[s] for s in raw)
        except KeyError:
            raise forms.ValidationError('знаки задаются как + или -') from None

    def clean(self):
        cleaned = super().clean()
        self.parse_inputs(cleaned)
        signs = cleaned.get('signs')
        values = cleaned.get('values')
        if signs is not None and values is not None:
            if len(signs) != len(values):
                self.add_error('signs', f'знаков {len(signs)}, а входов {len(values)}')
            elif signs[0] != 1:
                self.add_error('signs', 'знак первого входа должен быть +')
        return cleaned

    def to_spec(self, mode):
        data = self.cleaned_data
        return AdderSpec(data['base'], data['digits'], data['values'], Mode(mode), data.get('signs'))


class GateCountForm(CircuitSizeForm):
    num_inputs = forms.IntegerField(min_value=1, label='Число входов N')
    verify = forms.BooleanField(required=False)
    format = forms.ChoiceField(choices=[('text', 'Текст'), ('json', 'JSON')])


class SweepForm(forms.Form):
    bases = forms.CharField(label='Основания через запятую')
    max_capacity = forms.IntegerField(min_value=1, label='Максимальная ёмкость')
    max_inputs = forms.IntegerField(min_value=2, label='Максимальное N')
    format = forms.ChoiceField(choices=[('csv', 'CSV')])

    def clean_bases(self):
        try:
            bases = [int(part) for part in _split(self.cleaned_data['bases'])]
        except ValueError:
            raise forms.ValidationError('основания должны быть целыми числами') from None
        if not bases:
            raise forms.ValidationError('нужно хотя бы одно основание')
        if any(d < 2 for d in bases):
            raise forms.ValidationError('основание должно быть >= 2')
        return bases


class ExportForm(CircuitSizeForm, InputsMixin):
    mode = forms.ChoiceField(choices=Mode.choices)
    format = forms.ChoiceField(choices=[('json', 'JSON'), ('qasm', 'OpenQASM 2')])

    def clean(self):
        cleaned = super().clean()
        self.parse_inputs(cleaned)
        if cleaned.get('format') == 'qasm' and cleaned.get('base') not in (None, 2):
            self.add_error('format', 'экспорт QASM возможен только при --base 2')
        return cleaned

    def to_spec(self):
        data = self.cleaned_data
        return AdderSpec(data['base'], data['digits'], data['values'], Mode(data['mode']))
