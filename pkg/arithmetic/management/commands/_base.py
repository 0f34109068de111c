"""
Общая основа команд: проверка параметров формой, коды выхода, запись артефактов.

Коды выхода: 0 успех, 2 неверные параметры, 1 внутренняя ошибка.
"""
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from arithmetic.exceptions import QuditError
from arithmetic.forms import errors_as_flags

logger = logging.getLogger('arithmetic.commands')

EXIT_INVALID = 2
EXIT_INTERNAL = 1


class QuditCommand(BaseCommand):
    form_class = None

    def add_output_argument(self, parser):
        parser.add_argument(
            '--output', default=None,
            help='Файл для артефакта (по умолчанию stdout)',
        )

    def validate(self, options):
        form = self.form_class(data=options)
        if not form.is_valid():
            raise CommandError(errors_as_flags(form), returncode=EXIT_INVALID)
        return form

    def write_artifact(self, text, output):
        """Записать артефакт в файл (UTF-8, LF) или в stdout"""
        if output and output != '-':
            path = Path(output)
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline='\n') as fh:
                fh.write(text)
            logger.info('Артефакт записан: %s', path)
        else:
            self.stdout.write(text, ending='')

    def handle(self, *args, **options):
        form = self.validate(options)
        try:
            self.run(form, options)
        except QuditError as exc:
            raise CommandError(str(exc), returncode=EXIT_INVALID) from exc
        except CommandError:
            raise
        except Exception as exc:
            logger.exception('Внутренняя ошибка команды %s', self.__module__)
            raise CommandError(f'Внутренняя ошибка: {exc}', returncode=EXIT_INTERNAL) from exc

    def run(self, form, options):
        raise NotImplementedError


def add_size_arguments(parser):
    parser.add_argument('--base', type=int, required=True, help='Основание кудита d')
    parser.add_argument('--digits', type=int, required=True, help='Цифр на вход n')


def add_inputs_arguments(parser):
    parser.add_argument('--inputs', required=True, help='Входы через запятую, например 3,2,1,2')
    parser.add_argument(
        '--inputs-base', type=int, default=None,
        help='Система счисления, в которой записаны входы (по умолчанию 10)',
    )
