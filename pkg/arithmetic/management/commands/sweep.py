from django.conf import settings

from arithmetic.forms import SweepForm
from arithmetic.resources import sweep, write_sweep_csv

from ._base import QuditCommand


class Command(QuditCommand):
    help = 'Таблица: число вентилей против выходной ёмкости для нескольких оснований (CSV)'
    form_class = SweepForm

    def add_arguments(self, parser):
        parser.add_argument('--bases', required=True, help='Основания через запятую, например 2,4')
        parser.add_argument('--max-capacity', type=int, required=True)
        parser.add_argument('--max-inputs', type=int, default=settings.QUDIT_SWEEP_MAX_INPUTS)
        parser.add_argument('--format', default='csv')
        self.add_output_argument(parser)

    def run(self, form, options):
        data = form.cleaned_data
        rows = sweep(data['bases'], data['max_capacity'], data['max_inputs'])
        self.write_artifact(write_sweep_csv(rows), options.get('output'))
