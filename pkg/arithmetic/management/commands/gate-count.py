import json

from arithmetic.adder import required_ancillas
from arithmetic.forms import GateCountForm
from arithmetic.resources import gate_count_formula, report_for_sizes

from ._base import QuditCommand, add_size_arguments


class Command(QuditCommand):
    help = 'Число вентилей по формуле и (с --verify) по построенной схеме'
    form_class = GateCountForm

    def add_arguments(self, parser):
        add_size_arguments(parser)
        parser.add_argument('--num-inputs', type=int, required=True, help='Число входов N')
        parser.add_argument('--verify', action='store_true', help='Сверить с построенной схемой')
        parser.add_argument('--format', default='text', help='text или json')

    def run(self, form, options):
        data = form.cleaned_data
        base, n, N = data['base'], data['digits'], data['num_inputs']

        if data['format'] == 'json':
            report = report_for_sizes(base, n, N)
            self.stdout.write(json.dumps(report.to_dict(), indent=2))
            return

        formula = gate_count_formula(n, N, required_ancillas(N, base))
        if not data['verify']:
            self.stdout.write(f'formula={formula}')
            return

        report = report_for_sizes(base, n, N)
        verdict = 'MATCH' if report.reconciled else 'MISMATCH'
        self.stdout.write(f'formula={formula} tally={report.tally_count} {verdict}')
