from arithmetic.adder import build_full_adder
from arithmetic.core import Register
from arithmetic.forms import ExportForm

from ._base import QuditCommand, add_inputs_arguments, add_size_arguments


class Command(QuditCommand):
    help = 'Экспорт схемы сумматора в JSON (любое d) или OpenQASM 2 (d=2)'
    form_class = ExportForm

    def add_arguments(self, parser):
        add_size_arguments(parser)
        add_inputs_arguments(parser)
        parser.add_argument('--mode', default='add', help='add или sub')
        parser.add_argument('--format', default='json', help='json или qasm')
        self.add_output_argument(parser)

    def run(self, form, options):
        spec = form.to_spec()
        circuit = build_full_adder(spec)
        if form.cleaned_data['format'] == 'qasm':
            result = Register('result', spec.fourier_width, 0)
            text = circuit.to_qasm(measure=result)
        else:
            text = circuit.to_json()
        self.write_artifact(text, options.get('output'))
