import logging

from django.conf import settings

from arithmetic.adder import Mode, build_full_adder
from arithmetic.forms import AdderForm
from arithmetic.simulator import NoiseConfig, execute, measure

from ._base import QuditCommand, add_inputs_arguments, add_size_arguments

logger = logging.getLogger('arithmetic.commands')


class Command(QuditCommand):
    help = 'Построить и просимулировать N-входовой QFT-сумматор'
    form_class = AdderForm
    mode = Mode.ADD

    def add_arguments(self, parser):
        add_size_arguments(parser)
        add_inputs_arguments(parser)
        if self.mode == Mode.ADD:
            parser.add_argument('--signs', default=None, help='Знаки входов, например +,-,+')
        parser.add_argument('--shots', type=int, default=settings.QUDIT_DEFAULT_SHOTS)
        parser.add_argument('--noise', type=float, default=settings.QUDIT_DEFAULT_NOISE)
        parser.add_argument('--seed', type=int, default=settings.QUDIT_DEFAULT_SEED)
        parser.add_argument('--format', default='json', help='json или text')
        self.add_output_argument(parser)

    def run(self, form, options):
        spec = form.to_spec(self.mode)
        data = form.cleaned_data

        circuit = build_full_adder(spec)
        logger.info(
            '%s: d=%d n=%d N=%d t=%d, %d операций',
            self.mode.label, spec.base, spec.digits_per_input, spec.num_inputs,
            spec.ancillas, len(circuit),
        )
        state = execute(circuit)
        histogram = measure(
            state, spec.result_qudits(), data['shots'],
            NoiseConfig(data['noise'], data['seed']),
        )

        if data['format'] == 'json':
            self.write_artifact(histogram.to_json(), options.get('output'))

        outcome, count = histogram.most_common()
        self.stdout.write(f'result={outcome} value={outcome.to_integer()}')
        logger.info('Исход %s получен в %d из %d измерений', outcome, count, histogram.shots)
