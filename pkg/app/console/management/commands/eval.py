# console/management/commands/eval.py
from django.core.management.base import BaseCommand, CommandError

from app.console.schemas.run_config import INPUT_ERROR, resolve_workers
from app.evaluation.services.corpus_evaluator import (
    evaluate_corpus, pair_files, read_corpus_file, report_to_json, report_to_tsv,
)
from app.exceptions import EmptyCorpusError, InputParseError


class Command(BaseCommand):
    help = 'Score generated sentences against references with the LCS F-measure'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            'files',
            nargs='+',
            help='Either one corpus TSV (id, candidate, reference) or a candidate file and a reference file',
        )
        parser.add_argument('--json', action='store_true', help='Print the summary as JSON')
        parser.add_argument('--out', help='Write the report to this file')
        parser.add_argument('--workers', type=int, help='Pairs scored concurrently')

    def handle(self, *args, **options):
        files = options['files']
        if len(files) > 2:
            raise CommandError("expected a corpus file or a candidate and a reference file", returncode=INPUT_ERROR)
        workers = resolve_workers(options.get('workers'))

        try:
            pairs = read_corpus_file(files[0]) if len(files) == 1 else pair_files(*files)
            report = evaluate_corpus(pairs, workers=workers)
        except (InputParseError, EmptyCorpusError) as exc:
            raise CommandError(str(exc), returncode=INPUT_ERROR) from exc
        except OSError as exc:
            raise CommandError(f"cannot read corpus: {exc}", returncode=INPUT_ERROR) from exc

        rendered = report_to_json(report) if options['json'] else report_to_tsv(report)
        if options.get('out'):
            with open(options['out'], 'w', encoding='utf-8') as handle:
                handle.write(rendered if rendered.endswith('\n') else rendered + '\n')
            self.stdout.write(f"F-measure: {report.aggregate_f:.3f}")
        else:
            self.stdout.write(rendered, ending='' if rendered.endswith('\n') else '\n')
