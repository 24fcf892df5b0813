# console/management/commands/generate.py
import logging

from django.core.management.base import BaseCommand, CommandError

from app.console.schemas.run_config import GENERATION_INCOMPLETE, INPUT_ERROR, RunConfig
from app.console.services.inputs import load_grammar_or_fail, load_lexicon_or_fail, write_diagnostics
from app.engine.services.generator import generate_batch
from app.exceptions import InputParseError
from app.unl_core.services.unl_parser import load_unl_file
from app.unl_core.utils.validators import validate_document

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Generate one sentence per {unl} block of a UNL file'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--unl', help='UNL input file')
        parser.add_argument('--dict', dest='dict_path', help='Dictionary file (.dic)')
        parser.add_argument('--grammar', help='Grammar file (.grm)')
        parser.add_argument('--out', help='Write sentences to this file instead of standard output')
        parser.add_argument('--trace', type=int, help='Trace level 0-4, written to standard error')
        parser.add_argument('--max-firings', type=int, help='Stop a sentence after this many rule firings')
        parser.add_argument('--keep-spaces', action='store_true', help='Do not collapse whitespace in the output')
        parser.add_argument('--workers', type=int, help='Sentences generated concurrently')

    def handle(self, *args, **options):
        config = RunConfig.from_options(options)

        lexicon = load_lexicon_or_fail(config.dict_path)
        grammar = load_grammar_or_fail(config.grammar_path)
        try:
            documents = load_unl_file(config.unl_path)
        except InputParseError as exc:
            raise CommandError(str(exc), returncode=INPUT_ERROR) from exc

        write_diagnostics(self.stderr, grammar.diagnostics, config.grammar_path)
        for document in documents:
            write_diagnostics(self.stderr, validate_document(document), config.unl_path)

        results = generate_batch(documents, lexicon, grammar, config.caps, workers=config.workers)

        if config.output_path:
            with open(config.output_path, 'w', encoding='utf-8') as handle:
                handle.writelines(result.text + '\n' for result in results)
        else:
            for result in results:
                self.stdout.write(result.text)

        for number, result in enumerate(results, start=1):
            if result.trace_lines and len(results) > 1:
                self.stderr.write(f"== sentence {number}")
            for line in result.trace_lines:
                self.stderr.write(line)
            write_diagnostics(self.stderr, result.diagnostics)

        incomplete = [number for number, result in enumerate(results, start=1) if not result.complete]
        if incomplete:
            raise CommandError(
                f"{len(incomplete)} of {len(results)} sentences incomplete: {', '.join(map(str, incomplete))}",
                returncode=GENERATION_INCOMPLETE,
            )
        logger.info("Generated %d sentences from %s", len(results), config.unl_path)
