# console/management/commands/check_grammar.py
from django.core.management.base import BaseCommand, CommandError

from app.console.schemas.run_config import INPUT_ERROR, require_file
from app.console.services.inputs import load_grammar_or_fail, load_lexicon_or_fail, write_diagnostics
from app.diagnostics import has_errors
from app.grammar.services.grammar_linter import lint_grammar
from app.grammar.services.rule_printer import render_grammar
from app.lexicon.services.dictionary_loader import serialize_dictionary
from app.lexicon.utils.validators import LexiconValidator


class Command(BaseCommand):
    help = 'Lint a grammar against its dictionary and validate the dictionary'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--dict', dest='dict_path', help='Dictionary file (.dic)')
        parser.add_argument('--grammar', help='Grammar file (.grm)')
        parser.add_argument('--dump-ast', action='store_true', help='Print the parsed rules in canonical form')
        parser.add_argument('--dump-dictionary', action='store_true', help='Print the parsed dictionary')

    def handle(self, *args, **options):
        dict_path = require_file(options.get('dict_path'), '--dict')
        grammar_path = require_file(options.get('grammar'), '--grammar')
        lexicon = load_lexicon_or_fail(dict_path)
        grammar = load_grammar_or_fail(grammar_path)

        if options['dump_ast']:
            self.stdout.write(render_grammar(grammar), ending='')
        if options['dump_dictionary']:
            self.stdout.write(serialize_dictionary(lexicon), ending='')

        dictionary_findings = LexiconValidator.validate(lexicon)
        grammar_findings = lint_grammar(grammar, lexicon)
        write_diagnostics(self.stderr, dictionary_findings, dict_path)
        write_diagnostics(self.stderr, grammar_findings, grammar_path)

        counts = LexiconValidator.part_of_speech_counts(lexicon)
        inventory = ', '.join(f"{count} {name}" for name, count in sorted(counts.items()))
        self.stderr.write(
            f"{len(grammar.trules)} T-rules, {len(grammar.drules)} D-rule blocks, "
            f"{len(lexicon)} words ({inventory or 'none'})"
        )

        findings = dictionary_findings + grammar_findings
        if has_errors(findings):
            raise CommandError(
                f"{sum(d.is_error for d in findings)} errors in {grammar_path} / {dict_path}",
                returncode=INPUT_ERROR,
            )
