#!/usr/bin/env python
"""Command-line entry point of the UNL deconverter (generate, eval, check_grammar)."""
import os
import sys


def main():
    """Dispatch to a management command."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Django is required to run the deconverter; install the packages "
            "listed in requirements.txt."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
