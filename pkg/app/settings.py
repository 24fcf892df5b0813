"""
Django settings for the UNL deconverter project.

The project has no database and no URL surface: it is driven entirely through
management commands (generate, eval, check_grammar).
"""

from pathlib import Path
import os
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# ================================
# DJANGO CORE SETTINGS
# ================================

SECRET_KEY = config('SECRET_KEY', default='deconverter-local-secret-key')
DEBUG = config('DEBUG', default=False, cast=bool)
ALLOWED_HOSTS = []

# ================================
# APPLICATION DEFINITION
# ================================

INSTALLED_APPS = [
    'app.unl_core.apps.UnlCoreConfig',
    'app.lexicon.apps.LexiconConfig',
    'app.grammar.apps.GrammarConfig',
    'app.morphology.apps.MorphologyConfig',
    'app.engine.apps.EngineConfig',
    'app.evaluation.apps.EvaluationConfig',
    'app.corpus.apps.CorpusConfig',
    'app.console.apps.ConsoleConfig',
]

# No models are defined; nothing touches a database.
DATABASES = {}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# ================================
# DECONVERTER CONFIGURATION
# ================================

DECONVERTER_TRACE_LEVEL = config('DECONVERTER_TRACE_LEVEL', default=0, cast=int)
DECONVERTER_MAX_FIRINGS = config('DECONVERTER_MAX_FIRINGS', default=1000, cast=int)
DECONVERTER_COLLAPSE_SPACES = config('DECONVERTER_COLLAPSE_SPACES', default=True, cast=bool)
DECONVERTER_WORKERS = config('DECONVERTER_WORKERS', default=4, cast=int)

UNL_RELATION_LABELS_FILE = config(
    'UNL_RELATION_LABELS_FILE',
    default=str(BASE_DIR / 'app' / 'unl_core' / 'data' / 'relation_labels.txt'),
)

# Optional TSV file: attribute<TAB>feature[,feature...]. Empty means no filtering.
LEXICON_COMPATIBILITY_FILE = config('LEXICON_COMPATIBILITY_FILE', default='')

PARADIGM_TAG_PATTERN = config('PARADIGM_TAG_PATTERN', default=r'^M\d+$')

FIXTURE_SUITE_DIR = config('FIXTURE_SUITE_DIR', default=str(BASE_DIR / 'fixtures'))

# ================================
# LOGGING CONFIGURATION
# ================================

# Create logs directory if it doesn't exist
LOG_DIR = Path(config('LOG_DIR', default=str(BASE_DIR / 'logs')))
os.makedirs(LOG_DIR, exist_ok=True)

# Standard output is reserved for generated text, so every handler here
# writes to stderr or to the log file.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '[{asctime}] {levelname} {module}: {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'level': 'INFO',
            'class': 'logging.FileHandler',
            'filename': LOG_DIR / 'deconverter.log',
            'formatter': 'verbose',
            'encoding': 'utf-8',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'level': 'INFO',
            'propagate': False,
        },
        'app': {
            'handlers': ['console', 'file'],
            'level': 'DEBUG' if DEBUG else 'INFO',
            'propagate': False,
        },
    },
}
