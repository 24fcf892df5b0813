from django.apps import AppConfig


class CorpusConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'app.corpus'
    label = 'corpus'
    verbose_name = 'Golden fixture suite'
