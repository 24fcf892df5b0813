from django.apps import AppConfig


class MorphologyConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'app.morphology'
    label = 'morphology'
    verbose_name = 'Inflection'
