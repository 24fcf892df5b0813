from django.apps import AppConfig


class EvaluationConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'app.evaluation'
    label = 'evaluation'
    verbose_name = 'F-measure evaluation'
