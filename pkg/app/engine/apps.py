from django.apps import AppConfig


class EngineConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'app.engine'
    label = 'engine'
    verbose_name = 'Deconversion engine'
