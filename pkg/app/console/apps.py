from django.apps import AppConfig


class ConsoleConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'app.console'
    label = 'console'
    verbose_name = 'Deconverter console'
