from django.apps import AppConfig


class UnlCoreConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'app.unl_core'
    label = 'unl_core'
    verbose_name = 'UNL documents'
