from django.apps import AppConfig


class CLIConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "mvpoly.apps.cli"
