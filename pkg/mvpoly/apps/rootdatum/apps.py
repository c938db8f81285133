from django.apps import AppConfig


class RootDatumConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "mvpoly.apps.rootdatum"
