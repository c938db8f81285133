from django.apps import AppConfig


class BZConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "mvpoly.apps.bz"
