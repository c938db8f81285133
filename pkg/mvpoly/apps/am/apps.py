from django.apps import AppConfig


class AMConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "mvpoly.apps.am"
