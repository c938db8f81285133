from django.apps import AppConfig


class KashiwaraConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "mvpoly.apps.kashiwara"
