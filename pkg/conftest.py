"""Pytest wiring: configure Django before the app test modules are collected."""

import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "mvpoly.config.settings")
django.setup()
