from django.apps import AppConfig


class SubstitutionsConfig(AppConfig):
    name = "substitutions"
