from django.apps import AppConfig


class TestingDomainsConfig(AppConfig):
    name = "testing_domains"
