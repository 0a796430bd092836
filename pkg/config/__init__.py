# config/__init__.py
from .settings import Settings, get_settings, settings
