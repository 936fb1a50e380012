"""Current version of package weavekh."""

__version__ = "1.0.0"
