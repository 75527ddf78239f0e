"""HTTP service wrapper for the q-series verification engine."""

from .app import app, create_app

__all__ = ["app", "create_app"]
