# ASGI entry point for hosted deployments: uvicorn app:app
from src.api.main import app

__all__ = ["app"]
