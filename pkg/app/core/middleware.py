"""
Middleware
"""
# Libraries
from fastapi.middleware.cors import CORSMiddleware
from fastapi import FastAPI

# Modules
from app.core.settings import settings


def setup_cors(app: FastAPI) -> None:
    """
    Set up CORS middleware for the read-only computation endpoints.
    """
    app.add_middleware(
        CORSMiddleware,
        allow_origins=settings.ALLOWED_ORIGINS,
        allow_credentials=False,
        allow_methods=["GET", "OPTIONS"],
        allow_headers=["Origin", "Accept", "Content-Type"],
    )
