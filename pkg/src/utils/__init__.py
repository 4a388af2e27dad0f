"""Utilities module"""
from src.utils.logger import app_logger
from src.utils import errors

__all__ = ["app_logger", "errors"]
