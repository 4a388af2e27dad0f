"""Tools module"""
from src.tools.history_manager import RunHistory

__all__ = ["RunHistory"]
