"""
Run History - ledger of CLI experiment runs
"""
import os
import json
from datetime import datetime
from typing import List, Dict, Any, Optional, Sequence
from config.settings import settings
from src.utils.logger import app_logger


class RunHistory:
    """Keeps a JSON ledger of experiment runs outside the result files"""

    def __init__(self, history_dir: Optional[str] = None):
        """
        Initialize run history

        Args:
            history_dir: Ledger directory (defaults to settings.HISTORY_DIR)
        """
        self.history_dir = history_dir or settings.HISTORY_DIR
        os.makedirs(self.history_dir, exist_ok=True)
        self.history_file = os.path.join(self.history_dir, "run_history.json")

    def add_run(self, command: str, config: Dict[str, Any], outputs: Sequence[str], summary: Optional[Dict[str, Any]] = None):
        """
        Record a finished run

        Args:
            command: CLI subcommand
            config: Configuration as plain JSON values
            outputs: Files written by the run
            summary: Optional headline numbers (e.g. selected k)
        """
        history = self._load_history()

        entry = {
            "timestamp": datetime.now().isoformat(),
            "command": command,
            "config": config,
            "outputs": [str(path) for path in outputs],
        }
        if summary:
            entry["summary"] = summary

        history.append(entry)
        self._save_history(history)
        app_logger.info(f"[HISTORY] recorded '{command}' run")

    def get_history(self, limit: int = 10) -> List[Dict[str, Any]]:
        """
        Get recent runs

        Args:
            limit: Number of recent entries to return

        Returns:
            List of history entries, most recent first
        """
        history = self._load_history()
        return history[-limit:][::-1] if limit > 0 else []

    def search_history(self, keyword: str) -> List[Dict[str, Any]]:
        """Runs whose command, dataset name or dataset file contains keyword, most recent first"""
        keyword_lower = keyword.lower()
        results = []
        for entry in self._load_history():
            config = entry.get("config", {})
            fields = (entry.get("command", ""), config.get("dataset") or "", os.path.basename(str(config.get("dataset_path", ""))))
            if any(keyword_lower in str(field).lower() for field in fields):
                results.append(entry)
        return results[::-1]

    def clear_history(self):
        """Clear all history"""
        self._save_history([])
        app_logger.info("[HISTORY] cleared")

    def _load_history(self) -> List[Dict[str, Any]]:
        """Load history from file"""
        if not os.path.exists(self.history_file):
            return []

        try:
            with open(self.history_file, 'r', encoding='utf-8') as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            app_logger.error(f"[HISTORY] error loading history: {str(e)}")
            return []

    def _save_history(self, history: List[Dict[str, Any]]):
        """Save history to file"""
        try:
            with open(self.history_file, 'w', encoding='utf-8') as f:
                json.dump(history, f, indent=2, ensure_ascii=False)
        except OSError as e:
            app_logger.error(f"[HISTORY] error saving history: {str(e)}")
