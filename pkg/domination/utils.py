"""
Shared utility functions.

Provides the report envelope helpers, cache wrappers and the JSON/CSV
writers used by campaigns and management commands.
"""
import csv
import json
import logging
from pathlib import Path

from django.conf import settings
from django.core.cache import cache


logger = logging.getLogger(__name__)

CACHE_TTL = getattr(settings, "CACHE_TTL", 3600)


# ---------------------------------------------------------------------------
# Report envelope helpers
# ---------------------------------------------------------------------------

def success_payload(message: str, data=None) -> dict:
    """
    Standard success envelope.

    Returns:
        { "success": true, "schema_version": "...", "message": "...", "data": {...} }
    """
    payload = {
        "success": True,
        "schema_version": settings.DOMINATION_REPORT_SCHEMA,
        "message": message,
    }
    if data is not None:
        payload["data"] = data
    return payload


def failure_payload(message: str, errors=None) -> dict:
    """
    Standard failure envelope.

    Returns:
        { "success": false, "schema_version": "...", "message": "...", "errors": {...} }
    """
    payload = {
        "success": False,
        "schema_version": settings.DOMINATION_REPORT_SCHEMA,
        "message": message,
    }
    if errors is not None:
        payload["errors"] = errors
    return payload


def dumps(payload) -> str:
    """Stable JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def write_json(path, payload) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(payload), encoding="utf-8")
    return path


def write_csv(path, fieldnames: list, rows: list) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({name: row.get(name) for name in fieldnames})
    return path


# ---------------------------------------------------------------------------
# Cache helpers
# ---------------------------------------------------------------------------

def set_cache(key: str, data, timeout: int = None) -> bool:
    """Store data in the cache. Returns True on success, False on error."""
    try:
        cache.set(key, data, timeout=timeout if timeout is not None else CACHE_TTL)
        return True
    except Exception as e:
        logger.warning("[Cache] set_cache error for key=%s: %s", key, e)
        return False


def get_cache(key: str):
    """Retrieve data from the cache. Returns None on miss or error."""
    try:
        return cache.get(key)
    except Exception as e:
        logger.warning("[Cache] get_cache error for key=%s: %s", key, e)
        return None

