"""Runtime settings read from the environment."""

from __future__ import annotations

import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass

from .errors import PreconditionError

logger = logging.getLogger(__name__)

ENV_DEFAULT_TERMS = "TOPO_DEFAULT_TERMS"
DEFAULT_TERMS = 1000
MAX_TERMS = 1_000_000


@dataclass(frozen=True)
class Settings:
    default_terms: int = DEFAULT_TERMS


def load_settings(environ: Mapping[str, str] | None = None) -> Settings:
    env = os.environ if environ is None else environ
    raw = env.get(ENV_DEFAULT_TERMS)
    if raw is None or not raw.strip():
        return Settings()
    text = raw.strip()
    if not text.isdigit() or len(text) > 7 or not 1 <= int(text) <= MAX_TERMS:
        msg = (
            f"{ENV_DEFAULT_TERMS} must be an integer between 1 and {MAX_TERMS}, "
            f"got {raw!r}"
        )
        raise PreconditionError(msg)
    logger.debug("default truncation %s from %s", text, ENV_DEFAULT_TERMS)
    return Settings(default_terms=int(text))
