"""Language identifiers and validation.

A language id is a two-letter lowercase ASCII code.  Only languages with
an embedded stemmer can take part in a run.
"""

import re

from .errors import ConfigurationError
from .stemming import SUPPORTED_LANGUAGES

_LANG_RE = re.compile(r"^[a-z]{2}$")


def is_language_code(code: str) -> bool:
    """True if `code` is syntactically a two-letter lowercase id."""
    return bool(_LANG_RE.match(code))


def check_language(code: str, configured=None) -> str:
    """Validate `code`; optionally also require membership in `configured`.

    Raises ConfigurationError for malformed or unsupported codes.
    """
    if not is_language_code(code):
        raise ConfigurationError(f"malformed language code {code!r}")
    if code not in SUPPORTED_LANGUAGES:
        raise ConfigurationError(
            f"unsupported language {code!r} (supported: {', '.join(sorted(SUPPORTED_LANGUAGES))})"
        )
    if configured is not None and code not in configured:
        raise ConfigurationError(f"language {code!r} is not part of this run")
    return code


def pair_slug(a: str, b: str) -> str:
    """Canonical (alphabetical) file-name slug for an unordered language pair."""
    return f"{min(a, b)}-{max(a, b)}"
