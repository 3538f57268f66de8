"""Document-cleaning steps for web-crawled Slovak text.

Steps, in fixed pipeline order:
  urls_emails -> punctuation -> markdown -> braces

Each step is idempotent on its own; the composed pipeline additionally
iterates to a fixed point because one step can expose input for an earlier
one (e.g. collapsing "http:://" to "http://" creates a URL after the URL
pass already ran).
"""

from __future__ import annotations

import re
import sys
import unicodedata
from dataclasses import dataclass, field

URL_PLACEHOLDER = "<url>"
EMAIL_PLACEHOLDER = "<email>"

STEP_URLS_EMAILS = "urls_emails"
STEP_PUNCT = "punctuation"
STEP_MARKDOWN = "markdown"
STEP_BRACES = "braces"
DEFAULT_STEPS = (STEP_URLS_EMAILS, STEP_PUNCT, STEP_MARKDOWN, STEP_BRACES)

_PUNCT_CATEGORIES = ("Pc", "Pd", "Ps", "Pe", "Pi", "Pf", "Po")
_IS_PUNCT = [unicodedata.category(chr(cp)).startswith("P") for cp in range(sys.maxunicode + 1)]

# scheme must not continue a word, so deletions elsewhere cannot splice a URL
# into an existing token
_URL_RE = re.compile(r"(?<![\w@])(?:https?://|www\.)\S+", re.IGNORECASE)
_EMAIL_RE = re.compile(r"(?<![\w.+-])[\w.+-]+@[\w-]+(?:\.[\w-]+)+")
_TRAILING_PUNCT_RE = re.compile(r"[.,!?;:)\"'\]}»›”’…]+$")

_SAME_CHAR_RUN_RE = re.compile(r"(.)\1+", re.DOTALL)

_MD_LINK_RE = re.compile(r"!?\[([^\[\]]*)\]\([^()\s]*\)")
_MD_CODE_FENCE_RE = re.compile(r"^\s*```.*$", re.MULTILINE)
_MD_HEADING_RE = re.compile(r"^(\s*)#{1,6}\s+", re.MULTILINE)
_MD_BULLET_RE = re.compile(r"^(\s*)[-*+]\s+", re.MULTILINE)
_MD_EMPHASIS_RE = re.compile(r"(\*{1,3}|_{1,3}|`)(\S(?:[^*_`]*?\S)?)\1")

_WS_RUN_RE = re.compile(r"\s+")


@dataclass
class CleanDocument:
    """Cleaned text plus the ordered list of step names that produced it."""

    text: str
    applied_steps: list[str] = field(default_factory=list)


def is_punct(ch: str) -> bool:
    return _IS_PUNCT[ord(ch)]


def replace_urls_emails(text: str) -> str:
    """Replace URL-shaped spans with <url> and email-shaped spans with <email>.

    Trailing sentence punctuation glued to a URL is kept outside the
    placeholder ("http://a.sk!!!" -> "<url>!!!").
    """

    def sub_url(m: re.Match) -> str:
        tail = _TRAILING_PUNCT_RE.search(m.group(0))
        return URL_PLACEHOLDER + (tail.group(0) if tail else "")

    text = _URL_RE.sub(sub_url, text)
    return _EMAIL_RE.sub(EMAIL_PLACEHOLDER, text)


def reduce_elongated_punct(text: str) -> str:
    """Collapse every run of >= 2 identical punctuation characters to one."""

    def sub_run(m: re.Match) -> str:
        return m.group(1) if is_punct(m.group(1)) else m.group(0)

    return _SAME_CHAR_RUN_RE.sub(sub_run, text)


def _strip_markdown_once(text: str) -> str:
    text = _MD_CODE_FENCE_RE.sub("", text)
    text = _MD_LINK_RE.sub(r"\1", text)
    text = _MD_HEADING_RE.sub(r"\1", text)
    text = _MD_BULLET_RE.sub(r"\1", text)
    text = _MD_EMPHASIS_RE.sub(r"\2", text)
    return text


def strip_markdown(text: str) -> str:
    """Remove markdown markers, keeping the visible text (link text kept,
    target dropped). Iterates until stable so nested markup cannot survive."""
    for _ in range(16):
        stripped = _strip_markdown_once(text)
        if stripped == text:
            return stripped
        text = stripped
    return text


def remove_braced_content(text: str) -> str:
    """Delete every outermost {...} span including the braces.

    Unmatched braces are dropped as lone characters, so the output never
    contains a brace.
    """
    out: list[str] = []
    depth = 0
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            if depth > 0:
                depth -= 1
        elif depth == 0:
            out.append(ch)
    return "".join(out)


_STEP_FUNCS = {
    STEP_URLS_EMAILS: replace_urls_emails,
    STEP_PUNCT: reduce_elongated_punct,
    STEP_MARKDOWN: strip_markdown,
    STEP_BRACES: remove_braced_content,
}


def clean_text(text: str, steps: tuple[str, ...] = DEFAULT_STEPS) -> CleanDocument:
    """Apply the selected cleaning steps in fixed pipeline order.

    `steps` may be any subset of DEFAULT_STEPS; unknown names raise
    ValueError. The composition runs to a fixed point (bounded) so that
    cleaning twice equals cleaning once.
    """
    unknown = [s for s in steps if s not in _STEP_FUNCS]
    if unknown:
        raise ValueError(f"unknown cleaning steps: {unknown}")
    ordered = [s for s in DEFAULT_STEPS if s in set(steps)]
    for _ in range(16):
        result = text
        for step in ordered:
            result = _STEP_FUNCS[step](result)
        if result == text:
            break
        text = result
    return CleanDocument(text=text, applied_steps=list(ordered))


def collapse_whitespace(text: str) -> str:
    """Final pipeline pass: squeeze whitespace runs to single spaces."""
    return _WS_RUN_RE.sub(" ", text).strip()
