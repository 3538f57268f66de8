"""Rule-based sentence segmentation for cleaned Slovak text.

Splits after terminal .?! (plus closing quotes/brackets) when the next
non-space character starts a new sentence (uppercase or digit). Newlines are
hard boundaries. A Slovak abbreviation list plus a single-letter-initial rule
suppresses false splits after "Dr.", "J." and similar.
"""

from __future__ import annotations

import re

# common Slovak abbreviations that end with a period mid-sentence
SK_ABBREVIATIONS = frozenset(
    {
        "atď", "apod", "cca", "č", "čl", "doc", "dr", "hod", "ing", "judr",
        "kap", "km", "ks", "mgr", "mudr", "napr", "nápr", "obr", "odd",
        "odst", "phdr", "písm", "pod", "pozn", "prof", "príp", "resp",
        "rndr", "roč", "rsdr", "s", "st", "str", "sv", "t", "tab", "tel",
        "tis", "tj", "tzn", "tzv", "ul", "zb", "zv",
    }
)

_BOUNDARY_RE = re.compile(r"([.?!]+[\"'»›”’)\]]*)(\s+)")
_LAST_WORD_RE = re.compile(r"([\w]+)\.?$", re.UNICODE)


def _ends_with_abbreviation(chunk: str) -> bool:
    m = _LAST_WORD_RE.search(chunk)
    if m is None:
        return False
    word = m.group(1)
    if len(word) == 1 and word.isalpha():
        return True  # initials like "J. Novák"
    return word.lower() in SK_ABBREVIATIONS


def segment_sentences(text: str) -> list[str]:
    """Split text into sentences; empty sentences are dropped.

    The multiset of non-whitespace characters is preserved: boundaries only
    consume inter-sentence whitespace.
    """
    sentences: list[str] = []
    for line in text.split("\n"):
        start = 0
        for m in _BOUNDARY_RE.finditer(line):
            end = m.end(1)
            nxt = m.end(2)
            if nxt >= len(line):
                break
            follower = line[nxt]
            if not (follower.isupper() or follower.isdigit()):
                continue
            candidate = line[start:end]
            if candidate.rstrip()[-1:] == "." and _ends_with_abbreviation(
                candidate.rstrip().rstrip("\"'»›”’)]").rstrip(".")
            ) and "?" not in m.group(1) and "!" not in m.group(1):
                continue
            sentence = candidate.strip()
            if sentence:
                sentences.append(sentence)
            start = nxt
        tail = line[start:].strip()
        if tail:
            sentences.append(tail)
    return sentences
