"""Tokenization and candidate-term extraction.

Field text is partitioned into candidate phrases at phrase delimiters
(punctuation, line breaks) and stop words; each maximal run of adjacent
substantive words becomes one candidate phrase, and the individual
lowercased words of those phrases are the index terms.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

__all__ = [
    "TokenKind",
    "Token",
    "CandidatePhrase",
    "StopList",
    "tokenize",
    "extract_candidates",
    "terms_of",
    "default_stoplist",
    "load_stoplist",
]


class TokenKind(enum.Enum):
    WORD = "Word"
    DELIMITER = "Delimiter"


@dataclass(frozen=True)
class Token:
    """One token of a field text.

    ``position`` is the 0-based word index: Word tokens number the words
    of the stream in order, and a Delimiter token carries the index the
    next word will take (so positions never decrease and are strictly
    increasing over Word tokens).
    """

    surface: str
    position: int
    kind: TokenKind

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


@dataclass(frozen=True)
class CandidatePhrase:
    """A maximal run of adjacent non-stop words, lowercased.

    All words of a phrase share the phrase position, which is the word
    index of its first word in the source stream.
    """

    words: tuple[str, ...]
    position: int
    field: str = ""


# Words are maximal runs of letters/digits with internal hyphens
# ("3D", "network-based"); underscores are delimiters.
_WORD_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*", re.UNICODE)

# Spaces/tabs silently separate words; line breaks are phrase delimiters.
_SEPARATORS = frozenset(" \t\f\v ")


def tokenize(text: str) -> list[Token]:
    """Split text into Word and Delimiter tokens.

    Word tokens are maximal runs of letters/digits/internal hyphens;
    every other non-space character (punctuation, symbols, newlines)
    lands in a Delimiter token, with consecutive delimiter characters
    merged into one token.  Runs of spaces separate words without
    emitting anything.
    """
    tokens: list[Token] = []
    word_index = 0
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch in _SEPARATORS or (ch.isspace() and ch not in "\n\r"):
            pos += 1
            continue
        match = _WORD_RE.match(text, pos)
        if match:
            tokens.append(Token(match.group(), word_index, TokenKind.WORD))
            word_index += 1
            pos = match.end()
            continue
        start = pos
        while pos < n:
            ch = text[pos]
            if ch in _SEPARATORS or (ch.isspace() and ch not in "\n\r"):
                break
            if _WORD_RE.match(text, pos):
                break
            pos += 1
        tokens.append(Token(text[start:pos], word_index, TokenKind.DELIMITER))
    return tokens


class StopList:
    """A set of lowercase stop words.

    Entries must be lowercase and contain no internal whitespace.
    """

    def __init__(self, words=()):
        cleaned = set()
        for word in words:
            if word != word.lower():
                raise ValueError(f"stop word must be lowercase: {word!r}")
            if any(c.isspace() for c in word):
                raise ValueError(f"stop word must not contain whitespace: {word!r}")
            if word:
                cleaned.add(word)
        self.words = frozenset(cleaned)

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    def __repr__(self) -> str:
        return f"StopList({len(self.words)} words)"

    @classmethod
    def from_file(cls, path) -> "StopList":
        """Load a stop list: one word per line, '#' lines are comments."""
        words = []
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            words.append(line.lower())
        return cls(words)


@lru_cache(maxsize=None)
def default_stoplist() -> StopList:
    """The bundled English stop list (classical SMART list)."""
    text = resources.files("rescat.data").joinpath("stopwords.txt").read_text("utf-8")
    words = [
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    ]
    return StopList(words)


def load_stoplist(path=None) -> StopList:
    """Load the stop list at ``path``, or the bundled default."""
    if path is None:
        return default_stoplist()
    return StopList.from_file(path)


def extract_candidates(
    tokens: list[Token], stoplist: StopList, field: str = ""
) -> list[CandidatePhrase]:
    """Partition a token stream into candidate phrases.

    The word sequence is split at every delimiter and at every stop word
    (matched case-insensitively); each maximal remaining run of adjacent
    words becomes one phrase with its words lowercased.  Stop words and
    delimiters appear in no phrase, and phrase order follows text order.
    """
    phrases: list[CandidatePhrase] = []
    run: list[str] = []
    run_start = 0

    def flush():
        nonlocal run
        if run:
            phrases.append(CandidatePhrase(tuple(run), run_start, field))
            run = []

    for token in tokens:
        if token.kind is TokenKind.DELIMITER:
            flush()
            continue
        word = token.surface.lower()
        if word in stoplist:
            flush()
            continue
        if not run:
            run_start = token.position
        run.append(word)
    flush()
    return phrases


def terms_of(phrases: list[CandidatePhrase]) -> Counter:
    """Flatten phrases into the term multiset that feeds TF counting.

    Every individual word of every phrase is one term occurrence;
    multiplicities are preserved.
    """
    counts: Counter = Counter()
    for phrase in phrases:
        counts.update(phrase.words)
    return counts
