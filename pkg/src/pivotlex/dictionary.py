"""Bilingual dictionary records and their tab-separated interchange format.

A dictionary is a list of (lexical unit, part of speech, sense) entries for
one ordered language pair. On disk it is a UTF-8 TSV file with LF line
endings, exactly three columns per line, no header and no escaping; tabs and
newlines are therefore forbidden inside fields. The POS column is one of
``n v a r -`` where ``-`` marks an entry whose part of speech is unknown.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import BinaryIO, Iterable

_LANG_RE = re.compile(r"[a-z]{3}")


class DictionaryFormatError(ValueError):
    """A dictionary file (or a value destined for one) violates the TSV format."""


def validate_language(code: str) -> str:
    """Check that ``code`` is a three-letter lowercase ISO 693-3 identifier."""
    if not isinstance(code, str) or not _LANG_RE.fullmatch(code):
        raise ValueError(
            f"invalid language code {code!r}: expected exactly 3 lowercase ASCII letters"
        )
    return code


class PartOfSpeech(Enum):
    """Word class of an entry; UNKNOWN marks input rows that carry no POS."""

    NOUN = "n"
    VERB = "v"
    ADJECTIVE = "a"
    ADVERB = "r"
    UNKNOWN = "-"

    @classmethod
    def from_tag(cls, tag: str) -> "PartOfSpeech":
        try:
            return cls(tag)
        except ValueError:
            raise ValueError(f"unknown POS tag {tag!r}: expected one of n, v, a, r, -") from None

    @property
    def tag(self) -> str:
        return self.value


def _check_field(value: str, what: str) -> str:
    value = value.strip()
    if not value:
        raise ValueError(f"{what} is empty after trimming")
    if "\t" in value or "\n" in value:
        raise ValueError(f"{what} {value!r} contains a tab or newline")
    return value


@dataclass(frozen=True)
class LexicalEntry:
    """One dictionary record: a headword with one sense in the target language.

    Fields are stored whitespace-trimmed; the sense may contain internal
    spaces (multiword expressions are legal).
    """

    lexical_unit: str
    pos: PartOfSpeech
    sense: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "lexical_unit", _check_field(self.lexical_unit, "lexical unit"))
        object.__setattr__(self, "sense", _check_field(self.sense, "sense"))
        if not isinstance(self.pos, PartOfSpeech):
            raise TypeError(f"pos must be a PartOfSpeech, got {self.pos!r}")

    @property
    def sort_key(self) -> tuple[str, str, str]:
        return (self.lexical_unit, self.pos.value, self.sense)


@dataclass(frozen=True)
class Dictionary:
    """An ordered, duplicate-free set of entries for one language pair.

    Entries are canonicalized on construction: exact duplicates collapse and
    the remainder is sorted by (lexical_unit, pos tag, sense) under code-point
    ordering, which is also the on-disk line order.
    """

    source: str
    target: str
    entries: tuple[LexicalEntry, ...]

    def __post_init__(self) -> None:
        validate_language(self.source)
        validate_language(self.target)
        canonical = tuple(sorted(set(self.entries), key=lambda e: e.sort_key))
        object.__setattr__(self, "entries", canonical)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class DictStats:
    entry_count: int
    distinct_lexical_units: int
    pos_missing_fraction: Fraction


def parse_dictionary(stream: BinaryIO, source: str, target: str) -> Dictionary:
    """Read the dictionary TSV format from a byte stream.

    Fields are whitespace-trimmed; byte-identical rows collapse to one entry.
    Raises DictionaryFormatError for non-UTF-8 input (with byte offset), a
    wrong column count, an unknown POS tag, or an empty field (all with the
    offending line number).
    """
    data = stream.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DictionaryFormatError(f"not valid UTF-8 at byte offset {exc.start}") from exc

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    entries = []
    for number, line in enumerate(lines, start=1):
        columns = line.split("\t")
        if len(columns) != 3:
            raise DictionaryFormatError(
                f"line {number}: expected 3 tab-separated columns, found {len(columns)}"
            )
        unit, tag, sense = (column.strip() for column in columns)
        try:
            pos = PartOfSpeech.from_tag(tag)
            entries.append(LexicalEntry(unit, pos, sense))
        except ValueError as exc:
            raise DictionaryFormatError(f"line {number}: {exc}") from exc
    return Dictionary(source, target, tuple(entries))


def write_dictionary(dictionary: Dictionary, stream: BinaryIO) -> None:
    """Emit the dictionary TSV format; parsing the output reproduces the input."""
    for entry in dictionary.entries:
        line = f"{entry.lexical_unit}\t{entry.pos.value}\t{entry.sense}\n"
        stream.write(line.encode("utf-8"))


def merge_dictionaries(a: Dictionary, b: Dictionary) -> Dictionary:
    """Union of two dictionaries for the same language pair."""
    if (a.source, a.target) != (b.source, b.target):
        raise ValueError(
            f"language pair mismatch: cannot merge {a.source}-{a.target} with {b.source}-{b.target}"
        )
    return Dictionary(a.source, a.target, a.entries + b.entries)


def dict_stats(d: Dictionary) -> DictStats:
    """Entry count, distinct headword count, and the fraction of POS-less entries."""
    total = len(d.entries)
    missing = sum(1 for e in d.entries if e.pos is PartOfSpeech.UNKNOWN)
    units = len({e.lexical_unit for e in d.entries})
    fraction = Fraction(missing, total) if total else Fraction(0)
    return DictStats(total, units, fraction)


def entries_from_rows(rows: Iterable[tuple[str, str, str]]) -> list[LexicalEntry]:
    """Build entries from (unit, pos-tag, sense) string triples."""
    return [LexicalEntry(unit, PartOfSpeech.from_tag(tag), sense) for unit, tag, sense in rows]
