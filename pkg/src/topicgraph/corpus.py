"""Tokenization, inverted index construction, and index persistence.

The index is the source of global document frequencies (DF) and of the
posting lists every query evaluation intersects. It is immutable after
build and safe to share across any number of reader threads.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
import re

TOKENIZER_VERSION = 1

INDEX_MAGIC = "TWGIDX"
INDEX_FORMAT_VERSION = 1

# Alphanumeric runs, Unicode-aware; underscore is a separator.
_WORD_RE = re.compile(r"[^\W_]+")

_MIN_TOKEN_LEN = 2


class DuplicateDocIdError(ValueError):
    """Two documents in one corpus share a doc_id."""


class CorruptIndexError(ValueError):
    """An index file could not be decoded completely and consistently."""


class IndexVersionError(ValueError):
    """An index file carries an unsupported format or tokenizer version."""


def _read_stopword_file(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


def stopword_list_hash(stopwords: frozenset[str]) -> str:
    """Hash of the semantic content of a stopword list (order-independent)."""
    payload = "\n".join(sorted(stopwords)).encode("utf-8")
    return hashlib.sha256(payload).hexdigest()


_default_stopwords: frozenset[str] | None = None


def default_stopwords() -> frozenset[str]:
    """The packaged English function-word list (see data/stopwords.txt)."""
    global _default_stopwords
    if _default_stopwords is None:
        text = resources.files("topicgraph.data").joinpath("stopwords.txt").read_text("utf-8")
        _default_stopwords = _read_stopword_file(text)
    return _default_stopwords


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a custom stopword list (one word per line, # comments)."""
    return _read_stopword_file(Path(path).read_text("utf-8"))


class Tokenizer:
    """Lowercasing word tokenizer with a fixed stopword list.

    Splits on any non-alphanumeric character, lowercases, then drops
    stopwords and tokens shorter than two characters. No stemming:
    surface forms are kept as they appear, so queries must use the same
    tokenizer as the index they run against.
    """

    version = TOKENIZER_VERSION

    def __init__(self, stopwords: frozenset[str] | None = None):
        self.stopwords = frozenset(stopwords) if stopwords is not None else default_stopwords()
        self.stopword_hash = stopword_list_hash(self.stopwords)

    def tokenize(self, text: str) -> list[str]:
        stop = self.stopwords
        out = []
        for match in _WORD_RE.finditer(text):
            token = match.group().lower()
            if len(token) >= _MIN_TOKEN_LEN and token not in stop:
                out.append(token)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tokenizer):
            return NotImplemented
        return self.version == other.version and self.stopwords == other.stopwords

    def __repr__(self) -> str:
        return f"Tokenizer(version={self.version}, stopwords={len(self.stopwords)})"


_default_tokenizer: Tokenizer | None = None


def default_tokenizer() -> Tokenizer:
    global _default_tokenizer
    if _default_tokenizer is None:
        _default_tokenizer = Tokenizer()
    return _default_tokenizer


def tokenize(text: str) -> list[str]:
    """Tokenize with the packaged stopword list."""
    return default_tokenizer().tokenize(text)


@dataclass(frozen=True)
class Document:
    """One corpus document. doc_id must be unique; title must be non-empty
    because the result list displays titles."""

    doc_id: int
    title: str
    body: str


@dataclass
class CorpusIndex:
    """Inverted index over a whole corpus.

    postings maps each word to the ascending, duplicate-free doc_ids
    containing it; df_global (DF) is the number of documents containing
    the word, always len(postings[word]). doc_words is the forward index
    (distinct words per document, sorted) used to compute per-query
    subset frequencies in time proportional to the retrieved set, and
    titles backs the search result list.
    """

    doc_count: int
    postings: dict[str, list[int]]
    df_global: dict[str, int]
    doc_words: dict[int, tuple[str, ...]]
    titles: dict[int, str]
    tokenizer: Tokenizer

    def df(self, word: str) -> int:
        return self.df_global.get(word, 0)

    @property
    def vocabulary_size(self) -> int:
        return len(self.postings)

    def top_df_words(self, limit: int = 10) -> list[tuple[str, int]]:
        """Most widespread words, DF descending then alphabetical."""
        ranked = sorted(self.df_global.items(), key=lambda kv: (-kv[1], kv[0]))
        return ranked[:limit]


def build_index(docs: list[Document] | tuple[Document, ...], tokenizer: Tokenizer | None = None) -> CorpusIndex:
    """Build the inverted index for a document sequence.

    DF counts documents, not occurrences: a word appearing five times in
    one document contributes one. Titles are indexed together with
    bodies. Raises DuplicateDocIdError naming the first repeated id.
    """
    tok = tokenizer if tokenizer is not None else default_tokenizer()
    postings: dict[str, list[int]] = {}
    titles: dict[int, str] = {}
    doc_words: dict[int, tuple[str, ...]] = {}
    for doc in docs:
        if doc.doc_id in titles:
            raise DuplicateDocIdError(f"duplicate doc_id {doc.doc_id}")
        titles[doc.doc_id] = doc.title
        words = sorted(set(tok.tokenize(doc.title)) | set(tok.tokenize(doc.body)))
        doc_words[doc.doc_id] = tuple(words)
        for word in words:
            postings.setdefault(word, []).append(doc.doc_id)
    for plist in postings.values():
        plist.sort()
    df_global = {word: len(plist) for word, plist in postings.items()}
    return CorpusIndex(
        doc_count=len(titles),
        postings=postings,
        df_global=df_global,
        doc_words=doc_words,
        titles=titles,
        tokenizer=tok,
    )


def index_equal(a: CorpusIndex, b: CorpusIndex) -> bool:
    """Field-by-field equality, used by the round-trip persistence tests."""
    return (
        a.doc_count == b.doc_count
        and a.postings == b.postings
        and a.df_global == b.df_global
        and a.doc_words == b.doc_words
        and a.titles == b.titles
        and a.tokenizer == b.tokenizer
    )


# Persistence. One JSON document per index: a magic marker and a format
# version, tokenizer metadata (version, stopword hash, and the stopword
# list itself so the artifact stays self-contained), titles, and the
# posting lists. df_global and doc_words are derived from postings on
# load, which keeps them consistent with the index invariants by
# construction. The full layout is documented in README.md.


def save_index(index: CorpusIndex, destination: str | Path) -> None:
    """Write the index as a single versioned JSON file."""
    payload = {
        "magic": INDEX_MAGIC,
        "format_version": INDEX_FORMAT_VERSION,
        "tokenizer_version": index.tokenizer.version,
        "stopword_hash": index.tokenizer.stopword_hash,
        "stopwords": sorted(index.tokenizer.stopwords),
        "doc_count": index.doc_count,
        "titles": [[doc_id, index.titles[doc_id]] for doc_id in sorted(index.titles)],
        "postings": {word: index.postings[word] for word in sorted(index.postings)},
    }
    Path(destination).write_text(json.dumps(payload, ensure_ascii=False), encoding="utf-8")


def load_index(source: str | Path) -> CorpusIndex:
    """Load an index saved by save_index.

    Raises CorruptIndexError for unreadable or inconsistent payloads and
    IndexVersionError for unsupported format or tokenizer versions. Never
    returns a partial index.
    """
    try:
        raw = Path(source).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise CorruptIndexError(f"{source}: not a text index file ({exc})") from exc
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CorruptIndexError(f"{source}: corrupt index payload ({exc})") from exc
    if not isinstance(payload, dict) or payload.get("magic") != INDEX_MAGIC:
        raise CorruptIndexError(f"{source}: missing {INDEX_MAGIC} magic header")
    if payload.get("format_version") != INDEX_FORMAT_VERSION:
        raise IndexVersionError(
            f"{source}: unsupported index format version {payload.get('format_version')!r}, "
            f"this build reads version {INDEX_FORMAT_VERSION}"
        )
    if payload.get("tokenizer_version") != TOKENIZER_VERSION:
        raise IndexVersionError(
            f"{source}: index was built with tokenizer version "
            f"{payload.get('tokenizer_version')!r}, this build uses {TOKENIZER_VERSION}; rebuild the index"
        )
    try:
        stopwords = frozenset(payload["stopwords"])
        recorded_hash = payload["stopword_hash"]
        doc_count = payload["doc_count"]
        titles = {int(doc_id): title for doc_id, title in payload["titles"]}
        postings = {word: [int(d) for d in plist] for word, plist in payload["postings"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptIndexError(f"{source}: corrupt index payload ({exc})") from exc
    if stopword_list_hash(stopwords) != recorded_hash:
        raise CorruptIndexError(f"{source}: stopword list does not match its recorded hash")
    if doc_count != len(titles):
        raise CorruptIndexError(f"{source}: doc_count {doc_count} != {len(titles)} stored titles")
    doc_word_lists: dict[int, list[str]] = {doc_id: [] for doc_id in titles}
    for word in sorted(postings):
        for doc_id in postings[word]:
            if doc_id not in doc_word_lists:
                raise CorruptIndexError(f"{source}: posting for {word!r} names unknown doc_id {doc_id}")
            doc_word_lists[doc_id].append(word)
    tokenizer = Tokenizer(stopwords)
    return CorpusIndex(
        doc_count=doc_count,
        postings=postings,
        df_global={word: len(plist) for word, plist in postings.items()},
        doc_words={doc_id: tuple(words) for doc_id, words in doc_word_lists.items()},
        titles=titles,
        tokenizer=tokenizer,
    )


def read_corpus_dir(path: str | Path) -> list[Document]:
    """Read one document per file: first line is the title, the rest the body.

    Files are taken in sorted name order and numbered from 0, so ingestion
    is deterministic. Raises ValueError for an empty directory or a file
    with an empty title line.
    """
    root = Path(path)
    if not root.is_dir():
        raise ValueError(f"not a directory: {root}")
    files = sorted(p for p in root.iterdir() if p.is_file())
    docs = []
    for doc_id, file in enumerate(files):
        text = file.read_text(encoding="utf-8")
        title, _, body = text.partition("\n")
        title = title.strip()
        if not title:
            raise ValueError(f"{file}: empty title line")
        docs.append(Document(doc_id=doc_id, title=title, body=body.strip()))
    if not docs:
        raise ValueError(f"no document files found in {root}")
    return docs


def read_corpus_jsonl(path: str | Path) -> list[Document]:
    """Read a line-delimited corpus: one JSON object per line with keys
    title and body, and an optional doc_id (defaults to the line number)."""
    docs = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                title = record["title"]
                body = record.get("body", "")
                doc_id = int(record.get("doc_id", lineno))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"{path}:{lineno + 1}: bad corpus record ({exc})") from exc
            if not str(title).strip():
                raise ValueError(f"{path}:{lineno + 1}: empty title")
            docs.append(Document(doc_id=doc_id, title=str(title), body=str(body)))
    if not docs:
        raise ValueError(f"no documents found in {path}")
    return docs
