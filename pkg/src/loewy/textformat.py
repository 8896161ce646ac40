"""Plain-text lattice documents.

Grammar (one directive per line, ``#`` starts a comment, tokens are
separated by any amount of whitespace)::

    document := "lattice" NAME NEWLINE
                "elements" LABEL+ NEWLINE
                ("covers" (LABEL "<" LABEL)* NEWLINE)*
    LABEL    := any run of characters other than whitespace, "<" and "#"

A ``covers`` line may be omitted (one-element lattice) or repeated.  Spaces
around ``<`` are allowed.  Several documents may follow each other in one
file; each starts at its ``lattice`` line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .core import FiniteLattice, LatticeError, NotALattice, NotAPoset, build_from_covers

_LABEL = r"[^\s<#]+"
_COVER = re.compile(rf"\s*({_LABEL})\s*<\s*({_LABEL})")


class DocumentError(ValueError):
    """Parse or build failure with a source position (1-based)."""

    code = "syntax"
    exit_code = 2

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line, self.col, self.message = line, col, message
        where = f"line {line}, col {col}: " if line else ""
        super().__init__(where + message)


class DocumentSyntaxError(DocumentError):
    code = "syntax"


class DuplicateElement(DocumentError):
    code = "duplicate-element"


class UnknownElement(DocumentError):
    code = "unknown-element"


class ValidationError(DocumentError):
    """A well-formed document whose covers do not describe a bounded lattice."""

    exit_code = 3

    def __init__(self, cause: LatticeError, message: str, line: int = 0, col: int = 0):
        self.code = cause.code
        self.cause = cause
        super().__init__(message, line, col)


@dataclass(frozen=True)
class LatticeDocument:
    name: str
    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]
    # source positions of covers, for error reporting; not part of equality
    positions: tuple[tuple[int, int], ...] = ()
    line: int = 0

    def __eq__(self, other):
        if not isinstance(other, LatticeDocument):
            return NotImplemented
        return (self.name, self.elements, self.covers) == (other.name, other.elements, other.covers)

    def __hash__(self):
        return hash((self.name, self.elements, self.covers))


def _strip(line: str) -> str:
    return line.split("#", 1)[0]


def parse_many(text: str) -> list[LatticeDocument]:
    docs: list[LatticeDocument] = []
    current = None  # [name, elements, covers, positions, header_line]
    seen_elements = False

    def close():
        if current is None:
            return
        if not seen_elements:
            raise DocumentSyntaxError("missing 'elements' line", current[4], 1)
        docs.append(LatticeDocument(current[0], tuple(current[1]), tuple(current[2]),
                                    tuple(current[3]), current[4]))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip(raw)
        if not body.strip():
            continue
        col = len(body) - len(body.lstrip()) + 1
        stripped = body.strip()
        keyword = stripped.split()[0]
        rest = stripped[len(keyword):]
        rest_col = col + len(keyword)  # column of rest[0]
        if keyword == "lattice":
            close()
            names = rest.split()
            if len(names) != 1:
                raise DocumentSyntaxError("expected exactly one lattice name", lineno, col)
            current = [names[0], [], [], [], lineno]
            seen_elements = False
        elif current is None:
            raise DocumentSyntaxError(f"expected 'lattice NAME' before '{keyword}'", lineno, col)
        elif keyword == "elements":
            if seen_elements:
                raise DocumentSyntaxError("second 'elements' line", lineno, col)
            seen_elements = True
            for m in re.finditer(r"\S+", rest):
                label = m.group()
                where = rest_col + m.start()
                if "<" in label:
                    raise DocumentSyntaxError(f"'<' not allowed in element label {label!r}", lineno, where)
                if label in current[1]:
                    raise DuplicateElement(f"element {label!r} declared twice", lineno, where)
                current[1].append(label)
            if not current[1]:
                raise DocumentSyntaxError("'elements' needs at least one label", lineno, col)
        elif keyword == "covers":
            if not seen_elements:
                raise DocumentSyntaxError("'covers' before 'elements'", lineno, col)
            pos = 0
            while rest[pos:].strip():
                m = _COVER.match(rest, pos)
                if m is None:
                    bad = pos + len(rest[pos:]) - len(rest[pos:].lstrip())
                    raise DocumentSyntaxError("expected a cover 'a<b'", lineno, rest_col + bad)
                for g in (1, 2):
                    if m.group(g) not in current[1]:
                        raise UnknownElement(f"undeclared element {m.group(g)!r}",
                                             lineno, rest_col + m.start(g))
                current[2].append((m.group(1), m.group(2)))
                current[3].append((lineno, rest_col + m.start(1)))
                pos = m.end()
        else:
            raise DocumentSyntaxError(f"unknown directive {keyword!r}", lineno, col)
    close()
    if not docs:
        raise DocumentSyntaxError("no 'lattice' document found", 1, 1)
    return docs


def parse(text: str) -> LatticeDocument:
    docs = parse_many(text)
    if len(docs) != 1:
        raise DocumentSyntaxError(f"expected one document, found {len(docs)}", docs[1].line, 1)
    return docs[0]


def format_document(doc: LatticeDocument) -> str:
    lines = [f"lattice {doc.name}", "elements " + " ".join(doc.elements)]
    if doc.covers:
        lines.append("covers " + " ".join(f"{a}<{b}" for a, b in doc.covers))
    return "\n".join(lines) + "\n"


def to_lattice(doc: LatticeDocument) -> FiniteLattice:
    index = {label: i for i, label in enumerate(doc.elements)}
    covers = [(index[a], index[b]) for a, b in doc.covers]
    try:
        return build_from_covers(covers, len(doc.elements), doc.elements)
    except LatticeError as exc:
        line, col = doc.line, 1
        message = str(exc)
        involved = None
        if isinstance(exc, NotALattice):
            a, b = (doc.elements[i] for i in exc.pair)
            message = f"elements {a} and {b} have no unique {exc.operation}"
        elif isinstance(exc, NotAPoset) and exc.element is not None:
            involved = exc.element
            message = f"cycle through element {doc.elements[involved]}"
        if involved is not None:
            for (lo, hi), where in zip(covers, doc.positions):
                if involved in (lo, hi):
                    line, col = where
                    break
        raise ValidationError(exc, message, line, col) from exc


def from_lattice(L: FiniteLattice, name: str) -> LatticeDocument:
    covers = tuple((L.labels[a], L.labels[b]) for a, b in L.covers())
    return LatticeDocument(name, tuple(L.labels), covers)
