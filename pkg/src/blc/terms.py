"""De Bruijn lambda terms and their self-delimiting binary code.

A term is an immutable tree built from three node kinds: ``Index(i)``
is a variable (de Bruijn index, counted from 1), ``Abs(body)`` an
abstraction, ``App(fun, arg)`` an application.  The binary code is the
prefix code

    Index(i)       ->  1^i 0
    Abs(body)      ->  00 <body>
    App(fun, arg)  ->  01 <fun> <arg>

and the size of a term is the bit length of its code: an index costs
i + 1 bits, an abstraction or application adds 2.  The smallest term is
``Index(1)`` at size 2; no term has size 0 or 1.

Bit strings are plain Python ``str`` over the characters '0' and '1'.
Every traversal here is iterative, so terms nested hundreds of levels
deep are handled without touching the interpreter recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

__all__ = [
    "Index",
    "Abs",
    "App",
    "Term",
    "DecodeError",
    "Truncated",
    "TrailingBits",
    "ParseError",
    "FreeIndexExceeded",
    "size",
    "encode",
    "decode",
    "max_free_index",
    "is_closed",
    "render",
    "parse_text",
]


class _TermBase:
    """Equality and hashing through the binary code.

    The code is injective over terms, so comparing codes is structural
    equality; doing it this way keeps both operations iterative, where
    the field-by-field comparison a dataclass generates would recurse
    once per nesting level and trip the interpreter limit on the deep
    terms the rest of this module happily supports.
    """

    __slots__ = ()

    def __eq__(self, other):
        if not isinstance(other, _TermBase):
            return NotImplemented
        return self is other or encode(self) == encode(other)

    def __hash__(self):
        return hash(encode(self))


@dataclass(frozen=True, slots=True, eq=False)
class Index(_TermBase):
    """Variable occurrence; ``i`` counts enclosing binders starting at 1."""

    i: int

    def __post_init__(self) -> None:
        if self.i < 1:
            raise ValueError(f"de Bruijn indices start at 1, got {self.i}")


@dataclass(frozen=True, slots=True, eq=False)
class Abs(_TermBase):
    body: "Term"


@dataclass(frozen=True, slots=True, eq=False)
class App(_TermBase):
    fun: "Term"
    arg: "Term"


Term = Union[Index, Abs, App]


class DecodeError(ValueError):
    """The input is not the code of any term."""


class Truncated(DecodeError):
    """The input ran out in the middle of a term."""


class TrailingBits(DecodeError):
    """A complete term was decoded but input bits remain."""


class ParseError(ValueError):
    """Text input does not parse as a term."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FreeIndexExceeded(ValueError):
    """A term refers to a free index above the permitted bound."""


def size(term: Term) -> int:
    """Bit length of ``encode(term)``, computed without building the code."""
    n = 0
    stack = [term]
    while stack:
        node = stack.pop()
        tp = type(node)
        if tp is Index:
            n += node.i + 1
        elif tp is Abs:
            n += 2
            stack.append(node.body)
        else:
            n += 2
            stack.append(node.fun)
            stack.append(node.arg)
    return n


def encode(term: Term) -> str:
    """Binary code of ``term`` as a '0'/'1' string."""
    parts: list[str] = []
    stack = [term]
    while stack:
        node = stack.pop()
        tp = type(node)
        if tp is Index:
            parts.append("1" * node.i + "0")
        elif tp is Abs:
            parts.append("00")
            stack.append(node.body)
        else:
            parts.append("01")
            stack.append(node.arg)
            stack.append(node.fun)
    return "".join(parts)


# Stack markers for decode: an abstraction waiting for its body, and an
# application whose function part is not finished yet.  A finished
# function part replaces the _APP marker until the argument completes.
_ABS = object()
_APP = object()


def decode(bits: str) -> Term:
    """Parse a binary code back into a term.

    Raises ``Truncated`` if the input stops mid-term, ``TrailingBits``
    if a complete term leaves input behind, and ``ValueError`` on
    characters other than '0' and '1'.  ``decode(encode(t)) == t`` for
    every term, and ``encode(decode(b)) == b`` whenever decode accepts.
    """
    if bits.count("0") + bits.count("1") != len(bits):
        raise ValueError("bit string may contain only '0' and '1'")
    n = len(bits)
    pos = 0
    stack: list = []
    while True:
        if pos >= n:
            raise Truncated(f"input ended inside a term (after {n} bits)")
        if bits[pos] == "0":
            pos += 1
            if pos >= n:
                raise Truncated(f"input ended inside a term (after {n} bits)")
            stack.append(_ABS if bits[pos] == "0" else _APP)
            pos += 1
            continue
        run = pos
        while run < n and bits[run] == "1":
            run += 1
        if run >= n:
            raise Truncated("index run of 1s is missing its terminating 0")
        term: Term = Index(run - pos)
        pos = run + 1
        # Fold the finished subterm into whatever is waiting on the stack.
        while True:
            if not stack:
                if pos != n:
                    raise TrailingBits(
                        f"term complete after {pos} bits, {n - pos} left over"
                    )
                return term
            top = stack[-1]
            if top is _ABS:
                stack.pop()
                term = Abs(term)
            elif top is _APP:
                stack[-1] = term
                break
            else:
                stack.pop()
                term = App(top, term)


def max_free_index(term: Term) -> int:
    """Largest free index in ``term`` (0 when the term is closed).

    An occurrence ``Index(i)`` under d enclosing binders is free iff
    i > d, and then refers to free slot i - d.
    """
    best = 0
    stack = [(term, 0)]
    while stack:
        node, depth = stack.pop()
        tp = type(node)
        if tp is Index:
            free = node.i - depth
            if free > best:
                best = free
        elif tp is Abs:
            stack.append((node.body, depth + 1))
        else:
            stack.append((node.fun, depth))
            stack.append((node.arg, depth))
    return best


def is_closed(term: Term) -> bool:
    return max_free_index(term) == 0


def render(term: Term) -> str:
    """Text form: ``\\`` binds an abstraction, ``(f a)`` an application,
    indices print as decimal numbers.  Inverse of ``parse_text``."""
    parts: list[str] = []
    stack: list = [term]
    while stack:
        node = stack.pop()
        tp = type(node)
        if tp is str:
            parts.append(node)
        elif tp is Index:
            parts.append(str(node.i))
        elif tp is Abs:
            parts.append("\\")
            stack.append(node.body)
        else:
            parts.append("(")
            stack.append(")")
            stack.append(node.arg)
            stack.append(" ")
            stack.append(node.fun)
    return "".join(parts)


def _tokens(text: str) -> Iterator[tuple[str, int]]:
    pos, n = 0, len(text)
    while pos < n:
        c = text[pos]
        if c.isspace():
            pos += 1
        elif c in "\\()":
            yield c, pos
            pos += 1
        elif c.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            yield text[start:pos], start
        else:
            raise ParseError(f"unexpected character {c!r}", pos)


def parse_text(text: str) -> Term:
    """Parse the text form produced by ``render``.

    Grammar: term ::= INDEX | '\\' term | '(' term term ')' with INDEX a
    decimal integer >= 1; whitespace between tokens is ignored.  Raises
    ``ParseError`` (with a position) on anything else.
    """
    toks = list(_tokens(text))
    k = 0
    # Stack entries: _ABS, _APP (function part pending), or a one-tuple
    # holding the finished function part of an application.
    stack: list = []
    while True:
        if k >= len(toks):
            raise ParseError("unexpected end of input", len(text))
        tok, pos = toks[k]
        k += 1
        if tok == "\\":
            stack.append(_ABS)
            continue
        if tok == "(":
            stack.append(_APP)
            continue
        if tok == ")":
            raise ParseError("unexpected ')'", pos)
        idx = int(tok)
        if idx < 1:
            raise ParseError("de Bruijn indices start at 1", pos)
        term: Term = Index(idx)
        while True:
            if not stack:
                if k != len(toks):
                    raise ParseError("trailing input after a complete term", toks[k][1])
                return term
            top = stack[-1]
            if top is _ABS:
                stack.pop()
                term = Abs(term)
            elif top is _APP:
                stack[-1] = (term,)
                break
            else:
                if k >= len(toks):
                    raise ParseError("expected ')'", len(text))
                ctok, cpos = toks[k]
                if ctok != ")":
                    raise ParseError("expected ')'", cpos)
                k += 1
                stack.pop()
                term = App(top[0], term)
