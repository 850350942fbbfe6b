"""Ordered alphabets, words and Lyndon-Shirshov words.

Letters are single characters. An :class:`Alphabet` fixes their total order
(position in the alphabet string); words compare lexicographically with a
proper prefix sorting before its extensions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Union

from .errors import AlphabetError, ParseError


@dataclass(frozen=True)
class Alphabet:
    letters: str

    def __post_init__(self) -> None:
        if not self.letters:
            raise AlphabetError("alphabet must be nonempty")
        if len(set(self.letters)) != len(self.letters):
            raise AlphabetError(f"alphabet {self.letters!r} repeats a letter")

    @classmethod
    def default(cls, text: str) -> "Alphabet":
        """Codepoint order over the distinct letters of ``text``."""
        return cls("".join(sorted(set(text))))

    @cached_property
    def _rank(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.letters)}

    def rank(self, letter: str) -> int:
        try:
            return self._rank[letter]
        except KeyError:
            raise AlphabetError(f"letter {letter!r} not in alphabet {self.letters!r}") from None

    def key(self, text: str) -> tuple[int, ...]:
        """Sort key realising lexicographic order for strings over this alphabet."""
        return tuple(self.rank(c) for c in text)

    def __contains__(self, letter: object) -> bool:
        return letter in self._rank

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True, order=False)
class Word:
    text: str
    alphabet: Alphabet

    def __post_init__(self) -> None:
        if not self.text:
            raise AlphabetError("words must be nonempty")
        for c in self.text:
            if c not in self.alphabet:
                raise AlphabetError(f"letter {c!r} not in alphabet {self.alphabet.letters!r}")

    @classmethod
    def of(cls, text: str, alphabet: Alphabet | str | None = None) -> "Word":
        return cls(text, _alphabet(alphabet, text))

    @property
    def key(self) -> tuple[int, ...]:
        return self.alphabet.key(self.text)

    def content(self) -> "Content":
        return Content.of(self.text)

    def __lt__(self, other: "Word") -> bool:
        return lex_compare(self, other) < 0

    def __le__(self, other: "Word") -> bool:
        return lex_compare(self, other) <= 0

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[str]:
        return iter(self.text)

    def __str__(self) -> str:
        return self.text


WordLike = Union[Word, str]


def _alphabet(alphabet: Alphabet | str | None, text: str = "") -> Alphabet:
    if alphabet is None:
        return Alphabet.default(text)
    if isinstance(alphabet, Alphabet):
        return alphabet
    return Alphabet(alphabet)


def as_word(w: WordLike, alphabet: Alphabet | str | None = None) -> Word:
    if isinstance(w, Word):
        if alphabet is not None and _alphabet(alphabet) != w.alphabet:
            return Word(w.text, _alphabet(alphabet))
        return w
    return Word.of(w, alphabet)


@dataclass(frozen=True)
class Content:
    """Multiset of letters, stored as ``(letter, multiplicity)`` pairs sorted by letter."""

    counts: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for letter, m in self.counts:
            if len(letter) != 1:
                raise AlphabetError(f"letters are single characters, got {letter!r}")
            if m < 1:
                raise AlphabetError(f"multiplicity of {letter!r} must be positive")
            if letter in seen:
                raise AlphabetError(f"letter {letter!r} listed twice")
            seen.add(letter)

    @classmethod
    def of(cls, letters: Iterable[str]) -> "Content":
        return cls(tuple(sorted(Counter(letters).items())))

    @classmethod
    def parse(cls, text: str) -> "Content":
        """Parse ``a:3,b:3``."""
        counts: dict[str, int] = {}
        try:
            for part in text.split(","):
                letter, _, mult = part.strip().partition(":")
                letter = letter.strip()
                if letter in counts:
                    raise ParseError(f"letter {letter!r} repeated in content {text!r}")
                counts[letter] = int(mult)
            return cls(tuple(sorted(counts.items())))
        except (ValueError, AlphabetError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad content {text!r}: expected e.g. 'a:3,b:3'") from exc

    @property
    def total(self) -> int:
        return sum(m for _, m in self.counts)

    @property
    def letters(self) -> str:
        return "".join(letter for letter, _ in self.counts)

    def as_counter(self) -> Counter:
        return Counter(dict(self.counts))

    def __str__(self) -> str:
        return ",".join(f"{letter}:{m}" for letter, m in self.counts)


def lex_compare(u: WordLike, v: WordLike, alphabet: Alphabet | str | None = None) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    if isinstance(u, Word) and isinstance(v, Word):
        if u.alphabet != v.alphabet:
            raise AlphabetError("cannot compare words over different alphabets")
        alpha = u.alphabet
    else:
        texts = str(u) + str(v)
        alpha = next((x.alphabet for x in (u, v) if isinstance(x, Word)), None)
        alpha = _alphabet(alphabet, texts) if alpha is None else alpha
    ku, kv = alpha.key(str(u)), alpha.key(str(v))
    return (ku > kv) - (ku < kv)


def cyclic_permutations(w: WordLike) -> list[str]:
    """Rotations of ``w`` other than ``w`` itself, in order of letters moved."""
    s = str(w)
    return [s[i:] + s[:i] for i in range(1, len(s))]


def is_lyndon(w: WordLike, alphabet: Alphabet | str | None = None) -> bool:
    word = as_word(w, alphabet)
    key = word.key
    alpha = word.alphabet
    return all(key < alpha.key(r) for r in cyclic_permutations(word.text))


def _duval(k: int, n: int) -> Iterator[list[int]]:
    """Lyndon words of length <= n over ``range(k)``, in lexicographic order."""
    w = [-1]
    while w:
        w[-1] += 1
        yield w
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


def enumerate_lyndon_by_length(alphabet: Alphabet | str, n: int) -> list[str]:
    """All Lyndon-Shirshov words of length exactly ``n``, lexicographically ordered."""
    alpha = _alphabet(alphabet)
    if n < 1:
        raise ValueError("length must be positive")
    letters = alpha.letters
    return ["".join(letters[i] for i in w) for w in _duval(len(letters), n) if len(w) == n]


def enumerate_lyndon_by_content(
    content: Content | str, alphabet: Alphabet | str | None = None
) -> list[str]:
    """All Lyndon-Shirshov words with exactly the multiset ``content``."""
    if isinstance(content, str):
        content = Content.parse(content)
    if content.total < 1:
        raise ValueError("content must be nonempty")
    alpha = _alphabet(alphabet, content.letters)
    # restrict generation to the letters present, kept in alphabet order
    sub = "".join(c for c in alpha.letters if c in set(content.letters))
    for c in content.letters:
        alpha.rank(c)
    target = content.as_counter()
    n = content.total
    out = []
    for w in _duval(len(sub), n):
        if len(w) == n:
            text = "".join(sub[i] for i in w)
            if Counter(text) == target:
                out.append(text)
    return out


def brute_force_lyndon(alphabet: Alphabet | str, n: int) -> list[str]:
    """Filter all ``k**n`` words through :func:`is_lyndon`. Reference only."""
    from itertools import product

    alpha = _alphabet(alphabet)
    return [
        "".join(p) for p in product(alpha.letters, repeat=n) if is_lyndon("".join(p), alpha)
    ]
