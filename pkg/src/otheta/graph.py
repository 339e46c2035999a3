"""The single-vertex 2-graph semigroup F_theta^+.

Blue letters e_1..e_m and red letters f_1..f_n satisfy e_i f_j = f_j' e_i'
whenever theta(i, j) = (i', j').  Every element has a unique blue-first
normal form, represented here as a :class:`Word`.  All indices are 1-based.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "ThetaSpec", "ThetaSpecError", "Degree", "DegreeDiff", "Word", "Letter", "EMPTY",
    "normalize", "concat", "factor", "red_first", "enumerate_words", "words_up_to",
    "parse_letters", "word", "parse_theta_text", "format_theta_text", "load_theta", "theta_family",
]


class ThetaSpecError(ValueError):
    pass


@dataclass(frozen=True)
class ThetaSpec:
    """A permutation theta of {1..m} x {1..n}.

    ``table[(i-1)*n + (j-1)]`` holds theta(i, j).
    """

    m: int
    n: int
    table: tuple[tuple[int, int], ...]
    name: str = field(default="custom", compare=False)
    _inv: tuple[tuple[int, int], ...] = field(default=(), compare=False, repr=False)
    _hash: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        m, n = self.m, self.n
        if m < 1 or n < 1:
            raise ThetaSpecError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
        if len(self.table) != m * n:
            raise ThetaSpecError(f"theta must have {m * n} entries, got {len(self.table)}")
        inv: list = [None] * (m * n)
        for pos, (i2, j2) in enumerate(self.table):
            if not (1 <= i2 <= m and 1 <= j2 <= n):
                raise ThetaSpecError(f"image ({i2},{j2}) out of range")
            slot = (i2 - 1) * n + (j2 - 1)
            if inv[slot] is not None:
                raise ThetaSpecError(f"theta is not injective: ({i2},{j2}) hit twice")
            inv[slot] = (pos // n + 1, pos % n + 1)
        object.__setattr__(self, "_inv", tuple(inv))
        object.__setattr__(self, "_hash", hash((m, n, self.table)))

    def __hash__(self):
        return self._hash

    @classmethod
    def from_mapping(cls, m: int, n: int, mapping: Mapping[tuple[int, int], tuple[int, int]],
                     name: str = "custom") -> "ThetaSpec":
        table = []
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if (i, j) not in mapping:
                    raise ThetaSpecError(f"theta({i},{j}) is missing")
                i2, j2 = mapping[(i, j)]
                table.append((int(i2), int(j2)))
        if len(mapping) != m * n:
            raise ThetaSpecError("mapping has entries outside {1..m} x {1..n}")
        return cls(m, n, tuple(table), name=name)

    @classmethod
    def identity(cls, m: int, n: int) -> "ThetaSpec":
        return cls(m, n, tuple((i, j) for i in range(1, m + 1) for j in range(1, n + 1)), name="id")

    @classmethod
    def flip(cls, m: int, n: int | None = None) -> "ThetaSpec":
        n = m if n is None else n
        if m != n:
            raise ThetaSpecError(f"flip requires m == n, got m={m}, n={n}")
        return cls(m, m, tuple((j, i) for i in range(1, m + 1) for j in range(1, m + 1)), name="flip")

    @classmethod
    def random(cls, m: int, n: int, rng: random.Random) -> "ThetaSpec":
        cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
        images = cells[:]
        rng.shuffle(images)
        return cls(m, n, tuple(images), name="random")

    def __call__(self, i: int, j: int) -> tuple[int, int]:
        return self.table[(i - 1) * self.n + (j - 1)]

    def inv(self, i: int, j: int) -> tuple[int, int]:
        return self._inv[(i - 1) * self.n + (j - 1)]

    @property
    def forward(self) -> dict[tuple[int, int], tuple[int, int]]:
        return {(p // self.n + 1, p % self.n + 1): img for p, img in enumerate(self.table)}

    @property
    def inverse(self) -> dict[tuple[int, int], tuple[int, int]]:
        return {(p // self.n + 1, p % self.n + 1): pre for p, pre in enumerate(self._inv)}

    def is_identity(self) -> bool:
        return self == ThetaSpec.identity(self.m, self.n)

    def __str__(self):
        return f"{self.name}(m={self.m}, n={self.n})"


class Degree(NamedTuple):
    blue: int
    red: int

    def plus(self, other) -> "Degree":
        return Degree(self.blue + other[0], self.red + other[1])

    def minus(self, other) -> "Degree":
        return Degree(self.blue - other[0], self.red - other[1])

    def join(self, other) -> "Degree":
        return Degree(max(self.blue, other[0]), max(self.red, other[1]))

    def leq(self, other) -> bool:
        return self.blue <= other[0] and self.red <= other[1]

    def size(self) -> int:
        return self.blue + self.red


class DegreeDiff(NamedTuple):
    """d(u) - d(v) for a pair of words; may be negative."""

    x: int
    y: int


class Letter(NamedTuple):
    color: str  # "e" (blue) or "f" (red)
    index: int

    def __str__(self):
        return f"{self.color}{self.index}"


class Word(NamedTuple):
    """Blue-first normal form: ``e_{blues} f_{reds}``."""

    blues: tuple[int, ...] = ()
    reds: tuple[int, ...] = ()

    @property
    def degree(self) -> Degree:
        return Degree(len(self.blues), len(self.reds))

    @property
    def length(self) -> int:
        return len(self.blues) + len(self.reds)

    def letters(self) -> list[Letter]:
        return [Letter("e", i) for i in self.blues] + [Letter("f", j) for j in self.reds]

    def is_empty(self) -> bool:
        return not self.blues and not self.reds

    def __str__(self):
        return " ".join(str(x) for x in self.letters()) or "∅"


EMPTY = Word((), ())


def _check_index(color: str, idx: int, theta: ThetaSpec):
    bound = theta.m if color == "e" else theta.n
    if not 1 <= idx <= bound:
        raise IndexError(f"letter {color}{idx} out of range (1..{bound})")


def normalize(letters: Iterable, theta: ThetaSpec) -> Word:
    """Rewrite a letter sequence to blue-first normal form.

    Each blue letter is pushed left through the red letters already seen,
    using f_j' e_i' -> e_i f_j with (i, j) = theta^{-1}(i', j').
    """
    blues: list[int] = []
    reds: list[int] = []
    inv = theta.inv
    for color, idx in letters:
        if color not in ("e", "f"):
            raise ValueError(f"unknown letter colour {color!r}")
        _check_index(color, idx, theta)
        if color == "f":
            reds.append(idx)
            continue
        i = idx
        for pos in range(len(reds) - 1, -1, -1):
            i, reds[pos] = inv(i, reds[pos])
        blues.append(i)
    return Word(tuple(blues), tuple(reds))


def red_first(blues: Sequence[int], reds: Sequence[int], theta: ThetaSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rewrite e_{blues} f_{reds} as f_{reds'} e_{blues'}; returns (reds', blues')."""
    B = list(blues)
    out = []
    fwd = theta
    for j in reds:
        for pos in range(len(B) - 1, -1, -1):
            B[pos], j = fwd(B[pos], j)
        out.append(j)
    return tuple(out), tuple(B)


@lru_cache(maxsize=1 << 20)
def concat(w1: Word, w2: Word, theta: ThetaSpec) -> Word:
    if not w2.blues:
        return Word(w1.blues, w1.reds + w2.reds)
    if not w1.reds:
        return Word(w1.blues + w2.blues, w2.reds)
    reds = list(w1.reds)
    inv = theta.inv
    moved = []
    for i in w2.blues:
        for pos in range(len(reds) - 1, -1, -1):
            i, reds[pos] = inv(i, reds[pos])
        moved.append(i)
    return Word(w1.blues + tuple(moved), tuple(reds) + w2.reds)


@lru_cache(maxsize=1 << 20)
def factor(w: Word, p: tuple[int, int], theta: ThetaSpec) -> tuple[Word, Word]:
    """The unique (w1, w2) with d(w1) = p and w1 w2 = w."""
    k1, l1 = p
    k, l = len(w.blues), len(w.reds)
    if not (0 <= k1 <= k and 0 <= l1 <= l):
        raise ValueError(f"prefix degree {tuple(p)} exceeds word degree {(k, l)}")
    B, R = w.blues, w.reds
    reds_mid, blues_mid = red_first(B[k1:], R[:l1], theta)
    return Word(B[:k1], reds_mid), Word(blues_mid, R[l1:])


@lru_cache(maxsize=4096)
def _enumerate(k: int, l: int, m: int, n: int) -> tuple[Word, ...]:
    return tuple(Word(b, r) for b in product(range(1, m + 1), repeat=k)
                 for r in product(range(1, n + 1), repeat=l))


def enumerate_words(p: tuple[int, int], theta: ThetaSpec) -> tuple[Word, ...]:
    """All words of degree p in lexicographic order (blues, then reds)."""
    k, l = p
    if k < 0 or l < 0:
        return ()
    return _enumerate(k, l, theta.m, theta.n)


def words_up_to(maxdeg: tuple[int, int], theta: ThetaSpec) -> list[Word]:
    """All words w with d(w) <= maxdeg componentwise, grouped by degree."""
    out: list[Word] = []
    for k in range(maxdeg[0] + 1):
        for l in range(maxdeg[1] + 1):
            out.extend(enumerate_words((k, l), theta))
    return out


def parse_letters(text: str, theta: ThetaSpec | None = None) -> list[Letter]:
    letters = []
    for tok in text.split():
        if len(tok) < 2 or tok[0] not in "ef" or not tok[1:].isdigit():
            raise ValueError(f"bad letter {tok!r}; expected e<i> or f<j>")
        letter = Letter(tok[0], int(tok[1:]))
        if theta is not None:
            _check_index(letter.color, letter.index, theta)
        letters.append(letter)
    return letters


def word(text: str, theta: ThetaSpec) -> Word:
    """Normal form of a space-separated letter string such as ``"f1 e2"``."""
    return normalize(parse_letters(text, theta), theta)


# theta-spec text format ----------------------------------------------------

def parse_theta_text(text: str) -> ThetaSpec:
    lines = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ThetaSpecError("empty theta spec")
    no, head = lines[0]
    try:
        m, n = (int(t) for t in head.split())
    except ValueError:
        raise ThetaSpecError(f"line {no}: expected 'm n', got {head!r}") from None
    body = lines[1:]
    if len(body) != m * n:
        raise ThetaSpecError(f"expected {m * n} mapping lines, got {len(body)}")
    mapping: dict[tuple[int, int], tuple[int, int]] = {}
    for no, ln in body:
        parts = ln.split()
        try:
            i, j, i2, j2 = (int(t) for t in parts)
        except ValueError:
            raise ThetaSpecError(f"line {no}: expected 'i j i' j'', got {ln!r}") from None
        if not (1 <= i <= m and 1 <= j <= n):
            raise ThetaSpecError(f"line {no}: pair ({i},{j}) out of range")
        if (i, j) in mapping:
            raise ThetaSpecError(f"line {no}: duplicate pair ({i},{j})")
        mapping[(i, j)] = (i2, j2)
    return ThetaSpec.from_mapping(m, n, mapping, name="file")


def format_theta_text(theta: ThetaSpec) -> str:
    rows = [f"{theta.m} {theta.n}"]
    for (i, j), (i2, j2) in sorted(theta.forward.items()):
        rows.append(f"{i} {j} {i2} {j2}")
    return "\n".join(rows) + "\n"


def load_theta(source: str, m: int | None = None, n: int | None = None) -> ThetaSpec:
    """Resolve a builtin name ("id", "flip") or a path to a theta-spec file."""
    if source in ("id", "flip"):
        if m is None or n is None:
            raise ThetaSpecError(f"builtin theta {source!r} needs --m and --n")
        return ThetaSpec.identity(m, n) if source == "id" else ThetaSpec.flip(m, n)
    path = Path(source)
    if not path.is_file():
        raise ThetaSpecError(f"no such theta spec file or builtin: {source!r}")
    theta = parse_theta_text(path.read_text())
    if (m is not None and m != theta.m) or (n is not None and n != theta.n):
        raise ThetaSpecError(f"file defines m={theta.m}, n={theta.n}; conflicts with --m/--n")
    return theta


def theta_family(m: int, n: int, random_count: int = 10, seed: int = 0) -> list[ThetaSpec]:
    """id, flip (when m == n), then ``random_count`` seeded random permutations."""
    family = [ThetaSpec.identity(m, n)]
    if m == n:
        family.append(ThetaSpec.flip(m))
    rng = random.Random(f"theta-{m}-{n}-{seed}")
    family.extend(ThetaSpec.random(m, n, rng) for _ in range(random_count))
    return family
