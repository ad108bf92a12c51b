"""Shear actions of the free group <a_k, b_k> on origami surfaces and tori.

``a_k`` is the horizontal shear ``(x, y) -> (x + k y, y)`` and ``b_k`` the
vertical shear ``(x, y) -> (x, y + k x)``.  On an origami the shear of a
square is computed in its horizontal (resp. vertical) unrolling, so after the
shear the point has crossed ``floor(s)`` vertical (resp. horizontal) sides.

Words are strings over ``a, A, b, B`` (capital = inverse) and act right to
left, like composition of maps.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import KNotAdmissible
from .surface import Surface, SurfacePoint, TorusPoint, covering_map

LETTERS = "aAbB"
INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
LETTER_NAMES = {"a": "A", "A": "AInv", "b": "B", "B": "BInv"}


@dataclass(frozen=True)
class Generator:
    letter: str  # one of a, A, b, B
    k: int

    def __post_init__(self):
        if self.letter not in INVERSE:
            raise ValueError(f"unknown generator letter {self.letter!r}")
        if self.k < 1:
            raise KNotAdmissible(f"k must be >= 1, got {self.k}")

    def inverse(self) -> "Generator":
        return Generator(INVERSE[self.letter], self.k)

    def matrix(self) -> np.ndarray:
        k = self.k
        return {
            "a": np.array([[1, k], [0, 1]]),
            "A": np.array([[1, -k], [0, 1]]),
            "b": np.array([[1, 0], [k, 1]]),
            "B": np.array([[1, 0], [-k, 1]]),
        }[self.letter]


def reduce_word(word: str) -> str:
    """Free reduction; idempotent."""
    out: list[str] = []
    for c in word:
        if c not in INVERSE:
            raise ValueError(f"bad letter {c!r} in word {word!r}")
        if out and out[-1] == INVERSE[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def inverse_word(word: str) -> str:
    return "".join(INVERSE[c] for c in reversed(word))


@dataclass(frozen=True)
class GroupWord:
    letters: str
    k: int

    def __post_init__(self):
        object.__setattr__(self, "letters", reduce_word(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(inverse_word(self.letters), self.k)


def admissible_k(surface: Surface) -> int:
    """Smallest admissible shear parameter: lcm of the orders of sigma and tau."""
    if surface.is_torus:
        return 1
    return math.lcm(surface.datum.sigma.order(), surface.datum.tau.order())


def check_k(surface: Surface, k: int) -> None:
    if k < 1 or (not surface.is_torus and k % admissible_k(surface)):
        raise KNotAdmissible(
            f"k={k} must be a positive multiple of lcm(ord sigma, ord tau)={admissible_k(surface)}"
        )


def _shear(surface: Surface, letter: str, k: int, sq: int, x: Fraction, y: Fraction):
    if letter == "a" or letter == "A":
        s = x + k * y if letter == "a" else x - k * y
        j = math.floor(s)
        return surface.canonical(surface.step_right(sq, j), s - j, y)
    s = y + k * x if letter == "b" else y - k * x
    j = math.floor(s)
    return surface.canonical(surface.step_up(sq, j), x, s - j)


def apply_generator(surface: Surface, gen: Generator, p: SurfacePoint) -> SurfacePoint:
    check_k(surface, gen.k)
    return _shear(surface, gen.letter, gen.k, p.square, Fraction(p.x), Fraction(p.y))


def apply_word(surface: Surface, word, p: SurfacePoint, k: int | None = None) -> SurfacePoint:
    """Apply ``word`` (a :class:`GroupWord` or a string with explicit ``k``), right to left."""
    if isinstance(word, GroupWord):
        letters, k = word.letters, word.k
    else:
        letters = word
        if k is None:
            raise ValueError("k is required for string words")
    check_k(surface, k)
    for c in reversed(letters):
        p = _shear(surface, c, k, p.square, Fraction(p.x), Fraction(p.y))
    return p


def grid_apply(surface: Surface, letter: str, k: int, n: int, p: tuple[int, int, int]) -> tuple[int, int, int]:
    """Integer-grid version of :func:`apply_generator` for the point ``(sq, a/n, b/n)``."""
    sq, a, b = p
    if letter == "a" or letter == "A":
        s = a + k * b if letter == "a" else a - k * b
        j, a = divmod(s, n)
        sq = surface.step_right(sq, j)
    else:
        s = b + k * a if letter == "b" else b - k * a
        j, b = divmod(s, n)
        sq = surface.step_up(sq, j)
    if a == 0 and b == 0:
        sq = surface.corner_rep[sq]
    return sq, a, b


# -- torus: the linear action and the affine SL2(Z) x Z^2 generators --------


def torus_shear(gen: Generator, q: TorusPoint) -> TorusPoint:
    (p, r), (s, t) = gen.matrix().tolist()
    x, y = Fraction(q.x), Fraction(q.y)
    nx, ny = p * x + r * y, s * x + t * y
    return TorusPoint(nx - math.floor(nx), ny - math.floor(ny))


@dataclass(frozen=True)
class AffineGen:
    """Affine map ``v -> M v + u`` with ``M`` in GL2(Z)."""

    matrix: tuple[tuple[int, int], tuple[int, int]]
    translation: tuple[int, int] = (0, 0)

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        if a * d - b * c not in (1, -1):
            raise ValueError(f"determinant of {self.matrix} is not +-1")

    def __matmul__(self, other: "AffineGen") -> "AffineGen":
        # (self @ other)(v) = self(other(v))
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        u, w = other.translation
        return AffineGen(
            ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)),
            (a * u + b * w + self.translation[0], c * u + d * w + self.translation[1]),
        )

    def inverse(self) -> "AffineGen":
        (a, b), (c, d) = self.matrix
        det = a * d - b * c
        inv = ((d * det, -b * det), (-c * det, a * det))
        u, w = self.translation
        tu = -(inv[0][0] * u + inv[0][1] * w)
        tw = -(inv[1][0] * u + inv[1][1] * w)
        return AffineGen(inv, (tu, tw))

    def apply_mod(self, x: int, y: int, n: int) -> tuple[int, int]:
        (a, b), (c, d) = self.matrix
        u, w = self.translation
        return (a * x + b * y + u) % n, (c * x + d * y + w) % n


IDENTITY = AffineGen(((1, 0), (0, 1)))
T1 = AffineGen(((1, 0), (0, 1)), (1, 0))
T2 = AffineGen(((1, 0), (0, 1)), (0, 1))
T3 = AffineGen(((1, 1), (0, 1)))
T4 = AffineGen(((0, -1), (1, 0)))


def torus_affine_apply(gen: AffineGen, p, n: int | None = None):
    """Apply ``gen`` to a :class:`TorusPoint` (mod 1) or to ``(x, y)`` in Z_n^2."""
    if isinstance(p, TorusPoint):
        (a, b), (c, d) = gen.matrix
        u, w = gen.translation
        x, y = Fraction(p.x), Fraction(p.y)
        nx, ny = a * x + b * y + u, c * x + d * y + w
        return TorusPoint(nx - math.floor(nx), ny - math.floor(ny))
    if n is None:
        raise ValueError("n is required for points of Z_n^2")
    return gen.apply_mod(p[0], p[1], n)


def equivariance_check(surface: Surface, gen: Generator, p: SurfacePoint) -> bool:
    """Whether the covering map intertwines the surface and torus actions at ``p``."""
    lhs = covering_map(surface, apply_generator(surface, gen, p))
    rhs = torus_shear(gen, covering_map(surface, p))
    return lhs == rhs


def f2_ball(R: int) -> list[str]:
    """All reduced words of length <= R in shortlex order over ``a, A, b, B``."""
    if R < 0:
        raise ValueError("R must be >= 0")
    layers = [[""]]
    for _ in range(R):
        nxt = []
        for w in layers[-1]:
            for c in LETTERS:
                if w and w[-1] == INVERSE[c]:
                    continue
                nxt.append(w + c)
        layers.append(nxt)
    return [w for layer in layers for w in layer]


def f2_ball_size(R: int) -> int:
    return 1 + sum(4 * 3 ** (l - 1) for l in range(1, R + 1))


def orbit(surface: Surface, k: int, p: SurfacePoint, max_len: int | None = None) -> set[SurfacePoint]:
    """Points reachable from ``p`` by words of length <= ``max_len`` (full orbit if None)."""
    check_k(surface, k)
    seen = {p}
    frontier = deque([(p, 0)])
    while frontier:
        q, d = frontier.popleft()
        if max_len is not None and d >= max_len:
            continue
        for c in LETTERS:
            r = _shear(surface, c, k, q.square, q.x, q.y)
            if r not in seen:
                seen.add(r)
                frontier.append((r, d + 1))
    return seen


def orbit_word(surface: Surface, k: int, p: SurfacePoint, target: SurfacePoint) -> str | None:
    """A shortest word ``w`` with ``w . p == target``, or None if not in the orbit."""
    check_k(surface, k)
    parent: dict[SurfacePoint, tuple[SurfacePoint, str] | None] = {p: None}
    frontier = deque([p])
    while frontier:
        q = frontier.popleft()
        if q == target:
            word = ""
            while parent[q] is not None:
                q, c = parent[q]
                word += c
            # letters were collected last-applied first, i.e. already left-to-right
            return word
        for c in LETTERS:
            r = _shear(surface, c, k, q.square, q.x, q.y)
            if r not in parent:
                parent[r] = (q, c)
                frontier.append(r)
    return None


def parse_word(text: str, k: int) -> GroupWord:
    return GroupWord(text.strip(), k)


def words_csv(words: Sequence[str]) -> str:
    return "word,length\n" + "".join(f"{w},{len(w)}\n" for w in words)


def orbit_csv(points: Iterable[SurfacePoint]) -> str:
    rows = ["square,xnum,xden,ynum,yden"]
    for p in sorted(points):
        rows.append(f"{p.square},{p.x.numerator},{p.x.denominator},{p.y.numerator},{p.y.denominator}")
    return "\n".join(rows) + "\n"
