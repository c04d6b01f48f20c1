"""The pro-p Iwahori-Weyl group of SL2(Qp) in normal form.

Elements are written uniquely as (a power of the fixed torus generator)
times an alternating word in the two simple reflections s0, s1.  The
reflections satisfy s0^2 = s1^2 = c, where c is the central torus element
of exponent (p-1)/2, and conjugating the torus generator by a reflection
inverts it.  Multiplication reduces words with a worklist of adjacent
equal-letter cancellations, each emitting one central c; every
cancellation strictly shortens the word, so reduction terminates and the
normal form is unique.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeff import PrimeField

__all__ = ["S0", "S1", "WeylElement", "WeylGroup"]

S0 = 0
S1 = 1
LETTER_NAMES = ("s0", "s1")


@dataclass(frozen=True)
class WeylElement:
    """Normal form: torus exponent mod p-1 plus an alternating word."""

    group: "WeylGroup" = field(compare=False, repr=False)
    exp: int = 0
    word: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.word)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.mul(self, other)

    def inverse(self) -> "WeylElement":
        return self.group.inv(self)

    def __repr__(self):
        letters = " ".join(LETTER_NAMES[l] for l in self.word)
        return f"w({self.exp};{(' ' + letters) if letters else ''})"


class WeylGroup:
    """Parent object carrying the modulus p - 1 and the element constructors."""

    def __init__(self, fld: PrimeField):
        self.field = fld
        self.n = fld.order          # torus exponents live mod p - 1
        self.half = self.n // 2     # exponent of the central element s_i^2
        self.identity = WeylElement(self, 0, ())
        self.s0 = WeylElement(self, 0, (S0,))
        self.s1 = WeylElement(self, 0, (S1,))

    def element(self, exp: int, word=()) -> WeylElement:
        word = tuple(word)
        for a, b in zip(word, word[1:]):
            if a == b:
                raise ValueError(f"word {word} is not alternating")
        if any(l not in (S0, S1) for l in word):
            raise ValueError(f"letters must be s0/s1, got {word}")
        return WeylElement(self, exp % self.n, word)

    def omega(self, exp: int) -> WeylElement:
        """The exp-th power of the torus generator."""
        return WeylElement(self, exp % self.n, ())

    def simple(self, i: int) -> WeylElement:
        return self.s0 if i == S0 else self.s1

    def from_letters(self, exp: int, letters) -> WeylElement:
        """Reduce an arbitrary letter string to normal form."""
        out = self.omega(exp)
        for l in letters:
            out = self.mul(out, self.simple(l))
        return out

    # --- group operations ---

    def mul(self, v: WeylElement, w: WeylElement) -> WeylElement:
        # pushing the torus part of w to the left flips its sign once per letter of v
        exp = v.exp + (w.exp if len(v.word) % 2 == 0 else -w.exp)
        left = list(v.word)
        right = list(w.word)
        k = 0
        while left and k < len(right) and left[-1] == right[k]:
            left.pop()
            k += 1
            exp += self.half
        return WeylElement(self, exp % self.n, tuple(left) + tuple(right[k:]))

    def inv(self, w: WeylElement) -> WeylElement:
        m = len(w.word)
        exp = m * self.half + (w.exp if m % 2 else -w.exp)
        return WeylElement(self, exp % self.n, w.word[::-1])

    def length(self, w: WeylElement) -> int:
        return len(w.word)

    def lengths_add(self, v: WeylElement, w: WeylElement) -> bool:
        """Whether l(vw) = l(v) + l(w); fails exactly when letters cancel."""
        return not (v.word and w.word and v.word[-1] == w.word[0])

    def uniformizer_conj(self, w: WeylElement) -> WeylElement:
        """Conjugation by the uniformizer: inverts the torus, swaps s0 <-> s1."""
        return WeylElement(self, (-w.exp) % self.n, tuple(1 - l for l in w.word))

    def unit_square(self, w: WeylElement) -> int:
        """The square u_w^2 in F_p of the torus unit attached to w.

        u_w is defined only up to the central sign, but its square is read
        off the normal-form torus exponent.
        """
        return self.field.root_pow(2 * w.exp)

    def __eq__(self, other):
        return isinstance(other, WeylGroup) and self.field == other.field

    def __hash__(self):
        return hash(("WeylGroup", self.field))

    def __repr__(self):
        return f"WeylGroup(p={self.field.p})"
