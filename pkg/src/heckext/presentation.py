"""The seven-generator finite presentation and its evaluation homomorphism.

Free words live over the alphabet {T_w0, T_s0, T_s1, B_m, B_p, B_z0,
B_z1}; no relations are applied at this level.  Normalization in the
quotient is performed by evaluating into the concrete model: the machine
checks are that every relator evaluates to zero and that every basis
symbol is hit by an explicit word (constructive surjectivity).

The free idempotents mirror the concrete ones.  Their summation bound is
configurable: the default 'p-2' sums over the p-1 torus classes; the
alternative reading 'p-1' adds one more power of the torus generator,
which double-counts the identity class and makes the quadratic relators
fail to vanish.  The verification suites distinguish the two.
"""

from __future__ import annotations

from .graded import BasisSymbol, ExtAlgebra, GradedElement
from .product import multiply
from .sections import TensorExpression, _section2_symbol, _section3_symbol
from .weyl import S0, S1, WeylElement

__all__ = [
    "LETTERS",
    "LETTER_NAMES",
    "FreeElement",
    "free_letter",
    "free_one",
    "free_idempotent",
    "generator_images",
    "evaluate",
    "hecke_relators",
    "bimodule_relators",
    "kernel_relators",
    "all_relators",
    "word_for_basis",
]

T_W0, T_S0, T_S1, B_M, B_P, B_Z0, B_Z1 = range(7)
LETTERS = (T_W0, T_S0, T_S1, B_M, B_P, B_Z0, B_Z1)
LETTER_NAMES = ("T_w0", "T_s0", "T_s1", "B_m", "B_p", "B_z0", "B_z1")


class FreeElement:
    """k-linear combination of words in the seven presentation letters."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: ExtAlgebra, coeffs: dict):
        self.algebra = algebra
        self.coeffs = coeffs

    @classmethod
    def make(cls, algebra: ExtAlgebra, coeffs: dict) -> "FreeElement":
        p = algebra.field.p
        return cls(algebra, {w: c % p for w, c in coeffs.items() if c % p})

    def __add__(self, other: "FreeElement") -> "FreeElement":
        p = self.algebra.field.p
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = (out.get(w, 0) + c) % p
            if v:
                out[w] = v
            elif w in out:
                del out[w]
        return FreeElement(self.algebra, out)

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + other.scale(-1)

    def __neg__(self) -> "FreeElement":
        return self.scale(-1)

    def scale(self, c: int) -> "FreeElement":
        p = self.algebra.field.p
        c %= p
        if not c:
            return FreeElement(self.algebra, {})
        return FreeElement(self.algebra, {w: (c * x) % p for w, x in self.coeffs.items()})

    def __mul__(self, other: "FreeElement") -> "FreeElement":
        p = self.algebra.field.p
        out: dict = {}
        for wa, ca in self.coeffs.items():
            for wb, cb in other.coeffs.items():
                w = wa + wb
                v = (out.get(w, 0) + ca * cb) % p
                if v:
                    out[w] = v
                elif w in out:
                    del out[w]
        return FreeElement(self.algebra, out)

    def __pow__(self, n: int) -> "FreeElement":
        if n < 0:
            raise ValueError("free words have no inverses")
        acc = free_one(self.algebra)
        for _ in range(n):
            acc = acc * self
        return acc

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def word_count(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FreeElement)
            and self.algebra.same_parameters(other.algebra)
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for word, c in sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0])):
            name = "*".join(LETTER_NAMES[l] for l in word) if word else "1"
            bits.append(f"{c}*{name}")
        return " + ".join(bits)


def free_letter(alg: ExtAlgebra, letter: int) -> FreeElement:
    return FreeElement(alg, {(letter,): 1})


def free_one(alg: ExtAlgebra) -> FreeElement:
    return FreeElement(alg, {(): 1})


def free_idempotent(alg: ExtAlgebra, m: int, bound: str = "p-2") -> FreeElement:
    """The free-algebra mirror of the torus idempotent for id^m.

    bound 'p-2' sums i = 0 .. p-2 (one term per torus class); 'p-1' sums
    one power further, double-counting the identity class.
    """
    if bound not in ("p-2", "p-1"):
        raise ValueError(f"bound must be 'p-2' or 'p-1', got {bound!r}")
    F = alg.field
    top = F.p - 2 if bound == "p-2" else F.p - 1
    coeffs: dict = {}
    for i in range(top + 1):
        word = (T_W0,) * i
        coeffs[word] = (coeffs.get(word, 0) - F.root_pow(-m * i)) % F.p
    return FreeElement(alg, {w: c for w, c in coeffs.items() if c})


def generator_images(alg: ExtAlgebra) -> dict[int, GradedElement]:
    W = alg.weyl
    return {
        T_W0: alg.tau(W.omega(1)),
        T_S0: alg.tau(W.s0),
        T_S1: alg.tau(W.s1),
        B_M: alg.beta(-1, W.identity),
        B_P: alg.beta(1, W.identity),
        B_Z0: alg.beta(0, W.s0),
        B_Z1: alg.beta(0, W.s1),
    }


def evaluate(f: FreeElement) -> GradedElement:
    """Substitute the concrete generators and multiply left to right."""
    alg = f.algebra
    images = generator_images(alg)
    total = alg.zero()
    for word, c in f.coeffs.items():
        acc = alg.one()
        for letter in word:
            acc = multiply(acc, images[letter])
            if acc.is_zero:
                break
        total = total + acc.scale(c)
    return total


# --- the relator lists ---


def hecke_relators(alg: ExtAlgebra, bound: str = "p-2") -> list[FreeElement]:
    """Five relators presenting the degree-0 subalgebra."""
    p = alg.field.p
    tw = free_letter(alg, T_W0)
    ts0 = free_letter(alg, T_S0)
    ts1 = free_letter(alg, T_S1)
    one = free_one(alg)
    eps1 = free_idempotent(alg, 0, bound)
    return [
        tw ** (p - 1) - one,
        tw * ts0 - ts0 * tw ** (p - 2),
        tw * ts1 - ts1 * tw ** (p - 2),
        ts0 * ts0 + eps1 * ts0,
        ts1 * ts1 + eps1 * ts1,
    ]


def bimodule_relators(alg: ExtAlgebra, bound: str = "p-2") -> list[FreeElement]:
    """Sixteen relators presenting degree 1 as a bimodule over degree 0."""
    p = alg.field.p
    F = alg.field
    tw = free_letter(alg, T_W0)
    ts0 = free_letter(alg, T_S0)
    ts1 = free_letter(alg, T_S1)
    bm = free_letter(alg, B_M)
    bp = free_letter(alg, B_P)
    bz0 = free_letter(alg, B_Z0)
    bz1 = free_letter(alg, B_Z1)
    eps1 = free_idempotent(alg, 0, bound)
    eps_id = free_idempotent(alg, 1, bound)
    eps_idinv = free_idempotent(alg, -1, bound)
    half = (p - 1) // 2
    qs0 = ts0 + eps1
    qs1 = ts1 + eps1
    usq = F.root_pow(2)
    uinv = F.root_pow(-2)
    return [
        ts1 * bm,
        ts0 * bp,
        bp * ts0,
        bm * ts1,
        qs0 * bm * qs0 + (eps_id * bz0).scale(2) + tw ** half * bp,
        qs1 * bp * qs1 - (eps_idinv * bz1).scale(2) + tw ** half * bm,
        ts0 * bz1 + bz0 * ts1,
        ts1 * bz0 + bz1 * ts0,
        qs0 * bz0 + eps_id * ts0 * bm,
        qs1 * bz1 - eps_idinv * ts1 * bp,
        bz0 * qs0 + eps_idinv * bm * ts0,
        bz1 * qs1 - eps_id * bp * ts1,
        tw * bm - (bm * tw).scale(uinv),
        tw * bp - (bp * tw).scale(usq),
        tw * bz0 - bz0 * tw ** (p - 2),
        tw * bz1 - bz1 * tw ** (p - 2),
    ]


def kernel_relators(alg: ExtAlgebra, bound: str = "p-2") -> list[FreeElement]:
    """Fifteen relators lifting the kernel generators of the tensor algebra."""
    tw = free_letter(alg, T_W0)
    ts0 = free_letter(alg, T_S0)
    ts1 = free_letter(alg, T_S1)
    bm = free_letter(alg, B_M)
    bp = free_letter(alg, B_P)
    bz0 = free_letter(alg, B_Z0)
    bz1 = free_letter(alg, B_Z1)
    eps1 = free_idempotent(alg, 0, bound)
    eps_id = free_idempotent(alg, 1, bound)
    eps_idinv = free_idempotent(alg, -1, bound)
    qs0 = ts0 + eps1
    qs1 = ts1 + eps1
    return [
        bm * bm,
        bp * bm,
        bz1 * bm,
        bm * bp,
        bp * bp,
        bz0 * bp,
        bp * bz0,
        bz1 * bz0,
        bm * bz1,
        bz0 * bz1,
        bz0 * bz0 + eps_idinv * bm * bz0 + eps_id * bz0 * bm + eps1 * bm * ts0 * bm,
        bz1 * bz1 - eps_id * bp * bz1 - eps_idinv * bz1 * bp + eps1 * bp * ts1 * bp,
        bz0 * bm * ts0 - ts0 * bm * bz0,
        bz1 * bp * ts1 - ts1 * bp * bz1,
        qs1 * bp * bz1 * bp + qs0 * bm * bz0 * bm,
    ]


def all_relators(alg: ExtAlgebra, bound: str = "p-2") -> list[tuple[str, FreeElement]]:
    """All 36 relators, with stable names."""
    out = []
    for idx, r in enumerate(hecke_relators(alg, bound), start=1):
        out.append((f"deg0_{idx:02d}", r))
    for idx, r in enumerate(bimodule_relators(alg, bound), start=1):
        out.append((f"bimodule_{idx:02d}", r))
    for idx, r in enumerate(kernel_relators(alg, bound), start=1):
        out.append((f"kernel_{idx:02d}", r))
    return out


# --- constructive surjectivity ---


def _word_for_weyl(alg: ExtAlgebra, w: WeylElement) -> FreeElement:
    """The canonical spanning word for tau_w."""
    word: tuple[int, ...] = (T_W0,) * w.exp
    for letter in w.word:
        word = word + ((T_S0,) if letter == S0 else (T_S1,))
    return FreeElement(alg, {word: 1})


def _word_for_tensor(alg: ExtAlgebra, t: TensorExpression) -> FreeElement:
    out = FreeElement(alg, {})
    for c, syms in t.terms:
        acc = free_one(alg)
        for s in syms:
            acc = acc * word_for_basis(alg, s)
        out = out + acc.scale(c)
    return out


def word_for_basis(alg: ExtAlgebra, sym: BasisSymbol) -> FreeElement:
    """A free word evaluating to the given basis symbol."""
    if sym.degree == 0:
        return _word_for_weyl(alg, sym.support)
    if sym.degree == 1:
        c, left, g, right = alg.factor_through_generators(sym)
        gletter = {
            (-1, 0): B_M,
            (1, 0): B_P,
            (0, S0): B_Z0,
            (0, S1): B_Z1,
        }[(g.sign, g.support.word[0] if g.sign == 0 else 0)]
        word = (
            _word_for_weyl(alg, left)
            * free_letter(alg, gletter)
            * _word_for_weyl(alg, right)
        )
        return word.scale(c)
    if sym.degree == 2:
        return _word_for_tensor(alg, _section2_symbol(alg, sym))
    return _word_for_tensor(alg, _section3_symbol(alg, sym))
