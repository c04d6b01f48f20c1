"""Section maps of the multiplication map and the kernel-generator lists.

Tensor expressions are formal sums of scalar-weighted tuples of degree-1
basis symbols; they are kept syntactic on purpose.  The tensor module over
the degree-0 subalgebra has no canonical basis here, so no equality or
normal form is offered: expressions are only compared through their
evaluation under the multiplication map.

The degree-2 and degree-3 sections are given by the explicit rows for
supports of length >= 1; at torus supports they recurse literally into
the length-1 rows (the defining combination is checked to land in the
length-1 summands and evaluation stays citable, with no simplification).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graded import BasisSymbol, ExtAlgebra, GradedElement
from .hecke import HeckeElement
from .product import multiply
from .weyl import S1

__all__ = [
    "TensorExpression",
    "section_deg2",
    "section_deg3",
    "section_deg3_symmetric",
    "kernel_generators",
    "candidate_kernel_deg2",
]


@dataclass(frozen=True, eq=False)
class TensorExpression:
    """Formal sum of scalar-weighted tuples of degree-1 symbols.

    Deliberately syntactic: no equality, no normal form.  Two expressions
    are compared only through their evaluation under the multiplication
    map (the tensor module has no canonical basis here).
    """

    algebra: ExtAlgebra
    arity: int
    terms: tuple[tuple[int, tuple[BasisSymbol, ...]], ...]

    def __post_init__(self):
        for _, syms in self.terms:
            if len(syms) != self.arity:
                raise ValueError("mixed arities in tensor expression")
            if any(s.degree != 1 for s in syms):
                raise ValueError("tensor slots must be degree-1 symbols")

    @classmethod
    def from_terms(cls, alg: ExtAlgebra, arity: int, terms) -> "TensorExpression":
        p = alg.field.p
        clean = tuple((c % p, tuple(syms)) for c, syms in terms if c % p)
        return cls(alg, arity, clean)

    @classmethod
    def from_factors(cls, alg: ExtAlgebra, arity: int, factors) -> "TensorExpression":
        """Expand scalar-weighted tuples of degree-1 elements multilinearly."""
        terms = []
        for c, elements in factors:
            expanded = [(c, ())]
            for el in elements:
                if not el.is_homogeneous(1):
                    raise ValueError("tensor factors must be degree-1 elements")
                expanded = [
                    (cc * cs, syms + (s,))
                    for cc, syms in expanded
                    for s, cs in el.coeffs.items()
                ]
            terms.extend(expanded)
        return cls.from_terms(alg, arity, terms)

    def __add__(self, other: "TensorExpression") -> "TensorExpression":
        if self.arity != other.arity:
            raise ValueError("cannot add tensor expressions of different arity")
        return TensorExpression(self.algebra, self.arity, self.terms + other.terms)

    def scale(self, c: int) -> "TensorExpression":
        return TensorExpression.from_terms(
            self.algebra, self.arity, ((c * x, syms) for x, syms in self.terms)
        )

    def __neg__(self) -> "TensorExpression":
        return self.scale(-1)

    def evaluate(self) -> GradedElement:
        """Image under the multiplication map: left-to-right products."""
        alg = self.algebra
        total = alg.zero()
        for c, syms in self.terms:
            acc = alg.symbol_element(syms[0])
            for s in syms[1:]:
                if acc.is_zero:
                    break
                acc = multiply(acc, alg.symbol_element(s))
            total = total + acc.scale(c)
        return total

    def __repr__(self):
        if not self.terms:
            return "0 (tensor)"
        bits = []
        for c, syms in self.terms:
            body = " @ ".join(repr(s) for s in syms)
            bits.append(f"{c}*({body})")
        return " + ".join(bits)


def tensor_act(h: HeckeElement, t: TensorExpression, side: str) -> TensorExpression:
    """Apply a degree-0 element to the outer slot of every term."""
    alg = t.algebra
    terms = []
    for c, syms in t.terms:
        if side == "left":
            moved = alg.act_left(h, alg.symbol_element(syms[0]))
            terms.extend((c * cz, (z,) + syms[1:]) for z, cz in moved.coeffs.items())
        elif side == "right":
            moved = alg.act_right(alg.symbol_element(syms[-1]), h)
            terms.extend((c * cz, syms[:-1] + (z,)) for z, cz in moved.coeffs.items())
        else:
            raise ValueError("side must be 'left' or 'right'")
    return TensorExpression.from_terms(alg, t.arity, terms)


def tensor_involution(t: TensorExpression) -> TensorExpression:
    """The anti-involution on tensors: reverse slots with the permutation sign."""
    alg = t.algebra
    sign = -1 if (t.arity * (t.arity - 1) // 2) % 2 else 1
    terms = []
    for c, syms in t.terms:
        coeff = c * sign
        out = []
        for s in reversed(syms):
            cs, js = alg._symbol_involution(s)
            coeff *= cs
            out.append(js)
        terms.append((coeff, tuple(out)))
    return TensorExpression.from_terms(alg, t.arity, terms)


def tensor_uniformizer_conj(t: TensorExpression) -> TensorExpression:
    alg = t.algebra
    terms = []
    for c, syms in t.terms:
        coeff = c
        out = []
        for s in syms:
            cs, gs = alg._symbol_uniformizer_conj(s)
            coeff *= cs
            out.append(gs)
        terms.append((coeff, tuple(out)))
    return TensorExpression.from_terms(alg, t.arity, terms)


# --- the degree-2 section ---


def _section2_symbol(alg: ExtAlgebra, sym: BasisSymbol) -> TensorExpression:
    W = alg.weyl
    w = sym.support
    if w.length >= 1:
        j = w.word[0]
        b = lambda sign, supp: BasisSymbol(1, sign, supp)
        one = W.identity
        if j == S1:
            rows = {
                -1: (-1, (b(1, one), b(0, w))),
                0: (1, (b(1, one), b(-1, w))),
                1: (1, (b(0, W.s1), b(1, W.mul(W.inv(W.s1), w)))),
            }
        else:
            rows = {
                -1: (-1, (b(0, W.s0), b(-1, W.mul(W.inv(W.s0), w)))),
                0: (-1, (b(-1, one), b(1, w))),
                1: (1, (b(-1, one), b(0, w))),
            }
        c, syms = rows[sym.sign]
        return TensorExpression.from_terms(alg, 2, [(c, syms)])
    # torus support: recurse through the length-1 shift rows
    if sym.sign == -1:
        s, other_sign = W.s0, 1
    elif sym.sign == 1:
        s, other_sign = W.s1, -1
    else:
        raise ValueError("sign-0 symbols do not exist at torus supports")
    shifted = BasisSymbol(2, other_sign, W.mul(W.inv(s), w))
    combo = alg.act_left(alg.hecke.tau(s), alg.symbol_element(shifted)) + alg.symbol_element(sym)
    if combo.support_lengths() - {1}:
        raise AssertionError("shift combination must land in the length-1 summands")
    return _section2_element(alg, combo) + tensor_act(
        alg.hecke.tau(s), _section2_symbol(alg, shifted), "left"
    ).scale(-1)


def _section2_element(alg: ExtAlgebra, x: GradedElement) -> TensorExpression:
    out = TensorExpression.from_terms(alg, 2, [])
    for sym, c in x.coeffs.items():
        out = out + _section2_symbol(alg, sym).scale(c)
    return out


def section_deg2(x: GradedElement) -> TensorExpression:
    """A linear section of the degree-2 multiplication map."""
    if not x.is_homogeneous(2):
        raise ValueError("section_deg2 expects a degree-2 element")
    return _section2_element(x.algebra, x)


# --- the degree-3 section ---


def _section3_symbol(alg: ExtAlgebra, sym: BasisSymbol) -> TensorExpression:
    W = alg.weyl
    w = sym.support
    one = W.identity
    if w.length >= 1:
        j = w.word[0]
        if j == S1:
            syms = (
                BasisSymbol(1, 1, one),
                BasisSymbol(1, 0, W.s1),
                BasisSymbol(1, 1, W.mul(W.inv(W.s1), w)),
            )
            return TensorExpression.from_terms(alg, 3, [(1, syms)])
        syms = (
            BasisSymbol(1, -1, one),
            BasisSymbol(1, 0, W.s0),
            BasisSymbol(1, -1, W.mul(W.inv(W.s0), w)),
        )
        return TensorExpression.from_terms(alg, 3, [(-1, syms)])
    # torus support: (tau_{s0} + e_1) applied to the section one step down
    shifted = BasisSymbol(3, None, W.mul(W.inv(W.s0), w))
    h = alg.hecke.tau(W.s0) + alg.hecke.idempotent(0)
    return tensor_act(h, _section3_symbol(alg, shifted), "left")


def section_deg3(x: GradedElement) -> TensorExpression:
    """A linear section of the degree-3 multiplication map."""
    if not x.is_homogeneous(3):
        raise ValueError("section_deg3 expects a degree-3 element")
    alg = x.algebra
    out = TensorExpression.from_terms(alg, 3, [])
    for sym, c in x.coeffs.items():
        out = out + _section3_symbol(alg, sym).scale(c)
    return out


def section_deg3_symmetric(x: GradedElement) -> TensorExpression:
    """The section averaged with its conjugates under both involutions.

    Agrees with section_deg3 term by term on supports of length >= 1; at a
    torus support it is the 1/4-average of the four conjugates of the
    section at the identity, pushed over by the right torus action.  It
    commutes with both involutions.
    """
    if not x.is_homogeneous(3):
        raise ValueError("section_deg3_symmetric expects a degree-3 element")
    alg = x.algebra
    quarter = alg.field.inv(4)
    out = TensorExpression.from_terms(alg, 3, [])
    for sym, c in x.coeffs.items():
        w = sym.support
        if w.length >= 1:
            out = out + _section3_symbol(alg, sym).scale(c)
            continue
        base = _section3_symbol(alg, BasisSymbol(3, None, alg.weyl.identity))
        jbase = tensor_involution(base)
        avg = (
            base
            + tensor_uniformizer_conj(base)
            + jbase
            + tensor_uniformizer_conj(jbase)
        ).scale(quarter)
        out = out + tensor_act(alg.hecke.tau(w), avg, "right").scale(c)
    return out


# --- kernel generators ---


def candidate_kernel_deg2(alg: ExtAlgebra) -> list[TensorExpression]:
    """The fourteen degree-2 kernel generators (ten monomial pairs, two
    quadratic combinations, two mixed relations)."""
    W = alg.weyl
    one = W.identity
    bm = BasisSymbol(1, -1, one)
    bp = BasisSymbol(1, 1, one)
    bz0 = BasisSymbol(1, 0, W.s0)
    bz1 = BasisSymbol(1, 0, W.s1)
    t2 = lambda terms: TensorExpression.from_terms(alg, 2, terms)
    e_left = lambda m, c, s1, s2: tensor_act(
        alg.hecke.idempotent(m), t2([(c, (s1, s2))]), "left"
    )

    gens = [
        t2([(1, (bm, bm))]),
        t2([(1, (bp, bm))]),
        t2([(1, (bz1, bm))]),
        t2([(1, (bp, bz0))]),
        t2([(1, (bz1, bz0))]),
        t2([(1, (bm, bp))]),
        t2([(1, (bp, bp))]),
        t2([(1, (bz0, bp))]),
        t2([(1, (bm, bz1))]),
        t2([(1, (bz0, bz1))]),
    ]
    # the two quadratic combinations
    gens.append(
        t2([(1, (bz0, bz0))])
        + e_left(-1, 1, bm, bz0)
        + e_left(1, 1, bz0, bm)
        + e_left(0, -1, bm, BasisSymbol(1, 1, W.s0))
    )
    gens.append(
        t2([(1, (bz1, bz1))])
        + e_left(1, -1, bp, bz1)
        + e_left(-1, -1, bz1, bp)
        + e_left(0, -1, bp, BasisSymbol(1, -1, W.s1))
    )
    # the two mixed relations
    gens.append(
        t2([
            (1, (BasisSymbol(1, 1, W.s0), bz0)),
            (1, (bz0, BasisSymbol(1, -1, W.s0))),
        ])
    )
    gens.append(
        t2([
            (1, (BasisSymbol(1, -1, W.s1), bz1)),
            (1, (bz1, BasisSymbol(1, 1, W.s1))),
        ])
    )
    return gens


def kernel_generators(alg: ExtAlgebra) -> list[TensorExpression]:
    """The full generator list: fourteen in degree 2 plus one in degree 3."""
    W = alg.weyl
    one = W.identity
    gens = list(candidate_kernel_deg2(alg))
    t3 = lambda c, syms: TensorExpression.from_terms(alg, 3, [(c, syms)])
    part1 = tensor_act(
        alg.hecke.tau(W.s1) + alg.hecke.idempotent(0),
        t3(1, (BasisSymbol(1, 1, one), BasisSymbol(1, 0, W.inv(W.s1)), BasisSymbol(1, 1, one))),
        "left",
    )
    part0 = tensor_act(
        alg.hecke.tau(W.s0) + alg.hecke.idempotent(0),
        t3(1, (BasisSymbol(1, -1, one), BasisSymbol(1, 0, W.inv(W.s0)), BasisSymbol(1, -1, one))),
        "left",
    )
    gens.append(part1 + part0)
    return gens
