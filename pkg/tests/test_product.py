"""Product tests, including an independent exterior-algebra oracle for the
within-summand cup product at supports of positive length."""

import itertools
import random

import pytest

from heckext.graded import BasisSymbol
from heckext.product import cup_summand, duality_pairing, multiply
from heckext.weyl import S0, S1

from test_graded import rand_hecke, rand_symbol, rand_weyl

# wedge monomials on three letters m < z < p, with Koszul signs
_WEDGE_FORM = {
    (0, None): (1, ()),
    (1, -1): (1, (0,)),
    (1, 0): (1, (1,)),
    (1, 1): (1, (2,)),
    (2, 0): (-1, (0, 2)),   # alpha^0 = beta^+ wedge beta^-
    (2, -1): (1, (1, 2)),   # alpha^- = beta^0 wedge beta^+
    (2, 1): (1, (0, 1)),    # alpha^+ = beta^- wedge beta^0
    (3, None): (1, (0, 1, 2)),
}
_FROM_WEDGE = {monomial: (sign, key) for key, (sign, monomial) in _WEDGE_FORM.items()}


def wedge(m1, m2):
    """Concatenate and sort with the permutation sign; repeated letters give 0."""
    letters = list(m1 + m2)
    if len(set(letters)) != len(letters):
        return 0, ()
    sign = 1
    for i in range(len(letters)):
        for j in range(len(letters) - 1 - i):
            if letters[j] > letters[j + 1]:
                letters[j], letters[j + 1] = letters[j + 1], letters[j]
                sign = -sign
    return sign, tuple(letters)


def cup_oracle(alg, a, b):
    """Exterior-algebra cup product for supports of length >= 1."""
    ca, ma = _WEDGE_FORM[(a.degree, a.sign)]
    cb, mb = _WEDGE_FORM[(b.degree, b.sign)]
    s, m = wedge(ma, mb)
    if s == 0:
        return alg.zero()
    cr, key = _FROM_WEDGE[m]
    degree, sign = key
    coeff = ca * cb * s * cr  # cr is +-1, so it equals its own inverse
    return alg.symbol_element(BasisSymbol(degree, sign, a.support)).scale(coeff)


class TestCupSummand:
    def test_matches_exterior_oracle_on_positive_length(self, alg5):
        W = alg5.weyl
        w = W.element(1, (S0, S1))
        kinds = list(_WEDGE_FORM)
        for ka, kb in itertools.product(kinds, kinds):
            a = BasisSymbol(ka[0], ka[1], w)
            b = BasisSymbol(kb[0], kb[1], w)
            assert cup_summand(alg5, a, b) == cup_oracle(alg5, a, b), (ka, kb)

    def test_known_relations(self, alg5):
        w = alg5.weyl.element(0, (S1,))
        assert cup_summand(alg5, BasisSymbol(1, 1, w), BasisSymbol(1, -1, w)) == alg5.alpha(0, w)
        assert cup_summand(alg5, BasisSymbol(1, 0, w), BasisSymbol(1, 1, w)) == alg5.alpha(-1, w)
        assert cup_summand(alg5, BasisSymbol(1, -1, w), BasisSymbol(1, 0, w)) == alg5.alpha(1, w)
        # the triple product collapses to phi
        bz_bp = cup_summand(alg5, BasisSymbol(1, 0, w), BasisSymbol(1, 1, w))
        (sym, c), = bz_bp.coeffs.items()
        total = cup_summand(alg5, BasisSymbol(1, -1, w), sym).scale(c)
        assert total == alg5.phi(w)

    def test_torus_support_degree1_squares_vanish(self, alg5):
        one = alg5.weyl.identity
        bm = BasisSymbol(1, -1, one)
        bp = BasisSymbol(1, 1, one)
        for a, b in ((bm, bm), (bp, bp), (bm, bp), (bp, bm)):
            assert cup_summand(alg5, a, b).is_zero

    def test_torus_support_dual_rule(self, alg5):
        omega = alg5.weyl.omega(3)
        for sa in (-1, 1):
            for sb in (-1, 1):
                got = cup_summand(alg5, BasisSymbol(1, sa, omega), BasisSymbol(2, sb, omega))
                expected = alg5.phi(omega) if sa == sb else alg5.zero()
                assert got == expected

    def test_mismatched_support_rejected(self, alg5):
        W = alg5.weyl
        with pytest.raises(ValueError):
            cup_summand(alg5, BasisSymbol(1, -1, W.s0), BasisSymbol(1, 0, W.s1))

    def test_graded_commutative(self, alg7):
        rng = random.Random(67)
        for _ in range(150):
            w = rand_weyl(rng, alg7.weyl, 4)
            da = rng.randint(0, 3)
            db = rng.randint(0, 3)
            a = rand_symbol(rng, alg7, da, 0)
            b = rand_symbol(rng, alg7, db, 0)
            a = BasisSymbol(a.degree, a.sign, w) if not (a.sign == 0 and w.length == 0) else a
            b = BasisSymbol(b.degree, b.sign, w) if not (b.sign == 0 and w.length == 0) else b
            if a.support != b.support:
                continue
            sign = -1 if (da * db) % 2 else 1
            assert cup_summand(alg7, a, b) == cup_summand(alg7, b, a).scale(sign)


class TestMultiply:
    def test_known_base_products(self, alg5):
        W = alg5.weyl
        one = W.identity
        assert multiply(alg5.beta(0, W.s1), alg5.beta(0, W.s0)).is_zero
        assert multiply(alg5.beta(0, W.s1), alg5.beta(1, one)) == alg5.alpha(1, W.s1)
        base = multiply(alg5.beta(0, W.s0), alg5.beta(0, W.s0))
        expected = (
            alg5.idempotent_times(0, alg5.alpha(0, W.s0)).scale(-1)
            + alg5.idempotent_times(-1, alg5.alpha(1, W.s0)).scale(-1)
            + alg5.idempotent_times(1, alg5.alpha(-1, W.s0))
        )
        assert base == expected

    def test_triple_product_reaches_top_degree(self, alg5):
        W = alg5.weyl
        one = W.identity
        for v in (one, W.element(0, (S0,)), W.element(2, (S0, S1))):
            t = multiply(
                multiply(alg5.beta(1, one), alg5.beta(0, W.s1)), alg5.beta(1, v)
            )
            assert t == alg5.phi(W.mul(W.s1, v)), v

    def test_unit_is_two_sided(self, alg7):
        rng = random.Random(71)
        for _ in range(80):
            x = alg7.symbol_element(rand_symbol(rng, alg7, rng.randint(0, 3), 5))
            assert multiply(alg7.one(), x) == x
            assert multiply(x, alg7.one()) == x

    def test_degree_overflow_is_zero(self, alg5):
        rng = random.Random(73)
        for _ in range(50):
            da = rng.randint(1, 3)
            db = rng.randint(max(1, 4 - da), 3)
            x = alg5.symbol_element(rand_symbol(rng, alg5, da, 4))
            y = alg5.symbol_element(rand_symbol(rng, alg5, db, 4))
            assert multiply(x, y).is_zero

    def test_fourth_tensor_power_vanishes(self, alg5):
        rng = random.Random(79)
        for _ in range(40):
            a, b, c, d = (
                alg5.symbol_element(rand_symbol(rng, alg5, 1, 4)) for _ in range(4)
            )
            ab = multiply(a, b)
            assert multiply(ab, multiply(c, d)).is_zero
            assert multiply(multiply(ab, c), d).is_zero

    def test_associativity_random_sample(self, alg5):
        rng = random.Random(83)
        count = 0
        while count < 400:
            degs = [rng.randint(0, 3) for _ in range(3)]
            if sum(degs) > 3 and rng.random() < 0.7:
                continue
            x, y, z = (
                alg5.symbol_element(rand_symbol(rng, alg5, d, 5)) for d in degs
            )
            assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
            count += 1

    def test_involution_graded_antihomomorphism(self, alg5):
        rng = random.Random(89)
        for _ in range(200):
            da, db = rng.randint(0, 3), rng.randint(0, 3)
            x = alg5.symbol_element(rand_symbol(rng, alg5, da, 4))
            y = alg5.symbol_element(rand_symbol(rng, alg5, db, 4))
            sign = -1 if (da * db) % 2 else 1
            assert alg5.involution(multiply(x, y)) == multiply(
                alg5.involution(y), alg5.involution(x)
            ).scale(sign)
            assert alg5.uniformizer_conj(multiply(x, y)) == multiply(
                alg5.uniformizer_conj(x), alg5.uniformizer_conj(y)
            )


class TestDuality:
    def test_phi_tau_dual_bases(self, alg5):
        W = alg5.weyl
        w = W.element(1, (S0, S1))
        v = W.element(1, (S0,))
        assert duality_pairing(alg5.phi(w), alg5.tau(w)) == 1
        assert duality_pairing(alg5.phi(w), alg5.tau(v)) == 0
        assert duality_pairing(alg5.tau(w), alg5.phi(w)) == 1

    def test_beta_alpha_dual(self, alg5):
        w = alg5.weyl.element(2, (S1, S0))
        for sa in (-1, 0, 1):
            for sb in (-1, 0, 1):
                assert duality_pairing(alg5.beta(sa, w), alg5.alpha(sb, w)) == (
                    1 if sa == sb else 0
                )

    def test_derived_value_via_triple_cup_expansion(self, alg5):
        # <beta^-_w, alpha^-_w> forced to 1 by expanding alpha^- = beta^0 cup beta^+
        w = alg5.weyl.element(0, (S0, S1, S0))
        expansion = cup_summand(alg5, BasisSymbol(1, 0, w), BasisSymbol(1, 1, w))
        (sym, c), = expansion.coeffs.items()
        direct = duality_pairing(alg5.beta(-1, w), alg5.alpha(-1, w))
        via_cup = cup_summand(alg5, BasisSymbol(1, -1, w), sym).scale(c)
        assert via_cup == alg5.phi(w)
        assert direct == 1

    def test_degree_mismatch_rejected(self, alg5):
        with pytest.raises(ValueError):
            duality_pairing(alg5.tau(alg5.weyl.s0), alg5.tau(alg5.weyl.s0))

    def test_twisted_module_law(self, alg5):
        H = alg5.hecke
        rng = random.Random(97)
        for _ in range(80):
            h = rand_hecke(rng, alg5, 3)
            d = rng.randint(0, 3)
            x = alg5.symbol_element(rand_symbol(rng, alg5, d, 4))
            y = alg5.symbol_element(rand_symbol(rng, alg5, 3 - d, 4))
            assert duality_pairing(alg5.act_left(h, x), y) == duality_pairing(
                x, alg5.act_left(H.involution(h), y)
            )
            assert duality_pairing(alg5.act_right(x, h), y) == duality_pairing(
                x, alg5.act_right(y, H.involution(h))
            )


class TestTorusCupIndependentRoute:
    def test_shift_route_agrees(self, alg5):
        W, H = alg5.weyl, alg5.hecke
        for e in range(W.n):
            omega = W.omega(e)
            for sx in (-1, 1):
                x = alg5.beta(sx, omega)
                for sy in (-1, 1):
                    y = alg5.alpha(sy, omega)
                    s = W.s0 if sy == -1 else W.s1
                    other = alg5.alpha(-sy, W.mul(W.inv(s), omega))
                    xi = alg5.act_left(H.tau(s), other) + y
                    assert xi.support_lengths() <= {1}
                    route2 = multiply(x, xi) - multiply(
                        alg5.act_right(x, H.tau(s)), other
                    )
                    assert multiply(x, y) == route2, (e, sx, sy)
