import pytest

from krcrystal.core import Params
from krcrystal.iso import image_of
from krcrystal.polytope import PolytopePoint, enumerate_points, highest_weight_point
from krcrystal.tableau import from_matrix, highest_weight_tableau
from krcrystal.words import (
    Factor,
    OperatorWord,
    Symbolic,
    WordError,
    WordSyntaxError,
    apply_word,
    explicit_image_large_i,
    explicit_image_small_i,
    min_entry_diagnostic,
    omega_identity_gap,
    omega_nu,
    p_formula_word,
    parse_word,
    render_word,
    sigma_chi,
    sigma_identity_gap,
    truncate,
    word_full_path,
    word_K,
    word_P_small_i,
    word_Q_large_i,
)


def counts(word, start):
    trace = []
    apply_word(word, start, trace=trace)
    return [(fa.direction, fa.label, c) for fa, c, _ in trace]


class TestGrammar:
    def test_three_factors(self):
        w = parse_word("f3^2 e2 f1^{phi1}")
        assert len(w) == 3
        assert w[-1] == Factor("f", 1, Symbolic("phi", 1, 0))
        assert w[1] == Factor("e", 2, 1)

    @pytest.mark.parametrize("text", ["f3^2 e2 f1^{phi1}", "e3^{eps3-1} f2 f3^{phi3}", "f0^4 e0", ""])
    def test_round_trip(self, text):
        assert render_word(parse_word(text)) == text

    def test_eps_on_f_rejected(self):
        with pytest.raises(WordSyntaxError, match="e-factors only") as info:
            parse_word("f0^{eps0-1}")
        assert info.value.position == 0

    def test_index_must_match(self):
        with pytest.raises(WordSyntaxError):
            parse_word("f2^{phi3}")

    def test_position_of_bad_token(self):
        with pytest.raises(WordSyntaxError) as info:
            parse_word("f1 g2")
        assert info.value.position == 3


class TestApply:
    def test_empty_word(self):
        z = highest_weight_point(Params(3, 2, 2))
        assert apply_word(OperatorWord(), z) is z

    def test_zero_offset_symbolic(self):
        z = highest_weight_point(Params(2, 1, 1))
        assert apply_word(parse_word("f1^{phi1-1}"), z) == z

    def test_undefined(self):
        z = highest_weight_point(Params(2, 1, 1))
        with pytest.raises(WordError, match="undefined at step 1") as info:
            apply_word(parse_word("f1^{phi1-2}"), z)
        assert info.value.step == 1

    def test_annihilated(self):
        z = highest_weight_point(Params(2, 1, 1))
        with pytest.raises(WordError, match="annihilated at step 2"):
            apply_word(parse_word("e1 f2"), z.f(1).f(2).e(2))
        assert apply_word(parse_word("e1"), z, strict=False) is None

    def test_acts_on_tableaux(self):
        t = highest_weight_tableau(Params(2, 1, 1))
        assert apply_word(parse_word("f2 f1"), t).rows == ((3,),)

    def test_first_step_arrows(self, worked_point):
        z = highest_weight_point(worked_point.params)
        assert apply_word(parse_word("f1 f2^9 f3^9"), z).rows[0] == (1, 8, 0)


class TestInductiveWords:
    def test_third_step(self, worked_point):
        q = truncate(worked_point, 3)
        assert q == worked_point
        w = word_K(q)
        assert render_word(w) == "e3^{eps3-1} f2 f3^{phi3}"
        assert counts(w, truncate(q, 4)) == [("f", 3, 4), ("f", 2, 1), ("e", 3, 2)]
        assert apply_word(w, truncate(q, 4)) == q

    def test_second_step(self, worked_point):
        q = truncate(worked_point, 4)
        w = word_K(q)
        assert render_word(w) == "f4^{phi4} e3^{eps3-4} e2^{eps2-3} f1 f2^{phi2} f3^{phi3}"
        got = counts(w, truncate(q, 5))
        assert got == [("f", 3, 8), ("f", 2, 6), ("f", 1, 1), ("e", 2, 2), ("e", 3, 0), ("f", 4, 8)]

    def test_first_step(self, worked_point):
        q = truncate(worked_point, 5)
        w = word_K(q)
        assert render_word(w) == "f5^{phi5} f4^{phi4} e3^{eps3-1} e2^{eps2-3} f1 f2^{phi2} f3^{phi3}"
        assert apply_word(w, highest_weight_point(q.params)) == q

    def test_i_equals_one(self):
        p = Params(4, 1, 3)
        q = PolytopePoint.from_entries(p, {(1, 3): 2})
        assert render_word(word_K(q)) == "f3^{phi3} f2^{phi2} f1^2"

    def test_zero_rejected(self):
        with pytest.raises(ValueError, match="no nonzero row"):
            word_K(highest_weight_point(Params(3, 2, 2)))

    def test_full_path(self, worked_point):
        w = word_full_path(worked_point)
        assert apply_word(w, highest_weight_point(worked_point.params)) == worked_point
        assert len(word_full_path(highest_weight_point(worked_point.params))) == 0

    def test_full_path_exhaustive(self):
        p = Params(3, 2, 2)
        z = highest_weight_point(p)
        points = list(enumerate_points(p))
        assert len(points) == 20
        assert all(apply_word(word_full_path(a), z) == a for a in points)


class TestLoweringWords:
    @pytest.mark.parametrize("p", [Params(4, 2, 3), Params(4, 1, 2), Params(2, 2, 3)])
    def test_small_i(self, p):
        z = highest_weight_point(p)
        for a in enumerate_points(p):
            w = word_P_small_i(a)
            assert w.lowering_only
            assert apply_word(w, z) == a

    @pytest.mark.parametrize("p", [Params(4, 3, 2), Params(3, 3, 2), Params(4, 4, 2)])
    def test_large_i(self, p):
        z = highest_weight_point(p)
        for a in enumerate_points(p):
            w = word_Q_large_i(a)
            assert w.lowering_only
            assert apply_word(w, z) == a

    def test_zero_words_act_trivially(self):
        for p in (Params(4, 2, 2), Params(4, 3, 2)):
            z = highest_weight_point(p)
            build = word_P_small_i if p.i <= 2 else word_Q_large_i
            w = build(z)
            assert all(fa.exp == 0 for fa in w)
            assert apply_word(w, z) == z

    def test_restrictions(self):
        a = highest_weight_point(Params(5, 3, 2))
        with pytest.raises(ValueError, match="i <= 2"):
            word_P_small_i(a)
        with pytest.raises(ValueError, match="i >= n-1"):
            word_Q_large_i(a)

    def test_formula_fails_for_i_three(self):
        p = Params(5, 3, 11)
        a = PolytopePoint(p, [[0, 1, 1], [1, 3, 1], [1, 3, 4]])
        trace = []
        got = apply_word(p_formula_word(a), highest_weight_point(p), trace=trace)
        assert got.rows == ((0, 0, 2), (1, 1, 3), (1, 6, 1))
        assert got != a
        states = [x.rows for _, _, x in trace]
        for grid in [
            ((2, 0, 0), (0, 0, 0), (0, 0, 0)),
            ((2, 3, 4), (0, 0, 0), (0, 0, 0)),
            ((1, 0, 0), (0, 0, 0), (1, 3, 4)),
            ((1, 1, 3), (0, 0, 0), (1, 5, 2)),
            ((0, 0, 0), (1, 1, 3), (1, 5, 2)),
        ]:
            assert grid in states


class TestRecursions:
    def test_sigma_example(self):
        a = PolytopePoint(Params(4, 2, 3), [[1, 0], [0, 1], [2, 0]])
        sc = sigma_chi(a)
        assert sc.sigma == {4: 0, 3: 1, 2: 1}
        assert sc.chi == {4: 1, 3: 0, 2: 0}

    def test_sigma_zero(self):
        sc = sigma_chi(highest_weight_point(Params(4, 2, 1)))
        assert set(sc.sigma.values()) == {0}
        assert sc.chi == {4: 1, 3: 0, 2: 0}

    def test_sigma_i_one(self):
        for a in enumerate_points(Params(4, 1, 3)):
            sc = sigma_chi(a)
            assert all(sc.chi[k] * sc.sigma[k] == 0 for k in sc.sigma)

    def test_omega_example(self):
        a = PolytopePoint.from_entries(Params(4, 3, 3), {(1, 4): 1, (2, 3): 2})
        on = omega_nu(a)
        assert on.omega[2] == -1 and on.nu[2] == 1
        assert on.omega[1] == 0 and on.nu[1] == 1

    def test_omega_zero(self):
        on = omega_nu(highest_weight_point(Params(4, 3, 1)))
        assert set(on.omega.values()) == {0}
        assert on.nu == {1: 1, 2: 0, 3: 0}

    def test_restrictions(self):
        with pytest.raises(ValueError):
            sigma_chi(highest_weight_point(Params(4, 3, 1)))
        with pytest.raises(ValueError):
            omega_nu(highest_weight_point(Params(4, 2, 1)))

    def test_identities(self):
        for a in enumerate_points(Params(4, 2, 3)):
            assert all(sigma_identity_gap(a, k) == 0 for k in range(2, 5))
        for a in enumerate_points(Params(4, 3, 2)):
            assert all(omega_identity_gap(a, k) == 0 for k in range(2, 4))


class TestExplicitImages:
    def test_zero(self):
        for p in (Params(4, 2, 2), Params(4, 1, 2)):
            assert explicit_image_small_i(highest_weight_point(p)) == highest_weight_tableau(p)
        for p in (Params(4, 3, 2), Params(4, 4, 2)):
            assert explicit_image_large_i(highest_weight_point(p)) == highest_weight_tableau(p)

    def test_i_one_row(self):
        p = Params(4, 1, 3)
        a = PolytopePoint(p, [[1], [0], [1], [1]])
        assert explicit_image_small_i(a) == from_matrix([[0, 1, 0, 1, 1]], p)

    def test_i_n_rows(self):
        p = Params(3, 3, 3)
        a = PolytopePoint(p, [[1, 0, 2]])
        assert explicit_image_large_i(a) == from_matrix([[2, 1], [2, 1], [0, 3]], p)

    @pytest.mark.parametrize("p", [Params(4, 2, 2), Params(3, 2, 3)])
    def test_small_matches_transport(self, p):
        assert all(explicit_image_small_i(a) == image_of(a) for a in enumerate_points(p))

    @pytest.mark.parametrize("p", [Params(4, 3, 2), Params(4, 4, 2)])
    def test_large_matches_transport(self, p):
        assert all(explicit_image_large_i(a) == image_of(a) for a in enumerate_points(p))

    def test_restrictions(self):
        with pytest.raises(ValueError):
            explicit_image_small_i(highest_weight_point(Params(5, 3, 1)))
        with pytest.raises(ValueError):
            explicit_image_large_i(highest_weight_point(Params(5, 3, 1)))

    def test_min_entry_diagnostic_runs(self):
        a = next(iter(enumerate_points(Params(4, 2, 2))))
        rows = min_entry_diagnostic(a, image_of(a))
        assert all(len(r) == 3 for r in rows)
