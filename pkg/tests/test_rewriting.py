import random
from fractions import Fraction

import pytest

from hopfeq import bialgebras as B, frt, linalg, rewriting as RW, tensorops as T
from hopfeq.fields import QQ, parse_field
from hopfeq.freealgebra import NCPoly, comatrix_alphabet, free_alphabet, word_key

F2 = parse_field("fp:2")
F5 = parse_field("fp:5")
A2 = comatrix_alphabet(2)


def gen(i, j, field=QQ, alphabet=A2):
    return NCPoly.generator(alphabet, field, i, j)


def rule_map(rs):
    return {r.lhs: r.tail for r in rs.rules}


# -- completion ----------------------------------------------------------------

def test_complete_single_idempotent_n1():
    A1 = comatrix_alphabet(1)
    c = NCPoly.generator(A1, QQ, 0, 0)
    rs = RW.complete([(c * c - c).monic()], 8)
    assert rs.status == "complete"
    assert rule_map(rs) == {(0, 0): c}
    assert RW.normal_form(c * c * c * c, rs) == c


def test_complete_rq0_rules():
    pres = frt.frt_presentation(B.r_q(Fraction(0), QQ))
    rs = RW.complete(pres.relations, 8)
    assert rs.status == "complete"
    assert rule_map(rs) == {
        (2,): NCPoly.zero(A2, QQ),           # c21 -> 0
        (3, 0): gen(0, 0),                   # c22 c11 -> c11
        (3, 1): NCPoly.zero(A2, QQ),         # c22 c12 -> 0
    }


def test_complete_char2_system():
    pres = frt.frt_presentation(B.char2_matrix(F2))
    rs = RW.complete(pres.relations, 8)
    assert rs.status == "complete"
    assert len(rs.rules) == 16  # every degree-2 word is a leading term
    words = RW.irreducible_words(rs, 8)
    assert words == [(), (0,), (1,), (2,), (3,)]
    rep = RW.dimension(rs, 8)
    assert rep.is_finite() and rep.count == 5
    assert rep.hilbert_prefix == [1, 4, 0]
    # zy = c21*c12 rewrites to x + t = c11 + c22 (the paper's zy = x + t)
    assert RW.normal_form(gen(1, 0, F2) * gen(0, 1, F2), rs) \
        == gen(0, 0, F2) + gen(1, 1, F2)


def test_normal_form_of_rule_lhs_is_tail():
    pres = frt.frt_presentation(B.char2_matrix(F2))
    rs = RW.complete(pres.relations, 8)
    for r in rs.rules:
        assert RW.normal_form(NCPoly.word(A2, F2, r.lhs), rs) == r.tail


def test_normal_form_kills_all_relations():
    for R in (B.char2_matrix(F2), B.r_q(Fraction(0), QQ)):
        pres = frt.frt_presentation(R)
        rs = RW.complete(pres.relations, 8)
        for rel in pres.relations:
            assert RW.normal_form(rel, rs).is_zero()


def test_normal_form_idempotent_linear_multiplicative():
    pres = frt.frt_presentation(B.char2_matrix(F2))
    rs = RW.complete(pres.relations, 8)
    rng = random.Random(51)

    def rand_poly():
        p = NCPoly.zero(A2, F2)
        for _ in range(4):
            w = tuple(rng.randrange(4) for _ in range(rng.randint(0, 3)))
            p = p + NCPoly(A2, F2, {w: F2.random(rng)})
        return p

    for _ in range(10):
        p, q = rand_poly(), rand_poly()
        np_, nq = RW.normal_form(p, rs), RW.normal_form(q, rs)
        assert RW.normal_form(np_, rs) == np_
        assert RW.normal_form(p + q, rs) == np_ + nq
        assert RW.normal_form(p * q, rs) == RW.normal_form(np_ * nq, rs)


def test_completion_independent_of_relation_order():
    rng = random.Random(52)
    for R in (B.char2_matrix(F2), B.r_q(Fraction(0), QQ)):
        pres = frt.frt_presentation(R)
        rs0 = RW.complete(pres.relations, 8)
        want = {(r.lhs, tuple(sorted(r.tail.terms.items()))) for r in rs0.rules}
        for _ in range(3):
            shuffled = pres.relations[:]
            rng.shuffle(shuffled)
            rs = RW.complete(shuffled, 8)
            got = {(r.lhs, tuple(sorted(r.tail.terms.items()))) for r in rs.rules}
            assert got == want


def test_capped_status_blocks_finite_verdict():
    pres = frt.frt_presentation(B.char2_matrix(F2))
    rs = RW.complete(pres.relations, max_degree=1)
    assert rs.status == "capped"
    rep = RW.dimension(rs, 8)
    assert rep.kind == "lower_bound"


def test_unit_ideal_collapses():
    one = NCPoly.one(A2, QQ)
    rs = RW.complete([gen(0, 0) - one, gen(0, 0)], 8)
    assert RW.normal_form(one, rs).is_zero()
    assert RW.irreducible_words(rs, 4) == []


# -- irreducible words and dimension -----------------------------------------------

def test_b0_hilbert_prefix_matches_counting_formula():
    # B_0^2 rules: c21 -> 0, yx -> x, yz -> 0; irreducible words are w y^k
    # with w over {x, z}, so level d holds 2^(d+1) - 1 words
    pres = frt.frt_presentation(B.r_q(Fraction(0), QQ))
    rs = RW.complete(pres.relations, 8)
    rep = RW.dimension(rs, 7)
    assert rep.kind == "lower_bound"
    assert rep.hilbert_prefix == [2 ** (d + 1) - 1 for d in range(8)]
    assert rep.word_length_cap == 7


def test_b2n1_family_dimensions():
    # exponent e in y^e = y gives dimension 2e + 1
    x, z, c21, y = gen(0, 0), gen(0, 1), gen(1, 0), gen(1, 1)
    for e, dim in ((2, 5), (3, 7), (4, 9)):
        ye = y
        for _ in range(e - 1):
            ye = ye * y
        rels = [x * x - x, x * z, z * x, z * z, z * y, ye - y,
                x * y - x, y * x - x, c21]
        pres = frt.Presentation(alphabet=A2, field=QQ,
                                relations=[r.monic() for r in rels])
        rs = RW.complete(pres.relations, 10)
        assert rs.status == "complete"
        rep = RW.dimension(rs, 10)
        assert rep.is_finite() and rep.count == dim
        quo = RW.quotient_bialgebra(pres, rs, 10)
        assert B.check_bialgebra_axioms(quo).all_ok
        assert not quo.is_cocommutative() and not quo.is_commutative()


def test_irreducible_words_are_deglex_sorted():
    pres = frt.frt_presentation(B.r_q(Fraction(0), QQ))
    rs = RW.complete(pres.relations, 8)
    words = RW.irreducible_words(rs, 4)
    assert words == sorted(words, key=word_key)


# -- quotient bialgebras -------------------------------------------------------------

def test_char2_quotient_tables_match_printed_basis_form():
    # the five-dimensional bialgebra on basis {1, x, y, z, t}
    pres = frt.frt_presentation(B.char2_matrix(F2))
    rs = RW.complete(pres.relations, 8)
    quo = RW.quotient_bialgebra(pres, rs)
    assert quo.dim == 5
    assert B.check_bialgebra_axioms(quo).all_ok
    lbl = quo.basis_labels
    assert lbl == ["1", "c[1,1]", "c[1,2]", "c[2,1]", "c[2,2]"]
    ix = {name: k for k, name in enumerate(lbl)}
    one, x, y, z, t = (ix[k] for k in ("1", "c[1,1]", "c[1,2]", "c[2,1]", "c[2,2]"))

    def vec(*pairs):
        v = [F2.zero] * 5
        for idx, c in pairs:
            v[idx] = c
        return v

    # x^2 = x, y^2 = z^2 = 0, t^2 = t, xy = y, yx = 0, xz = zx = z, xt = t,
    # tx = x, yz = 0, zy = x + t, yt = 0, ty = y, zt = tz = z
    assert quo.mult[x][x] == vec((x, 1))
    assert quo.mult[y][y] == vec()
    assert quo.mult[z][z] == vec()
    assert quo.mult[t][t] == vec((t, 1))
    assert quo.mult[x][y] == vec((y, 1))
    assert quo.mult[y][x] == vec()
    assert quo.mult[x][z] == vec((z, 1))
    assert quo.mult[z][x] == vec((z, 1))
    assert quo.mult[x][t] == vec((t, 1))
    assert quo.mult[t][x] == vec((x, 1))
    assert quo.mult[y][z] == vec()
    assert quo.mult[z][y] == vec((x, 1), (t, 1))
    assert quo.mult[y][t] == vec()
    assert quo.mult[t][y] == vec((y, 1))
    assert quo.mult[z][t] == vec((z, 1))
    assert quo.mult[t][z] == vec((z, 1))
    # comultiplicative matrix: Delta(x) = x(x)x + y(x)z etc.
    dx = quo.comult[x]
    assert dx[x][x] == 1 and dx[y][z] == 1
    assert sum(1 for u in range(5) for v in range(5) if dx[u][v] != 0) == 2


def test_tk_quotient_tables():
    x, z, c21, y = gen(0, 0), gen(0, 1), gen(1, 0), gen(1, 1)
    rels = [x * x - x, x * z, z * x, z * z, c21, y - NCPoly.one(A2, QQ)]
    pres = frt.Presentation(alphabet=A2, field=QQ,
                            relations=[r.monic() for r in rels])
    rs = RW.complete(pres.relations, 8)
    quo = RW.quotient_bialgebra(pres, rs)
    assert quo.dim == 3
    assert quo.basis_labels == ["1", "c[1,1]", "c[1,2]"]
    report = B.check_bialgebra_axioms(quo)
    assert report.all_ok and report.antipode is None
    ix = {name: k for k, name in enumerate(quo.basis_labels)}
    one, xi, zi = ix["1"], ix["c[1,1]"], ix["c[1,2]"]
    # Delta(z) = x (x) z + z (x) 1
    dz = quo.comult[zi]
    assert dz[xi][zi] == QQ.one and dz[zi][one] == QQ.one
    assert sum(1 for u in range(3) for v in range(3) if dz[u][v] != QQ.zero) == 2
    assert not quo.is_cocommutative() and quo.is_commutative()


def test_commutative_char2_quotient_dim3():
    pres = frt.frt_commutative(B.char2_matrix(F2))
    rs = RW.complete(pres.relations, 8)
    rep = RW.dimension(rs, 8)
    assert rep.is_finite() and rep.count == 3
    quo = RW.quotient_bialgebra(pres, rs)
    assert quo.is_commutative()
    assert B.check_bialgebra_axioms(quo).all_ok


def test_quotient_refuses_infinite_dimension():
    pres = frt.frt_presentation(B.r_q(Fraction(0), QQ))
    rs = RW.complete(pres.relations, 8)
    with pytest.raises(RW.NotFiniteDimensionalError):
        RW.quotient_bialgebra(pres, rs)


def test_quotient_passes_axioms_implies_dimension_finite():
    # dimension(finite d) then quotient passes all six axiom checks
    for builder, field in ((B.char2_matrix, F2),):
        pres = frt.frt_presentation(builder(field))
        rs = RW.complete(pres.relations, 8)
        rep = RW.dimension(rs, 8)
        assert rep.is_finite()
        assert B.check_bialgebra_axioms(RW.quotient_bialgebra(pres, rs)).all_ok


# -- coideal check ---------------------------------------------------------------

def test_check_coideal_hand_reduced_counterexample():
    # Delta(c11 - 1) reduces to c12 (x) c21 under the rule c11 -> 1: not a coideal
    rel = gen(0, 0) - NCPoly.one(A2, QQ)
    rs = RW.complete([rel.monic()], 8)
    pres_like = type("P", (), {"relations": [rel.monic()]})()
    assert not RW.check_coideal(pres_like, rs)
    reduced = rel.delta().map_legs(lambda p: RW.normal_form(p, rs))
    assert reduced.terms == {((1,), (2,)): QQ.one}


def test_check_coideal_empty_relations():
    rs = RW.complete([], 8)
    pres_like = type("P", (), {"relations": []})()
    assert RW.check_coideal(pres_like, rs)


# -- ideal membership cross-validated by linear algebra ----------------------------

def test_normal_form_kernel_equals_ideal_span_at_low_degree():
    # complete system: NF(p) = 0 iff p in span{w * rule * w'} (degree <= 3)
    pres = frt.frt_presentation(B.r_q(Fraction(0), QQ))
    rs = RW.complete(pres.relations, 8)
    # all words of length <= 3
    words = [()]
    for d in range(1, 4):
        words += [w + (g,) for w in words if len(w) == d - 1 for g in range(4)]
    index = {w: k for k, w in enumerate(words)}
    rows = []
    for rule in rs.rules:
        rpoly = rule.poly()
        deg = rpoly.degree()
        for a in words:
            for b in words:
                if len(a) + deg + len(b) > 3:
                    continue
                prod = NCPoly.word(A2, QQ, a) * rpoly * NCPoly.word(A2, QQ, b)
                row = [QQ.zero] * len(words)
                for w, c in prod.terms.items():
                    row[index[w]] = c
                rows.append(row)
    span_rank = linalg.rank(QQ, rows)
    irreducible = [w for w in words
                   if RW.normal_form(NCPoly.word(A2, QQ, w), rs).terms == {w: QQ.one}]
    assert span_rank == len(words) - len(irreducible)


# -- presentation equivalence -------------------------------------------------------

def test_equivalence_bq_at_q1():
    field = QQ
    q = Fraction(1)
    R = B.r_q(q, field)
    p1 = frt.frt_presentation(R)
    AB = free_alphabet("A", "B")
    a, b = NCPoly.letter(AB, field, 0), NCPoly.letter(AB, field, 1)
    p2 = frt.Presentation(alphabet=AB, field=field,
                          relations=[(a * a * b - a * b).monic()])
    forward = [(a * b).scale(field.inv(q)), b - a.scale(q), NCPoly.zero(AB, field), a]
    backward = [gen(1, 1), gen(0, 1) + gen(1, 1).scale(q)]
    rep = RW.presentations_equivalent(p1, p2, forward, backward, max_degree=6)
    assert rep.equivalent and not rep.undecided


def test_equivalence_detects_containment_only():
    # p2 strictly coarser: second relation of p1 missing in p2
    x = gen(0, 0)
    z = gen(0, 1)
    p1 = frt.Presentation(alphabet=A2, field=QQ,
                          relations=[(x * x - x).monic(), (z * z).monic()])
    p2 = frt.Presentation(alphabet=A2, field=QQ,
                          relations=[(x * x - x).monic()])
    ident = [NCPoly.letter(A2, QQ, k) for k in range(4)]
    rep = RW.presentations_equivalent(p2, p1, ident, ident, max_degree=6)
    assert rep.forward_annihilates and not rep.backward_annihilates
    assert not rep.equivalent and rep.containment == "forward"


def test_equivalence_reports_undecided_on_degree_blowup():
    x = gen(0, 0)
    p1 = frt.Presentation(alphabet=A2, field=QQ, relations=[(x * x - x).monic()])
    big = x * x * x * x  # degree-4 image of each letter: substituted degree 8 > 6
    subst = [big, big, big, big]
    ident = [NCPoly.letter(A2, QQ, k) for k in range(4)]
    rep = RW.presentations_equivalent(p1, p1, subst, ident, max_degree=6)
    assert rep.undecided and not rep.equivalent
