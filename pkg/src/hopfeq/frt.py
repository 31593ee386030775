"""FRT-type construction for the Hopf equation: the obstruction elements
chi(i,j,k,l), the presentation of B(R) = T(C)/I (and its commutative variant),
and exact verification of the three structural identities that make I a
bi-ideal annihilating V.

With structure constants R(m_v (x) m_u) = sum x[u][v][j][i] m_i (x) m_j,

    chi(i,j,k,l) = sum_{u,v} x[u][v][j][i] c_{uk} c_{vl}
                   - sum_{a} x[k][l][j][a] c_{ia},

indices 0-based internally, listed in lexicographic (i,j,k,l) order.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from . import linalg
from .freealgebra import NCPoly, TensorPoly, comatrix_alphabet
from .hopfmodules import act_poly, module_from_R
from .tensorops import TensorOp, check_commutative, check_hopf, leg, to_structure_constants


class NotHopfSolutionError(ValueError):
    pass


class NotCommutativeSolutionError(ValueError):
    pass


@dataclass
class Presentation:
    alphabet: object
    field: object
    relations: list  # nonzero monic NCPoly, deduplicated, canonical order
    commutative_closure: bool = False
    provenance: str = ""
    chi_origin: list = dc_field(default_factory=list)  # (i,j,k,l) per chi relation

    def __post_init__(self):
        for r in self.relations:
            if r.is_zero():
                raise ValueError("zero relation in presentation")
            if self.alphabet.comatrix_n is not None and r.eps() != self.field.zero:
                raise ValueError(f"relation {r.render()} has nonzero counit")

    @property
    def n(self):
        return self.alphabet.comatrix_n

    def to_json(self):
        f = self.field
        return {
            "field": f.descriptor,
            "generators": len(self.alphabet),
            "comatrix_n": self.alphabet.comatrix_n,
            "commutative_closure": self.commutative_closure,
            "provenance": self.provenance,
            "relations": [
                {
                    "text": r.render(),
                    "terms": [[list(w), f.scalar_to_json(c)] for w, c in r.sorted_terms()],
                }
                for r in self.relations
            ],
        }

    @classmethod
    def from_json(cls, doc):
        from .fields import parse_field
        from .freealgebra import Alphabet

        field = parse_field(doc["field"])
        n = doc.get("comatrix_n")
        if n is not None:
            alphabet = comatrix_alphabet(n)
        else:
            alphabet = Alphabet(tuple(f"g{k}" for k in range(doc["generators"])))
        relations = []
        for rel in doc["relations"]:
            terms = {tuple(w): field.parse_scalar(c) for w, c in rel["terms"]}
            relations.append(NCPoly(alphabet, field, terms))
        return cls(
            alphabet=alphabet,
            field=field,
            relations=relations,
            commutative_closure=doc.get("commutative_closure", False),
            provenance=doc.get("provenance", ""),
        )


def chi(R: TensorOp):
    """All n^4 obstruction polynomials, keyed by (i,j,k,l); zeros included."""
    n = R.n
    field = R.field
    alphabet = comatrix_alphabet(n)
    x = to_structure_constants(R)
    zero = field.zero
    out = {}
    for i, j, k, l in product(range(n), repeat=4):
        terms = {}
        for u in range(n):
            for v in range(n):
                c = x[u][v][j][i]
                if c != zero:
                    w = (u * n + k, v * n + l)
                    s = field.add(terms.get(w, zero), c)
                    if s == zero:
                        terms.pop(w, None)
                    else:
                        terms[w] = s
        for a in range(n):
            c = x[k][l][j][a]
            if c != zero:
                w = (i * n + a,)
                s = field.sub(terms.get(w, zero), c)
                if s == zero:
                    terms.pop(w, None)
                else:
                    terms[w] = s
        poly = NCPoly(alphabet, field)
        poly.terms = terms
        out[(i, j, k, l)] = poly
    return out


def chi_relations(R: TensorOp):
    """Deduplicated nonzero chi list (monic), with originating indices."""
    indexed = chi(R)
    seen = {}
    order = []
    for idx in sorted(indexed):
        poly = indexed[idx]
        if poly.is_zero():
            continue
        key = tuple(sorted(poly.monic().terms.items(), key=lambda kv: kv[0]))
        if key in seen:
            continue
        seen[key] = idx
        order.append((idx, poly.monic()))
    return [p for _, p in order], [idx for idx, _ in order]


def commutator_relations(n, field):
    """Monic commutators [c_g, c_h] over unordered generator pairs g < h."""
    alphabet = comatrix_alphabet(n)
    out = []
    gens = range(n * n)
    for g in gens:
        for h in gens:
            if g < h:
                p = (
                    NCPoly.word(alphabet, field, (h, g))
                    - NCPoly.word(alphabet, field, (g, h))
                )
                out.append(p)
    return out


def frt_presentation(R: TensorOp, force=False) -> Presentation:
    """The presentation of B(R) = T(C)/(all chi).

    Refuses operators that fail the Hopf equation (the annihilation guarantee
    would be void) unless force=True; the coideal property holds regardless.
    """
    if not force and not check_hopf(R):
        raise NotHopfSolutionError("R does not solve the Hopf equation (use force to override)")
    relations, origin = chi_relations(R)
    return Presentation(
        alphabet=comatrix_alphabet(R.n),
        field=R.field,
        relations=relations,
        commutative_closure=False,
        provenance="chi presentation",
        chi_origin=origin,
    )


def frt_commutative(R: TensorOp, force=False) -> Presentation:
    """The commutative variant: chi relations plus all generator commutators."""
    if not force:
        if not check_hopf(R):
            raise NotHopfSolutionError("R does not solve the Hopf equation")
        if not check_commutative(R):
            raise NotCommutativeSolutionError("R is not a commutative solution")
    relations, origin = chi_relations(R)
    seen = {
        tuple(sorted(r.terms.items(), key=lambda kv: kv[0])) for r in relations
    }
    for p in commutator_relations(R.n, R.field):
        key = tuple(sorted(p.monic().terms.items(), key=lambda kv: kv[0]))
        if key not in seen:
            seen.add(key)
            relations.append(p.monic())
    return Presentation(
        alphabet=comatrix_alphabet(R.n),
        field=R.field,
        relations=relations,
        commutative_closure=True,
        provenance="chi presentation + commutators",
        chi_origin=origin,
    )


def eps_chi_zero(R: TensorOp) -> bool:
    """eps(chi(i,j,k,l)) = 0 for every index, any R."""
    zero = R.field.zero
    return all(p.eps() == zero for p in chi(R).values())


def verify_delta_chi(R: TensorOp) -> bool:
    """Coideal identity: Delta(chi(i,j,k,l)) = sum_{a,b} chi(i,j,a,b) (x)
    c_ak c_bl + sum_p c_ip (x) chi(p,j,k,l); holds for every R, together with
    eps(chi) = 0."""
    n = R.n
    field = R.field
    alphabet = comatrix_alphabet(n)
    indexed = chi(R)
    gen = lambda i, j: NCPoly.generator(alphabet, field, i, j)
    for i, j, k, l in product(range(n), repeat=4):
        lhs = indexed[(i, j, k, l)].delta()
        rhs = TensorPoly.zero(alphabet, field)
        for a in range(n):
            for b in range(n):
                rhs = rhs + TensorPoly.of(indexed[(i, j, a, b)], gen(a, k) * gen(b, l))
        for p in range(n):
            rhs = rhs + TensorPoly.of(gen(i, p), indexed[(p, j, k, l)])
        if lhs != rhs:
            return False
    return eps_chi_zero(R)


def _hopf_defect(R: TensorOp):
    field = R.field
    r12, r13, r23 = leg(R, 12), leg(R, 13), leg(R, 23)
    lhs = linalg.mat_mul(field, linalg.mat_mul(field, r23, r13), r12)
    rhs = linalg.mat_mul(field, r12, r23)
    return linalg.mat_sub(field, lhs, rhs)


def verify_defect_identity(R: TensorOp) -> bool:
    """(R^23 R^13 R^12 - R^12 R^23)(z (x) m_k (x) m_j) =
    sum_{r,s} chi(r,s,j,k).z (x) m_r (x) m_s for every basis z, k, j; any R."""
    n = R.n
    defect = _hopf_defect(R)
    data = module_from_R(R)
    acted = {idx: act_poly(poly, data) for idx, poly in chi(R).items()}
    for t, k, j in product(range(n), repeat=3):
        col = (t * n + k) * n + j
        for i, r, s in product(range(n), repeat=3):
            lhs = defect[(i * n + r) * n + s][col]
            rhs = acted[(r, s, j, k)][i][t]
            if lhs != rhs:
                return False
    return True


def verify_commutator_identity(R: TensorOp) -> bool:
    """(R^12 R^13 - R^13 R^12)(z (x) m_k (x) m_j) =
    sum_{r,s} (c_rk c_sj - c_sj c_rk).z (x) m_r (x) m_s for every z, k, j."""
    n = R.n
    field = R.field
    r12, r13 = leg(R, 12), leg(R, 13)
    diff = linalg.mat_sub(
        field, linalg.mat_mul(field, r12, r13), linalg.mat_mul(field, r13, r12)
    )
    data = module_from_R(R)
    act = data.action
    mm = lambda a, b: linalg.mat_mul(field, a, b)
    for t, k, j in product(range(n), repeat=3):
        col = (t * n + k) * n + j
        for r, s in product(range(n), repeat=2):
            bracket = linalg.mat_sub(
                field, mm(act[(r, k)], act[(s, j)]), mm(act[(s, j)], act[(r, k)])
            )
            for i in range(n):
                if diff[(i * n + r) * n + s][col] != bracket[i][t]:
                    return False
    return True
