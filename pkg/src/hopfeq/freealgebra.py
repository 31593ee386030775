"""The free algebra on the n^2 comatrix generators c_ij (and, internally, on
arbitrary finite alphabets for presentation-equivalence targets).

Words are tuples of letter indices; polynomials are letter-tuple -> scalar
maps with no stored zeros, so equality is structural. The term order used
everywhere is deglex with the generators ordered c[1,1] < c[1,2] < ... < c[n,n]
(row-major letter index).
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field


@dataclass(frozen=True)
class Alphabet:
    names: tuple
    comatrix_n: int | None = None

    def __len__(self):
        return len(self.names)


def comatrix_alphabet(n: int) -> Alphabet:
    names = tuple(f"c[{i + 1},{j + 1}]" for i in range(n) for j in range(n))
    return Alphabet(names, comatrix_n=n)


def free_alphabet(*names: str) -> Alphabet:
    return Alphabet(tuple(names))


def word_key(w):
    """Deglex sort key: degree first, then left-to-right letter comparison."""
    return (len(w), w)


class NCPoly:
    __slots__ = ("alphabet", "field", "terms")

    def __init__(self, alphabet: Alphabet, field: Field, terms=None):
        self.alphabet = alphabet
        self.field = field
        self.terms = {}
        if terms:
            zero = field.zero
            for w, c in terms.items():
                if c != zero:
                    self.terms[w] = c

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, alphabet, field):
        return cls(alphabet, field)

    @classmethod
    def one(cls, alphabet, field):
        return cls(alphabet, field, {(): field.one})

    @classmethod
    def scalar(cls, alphabet, field, c):
        return cls(alphabet, field, {(): c})

    @classmethod
    def letter(cls, alphabet, field, k: int):
        if not 0 <= k < len(alphabet):
            raise ValueError(f"letter {k} out of range")
        return cls(alphabet, field, {(k,): field.one})

    @classmethod
    def generator(cls, alphabet, field, i: int, j: int):
        """The comatrix generator c_{i+1,j+1} (0-based indices)."""
        n = alphabet.comatrix_n
        if n is None:
            raise ValueError("not a comatrix alphabet")
        return cls.letter(alphabet, field, i * n + j)

    @classmethod
    def word(cls, alphabet, field, letters):
        return cls(alphabet, field, {tuple(letters): field.one})

    # -- ring structure -----------------------------------------------
    def _same_parent(self, other):
        if self.alphabet != other.alphabet or self.field != other.field:
            raise ValueError("mixed alphabets or fields")

    def __add__(self, other):
        self._same_parent(other)
        add, zero = self.field.add, self.field.zero
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = add(terms.get(w, zero), c)
            if s == zero:
                terms.pop(w, None)
            else:
                terms[w] = s
        out = NCPoly(self.alphabet, self.field)
        out.terms = terms
        return out

    def __neg__(self):
        neg = self.field.neg
        out = NCPoly(self.alphabet, self.field)
        out.terms = {w: neg(c) for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == self.field.zero:
            return NCPoly.zero(self.alphabet, self.field)
        mul = self.field.mul
        out = NCPoly(self.alphabet, self.field)
        out.terms = {w: mul(c, x) for w, x in self.terms.items()}
        return out

    def __mul__(self, other):
        self._same_parent(other)
        add, mul, zero = self.field.add, self.field.mul, self.field.zero
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = add(terms.get(w, zero), mul(c1, c2))
                if s == zero:
                    terms.pop(w, None)
                else:
                    terms[w] = s
        out = NCPoly(self.alphabet, self.field)
        out.terms = terms
        return out

    def __eq__(self, other):
        return (
            isinstance(other, NCPoly)
            and self.alphabet == other.alphabet
            and self.field == other.field
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- inspection ----------------------------------------------------
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def leading_word(self):
        return max(self.terms, key=word_key)

    def leading_coeff(self):
        return self.terms[self.leading_word()]

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coeff()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0]), reverse=True)

    def render(self):
        if not self.terms:
            return "0"
        names = self.alphabet.names
        parts = []
        for w, c in self.sorted_terms():
            mono = "*".join(names[k] for k in w) if w else "1"
            cs = self.field.render(c)
            if cs == "1" and w:
                parts.append(mono)
            elif cs == "-1" and w:
                parts.append(f"-{mono}")
            elif w:
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(cs)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"NCPoly({self.render()})"

    # -- substitution ---------------------------------------------------
    def substitute(self, images):
        """Algebra map sending letter k to images[k]; images share one parent."""
        if len(images) != len(self.alphabet):
            raise ValueError("need one image per letter")
        target_alphabet = images[0].alphabet
        target_field = images[0].field
        out = NCPoly.zero(target_alphabet, target_field)
        for w, c in self.terms.items():
            acc = NCPoly.scalar(target_alphabet, target_field, c)
            for k in w:
                acc = acc * images[k]
            out = out + acc
        return out

    # -- comatrix coalgebra ----------------------------------------------
    def delta(self) -> "TensorPoly":
        """Comultiplication Delta(c_jk) = sum_u c_ju (x) c_uk, multiplicatively."""
        n = self.alphabet.comatrix_n
        if n is None:
            raise ValueError("delta needs the comatrix alphabet")
        add, mul, zero = self.field.add, self.field.mul, self.field.zero
        out = {}
        for w, c in self.terms.items():
            partial = {((), ()): c}
            for k in w:
                j, kk = divmod(k, n)
                nxt = {}
                for (w1, w2), cc in partial.items():
                    for u in range(n):
                        key = (w1 + (j * n + u,), w2 + (u * n + kk,))
                        nxt[key] = add(nxt.get(key, zero), cc)
                partial = nxt
            for key, cc in partial.items():
                s = add(out.get(key, zero), cc)
                if s == zero:
                    out.pop(key, None)
                else:
                    out[key] = s
        res = TensorPoly(self.alphabet, self.field)
        res.terms = out
        return res

    def eps(self):
        """Counit eps(c_jk) = delta_jk, extended multiplicatively and linearly."""
        n = self.alphabet.comatrix_n
        if n is None:
            raise ValueError("eps needs the comatrix alphabet")
        acc = self.field.zero
        for w, c in self.terms.items():
            if all(k // n == k % n for k in w):
                acc = self.field.add(acc, c)
        return acc


class TensorPoly:
    """Element of T(C) (x) T(C): (word, word) pairs with nonzero scalars."""

    __slots__ = ("alphabet", "field", "terms")

    def __init__(self, alphabet, field, terms=None):
        self.alphabet = alphabet
        self.field = field
        self.terms = {}
        if terms:
            zero = field.zero
            for key, c in terms.items():
                if c != zero:
                    self.terms[key] = c

    @classmethod
    def zero(cls, alphabet, field):
        return cls(alphabet, field)

    @classmethod
    def of(cls, left: NCPoly, right: NCPoly):
        left._same_parent(right)
        mul, zero = left.field.mul, left.field.zero
        terms = {}
        for w1, c1 in left.terms.items():
            for w2, c2 in right.terms.items():
                terms[(w1, w2)] = mul(c1, c2)
        out = cls(left.alphabet, left.field)
        out.terms = {k: v for k, v in terms.items() if v != zero}
        return out

    def _same_parent(self, other):
        if self.alphabet != other.alphabet or self.field != other.field:
            raise ValueError("mixed alphabets or fields")

    def __add__(self, other):
        self._same_parent(other)
        add, zero = self.field.add, self.field.zero
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = add(terms.get(key, zero), c)
            if s == zero:
                terms.pop(key, None)
            else:
                terms[key] = s
        out = TensorPoly(self.alphabet, self.field)
        out.terms = terms
        return out

    def __neg__(self):
        neg = self.field.neg
        out = TensorPoly(self.alphabet, self.field)
        out.terms = {k: neg(c) for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """(a (x) b)(c (x) d) = ac (x) bd, bilinearly."""
        self._same_parent(other)
        add, mul, zero = self.field.add, self.field.mul, self.field.zero
        terms = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in other.terms.items():
                key = (a + c, b + d)
                s = add(terms.get(key, zero), mul(c1, c2))
                if s == zero:
                    terms.pop(key, None)
                else:
                    terms[key] = s
        out = TensorPoly(self.alphabet, self.field)
        out.terms = terms
        return out

    def __eq__(self, other):
        return (
            isinstance(other, TensorPoly)
            and self.alphabet == other.alphabet
            and self.field == other.field
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def map_legs(self, f):
        """Apply an NCPoly -> NCPoly linear map to both tensor legs."""
        out = TensorPoly.zero(self.alphabet, self.field)
        for (w1, w2), c in self.terms.items():
            left = f(NCPoly.word(self.alphabet, self.field, w1))
            right = f(NCPoly.word(self.alphabet, self.field, w2))
            out = out + TensorPoly.of(left.scale(c), right)
        return out

    def render(self):
        if not self.terms:
            return "0"
        names = self.alphabet.names

        def mono(w):
            return "*".join(names[k] for k in w) if w else "1"

        keys = sorted(self.terms, key=lambda k: (word_key(k[0]), word_key(k[1])), reverse=True)
        parts = [f"{self.field.render(self.terms[k])}*({mono(k[0])} (x) {mono(k[1])})"
                 for k in keys]
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"TensorPoly({self.render()})"
