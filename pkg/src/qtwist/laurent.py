"""Bivariate Laurent polynomials over a prime field.

A polynomial is a finitely supported map from exponent pairs (i, j),
i.e. monomials x^i y^j with i, j in Z, to nonzero field elements.
Values are immutable: every operation returns a new polynomial with
zero coefficients pruned.

The text parser accepts the notation used throughout the bundled
reference tables, e.g. ``"x y^-1 + 1 + y^-2"`` or ``"-x^3 - x y^-1 + 1"``:

    poly   := ws term (ws ('+'|'-') ws term)* ws
    term   := coeff ('*'? mono)? | mono
    mono   := factor (ws factor)*
    factor := ('x'|'y') ('^' int)?
    coeff  := digit+
    int    := '-'? digit+

A leading '-' on the first term is allowed; an absent exponent means 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import PrimeField


class FieldMismatchError(ValueError):
    """Operands belong to different prime fields."""


class ZeroPolynomialError(ValueError):
    """A nonzero polynomial was required."""


class PolyParseError(ValueError):
    """Syntax error in polynomial text; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class LaurentPoly:
    """Element of F_q[x^{±1}, y^{±1}] with explicit term map."""

    __slots__ = ("field", "terms")

    def __init__(self, field: PrimeField, terms: dict[tuple[int, int], int] | None = None):
        self.field = field
        clean: dict[tuple[int, int], int] = {}
        if terms:
            q = field.q
            for (i, j), c in terms.items():
                c %= q
                if c:
                    clean[(int(i), int(j))] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field: PrimeField) -> LaurentPoly:
        return cls(field, {})

    @classmethod
    def one(cls, field: PrimeField) -> LaurentPoly:
        return cls(field, {(0, 0): 1})

    @classmethod
    def monomial(cls, field: PrimeField, i: int, j: int, coeff: int = 1) -> LaurentPoly:
        return cls(field, {(i, j): coeff})

    # -- basic queries ------------------------------------------------

    @property
    def weight(self) -> int:
        """Number of nonzero terms (0 for the zero polynomial)."""
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and other.field == self.field
            and other.terms == self.terms
        )

    def __hash__(self) -> int:
        return hash((self.field.q, frozenset(self.terms.items())))

    def _check_field(self, other: LaurentPoly) -> None:
        if other.field != self.field:
            raise FieldMismatchError(
                f"operands over F_{self.field.q} and F_{other.field.q}"
            )

    # -- ring operations ----------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        self._check_field(other)
        out = dict(self.terms)
        q = self.field.q
        for m, c in other.terms.items():
            s = (out.get(m, 0) + c) % q
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly(self.field, out)

    def __neg__(self) -> LaurentPoly:
        q = self.field.q
        return LaurentPoly(self.field, {m: q - c for m, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return self.scale(other)
        self._check_field(other)
        q = self.field.q
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                s = (out.get(m, 0) + c1 * c2) % q
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return LaurentPoly(self.field, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> LaurentPoly:
        c %= self.field.q
        if c == 0:
            return LaurentPoly.zero(self.field)
        q = self.field.q
        return LaurentPoly(self.field, {m: (v * c) % q for m, v in self.terms.items()})

    def shift(self, di: int, dj: int) -> LaurentPoly:
        """Multiply by the monomial x^di y^dj."""
        return LaurentPoly(
            self.field, {(i + di, j + dj): c for (i, j), c in self.terms.items()}
        )

    def antipode(self) -> LaurentPoly:
        """The involution x^m y^n -> x^-m y^-n (coefficients unchanged)."""
        return LaurentPoly(
            self.field, {(-i, -j): c for (i, j), c in self.terms.items()}
        )

    # -- printing -----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            c = self.terms[(i, j)]
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            mono = " ".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c} {mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly(q={self.field.q}, {self.terms!r})"


def antipode(p: LaurentPoly) -> LaurentPoly:
    return p.antipode()


# ---------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------

def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Split into (kind, value, offset) tokens; kinds: num, var, op."""
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(("num", text[start:pos], start))
        elif ch in ("x", "y"):
            tokens.append(("var", ch, pos))
            pos += 1
        elif ch in "+-^*":
            tokens.append(("op", ch, pos))
            pos += 1
        else:
            raise PolyParseError(f"unexpected character {ch!r}", pos)
    return tokens


class _Parser:
    def __init__(self, text: str, field: PrimeField):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self):
        tok = self._peek()
        if tok is None:
            raise PolyParseError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def parse(self) -> LaurentPoly:
        if not self.tokens:
            raise PolyParseError("empty polynomial", 0)
        q = self.field.q
        terms: dict[tuple[int, int], int] = {}
        sign = 1
        tok = self._peek()
        if tok and tok[:2] == ("op", "-"):
            self._next()
            sign = -1
        while True:
            mono, coeff = self._term()
            c = (sign * coeff) % q
            s = (terms.get(mono, 0) + c) % q
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
            tok = self._peek()
            if tok is None:
                break
            kind, val, off = tok
            if kind == "op" and val in "+-":
                self._next()
                sign = 1 if val == "+" else -1
            else:
                raise PolyParseError(f"expected '+' or '-', got {val!r}", off)
        return LaurentPoly(self.field, terms)

    def _term(self) -> tuple[tuple[int, int], int]:
        tok = self._peek()
        if tok is None:
            raise PolyParseError("expected a term", len(self.text))
        kind, val, off = tok
        if kind == "num":
            self._next()
            coeff = int(val)
            tok = self._peek()
            if tok and tok[:2] == ("op", "*"):
                self._next()
                return self._mono(), coeff
            if tok and tok[0] == "var":
                return self._mono(), coeff
            return (0, 0), coeff
        if kind == "var":
            return self._mono(), 1
        raise PolyParseError(f"expected a term, got {val!r}", off)

    def _mono(self) -> tuple[int, int]:
        i = j = 0
        saw = False
        while True:
            tok = self._peek()
            if tok is None or tok[0] != "var":
                break
            saw = True
            _, var, _ = self._next()
            exp = 1
            tok = self._peek()
            if tok and tok[:2] == ("op", "^"):
                self._next()
                exp = self._int()
            if var == "x":
                i += exp
            else:
                j += exp
        if not saw:
            tok = self._peek()
            off = tok[2] if tok else len(self.text)
            raise PolyParseError("expected 'x' or 'y'", off)
        return (i, j)

    def _int(self) -> int:
        negative = False
        tok = self._next()
        if tok[:2] == ("op", "-"):
            negative = True
            tok = self._next()
        kind, val, off = tok
        if kind != "num":
            raise PolyParseError(f"expected an integer exponent, got {val!r}", off)
        return -int(val) if negative else int(val)


def parse_poly(text: str, field: PrimeField) -> LaurentPoly:
    """Parse polynomial text; coefficients are reduced mod q and like
    terms combined (a term cancelling to zero is pruned)."""
    return _Parser(text, field).parse()


# ---------------------------------------------------------------------
# ansatz normalization
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class AnsatzSpec:
    """A pair of generator polynomials, optionally in pivot-normal form
    (constant term present with coefficient 1)."""

    f: LaurentPoly
    g: LaurentPoly
    normalized: bool = False


def _normalize_one(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    # Pivot = lexicographically smallest exponent pair; translating it to
    # the origin and scaling its coefficient to 1 fixes one representative
    # per translation/unit-rescaling class.
    pivot = min(p.terms)
    u = p.field.inv(p.terms[pivot])
    return p.shift(-pivot[0], -pivot[1]).scale(u)


def normalize_ansatz(f: LaurentPoly, g: LaurentPoly) -> AnsatzSpec:
    """Translate and rescale f and g independently so each has constant
    term 1; idempotent, weight-preserving."""
    return AnsatzSpec(_normalize_one(f), _normalize_one(g), normalized=True)
