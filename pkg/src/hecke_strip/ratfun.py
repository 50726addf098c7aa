"""Exact arithmetic in the Laurent ring Q[a, a^-1] and its fraction field Q(a).

The deformation parameter is called ``a`` throughout.  A Laurent polynomial
stores a map {exponent: Fraction} with no zero coefficients; the zero
polynomial is the empty map.  A rational function num/den is kept in a
canonical form:

  * den is an ordinary polynomial in a (no negative exponents) with a
    nonzero constant term -- every power of a is cleared into num,
  * den is monic,
  * num and den have no common polynomial factor.

With this normal form, equality of rational functions is structural
equality of the stored terms, so all downstream identity checks are exact.

Quantum integers live here as well:

    [n] = (a^n - a^-n) / (a - a^-1) = a^(n-1) + a^(n-3) + ... + a^-(n-1)

which is a genuine Laurent polynomial (the division is exact), with
[0] = 0 and [-n] = -[n].
"""

from __future__ import annotations

from fractions import Fraction


class DenominatorVanishes(ZeroDivisionError):
    """A rational function was evaluated at a zero of its denominator."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class LaurentPoly:
    """Laurent polynomial in a single variable a over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[int, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                c = _as_fraction(coeff)
                if c:
                    clean[int(exp)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls({0: _as_fraction(c)})

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> LaurentPoly:
        return cls({exp: _as_fraction(coeff)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Largest exponent; only defined for nonzero polynomials."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def low(self) -> int:
        """Smallest exponent; only defined for nonzero polynomials."""
        if not self.terms:
            raise ValueError("zero polynomial has no lowest exponent")
        return min(self.terms)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        p = LaurentPoly.__new__(LaurentPoly)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        p = LaurentPoly.__new__(LaurentPoly)
        p.terms = {exp: -c for exp, c in self.terms.items()}
        return p

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return LaurentPoly()
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = LaurentPoly.__new__(LaurentPoly)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("LaurentPoly powers must be nonnegative integers")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by a^k."""
        p = LaurentPoly.__new__(LaurentPoly)
        p.terms = {exp + k: c for exp, c in self.terms.items()}
        return p

    def scale(self, c) -> LaurentPoly:
        c = _as_fraction(c)
        if not c:
            return LaurentPoly()
        p = LaurentPoly.__new__(LaurentPoly)
        p.terms = {exp: c * v for exp, v in self.terms.items()}
        return p

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- evaluation / display ----------------------------------------------

    def evaluate(self, x) -> Fraction:
        """Substitute a := x (a nonzero exact rational)."""
        x = _as_fraction(x)
        if x == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at a = 0")
        total = Fraction(0)
        for exp, c in self.terms.items():
            total += c * x**exp
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            if exp == 0:
                body = str(abs(c))
            else:
                var = "a" if exp == 1 else f"a^{exp}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    # -- JSON ----------------------------------------------------------------

    def to_json(self) -> dict[str, str]:
        """Encode as {"exponent": "num/den"} with exponents descending."""
        return {str(exp): str(self.terms[exp]) for exp in sorted(self.terms, reverse=True)}

    @classmethod
    def from_json(cls, obj: dict) -> LaurentPoly:
        return cls({int(exp): Fraction(val) for exp, val in obj.items()})


def quantum_int(n: int) -> LaurentPoly:
    """The quantum integer [n] = (a^n - a^-n)/(a - a^-1) as a Laurent polynomial.

    [0] = 0, [n] = a^(n-1) + a^(n-3) + ... + a^-(n-1) for n > 0, and
    [-n] = -[n].
    """
    if n == 0:
        return LaurentPoly()
    if n < 0:
        return -quantum_int(-n)
    return LaurentPoly({exp: 1 for exp in range(-(n - 1), n, 2)})


# ---------------------------------------------------------------------------
# Dense helpers for ordinary polynomials in Q[a] (ascending coefficient lists,
# nonzero leading coefficient).  Used only for gcd/division during
# canonicalization.
# ---------------------------------------------------------------------------


def _dense(p: LaurentPoly) -> list[Fraction]:
    """Coefficient list of a polynomial with no negative exponents."""
    deg = p.degree()
    coeffs = [Fraction(0)] * (deg + 1)
    for exp, c in p.terms.items():
        coeffs[exp] = c
    return coeffs


def _from_dense(coeffs: list[Fraction]) -> LaurentPoly:
    return LaurentPoly({i: c for i, c in enumerate(coeffs) if c})


def _dense_divmod(u: list[Fraction], v: list[Fraction]):
    """Quotient and remainder of dense polynomials; v must be nonzero."""
    u = list(u)
    dv = len(v) - 1
    lead = v[-1]
    if len(u) - 1 < dv:
        return [Fraction(0)], u
    q = [Fraction(0)] * (len(u) - dv)
    for k in range(len(u) - dv - 1, -1, -1):
        factor = u[k + dv] / lead
        if factor:
            q[k] = factor
            for j in range(dv + 1):
                u[k + j] -= factor * v[j]
    while len(u) > 1 and not u[-1]:
        u.pop()
    return q, u


def _dense_gcd(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
    """Monic gcd of dense polynomials over Q."""
    while len(v) > 1 or v[0]:
        _, r = _dense_divmod(u, v)
        u, v = v, r
    lead = u[-1]
    if lead != 1:
        u = [c / lead for c in u]
    return u


class RationalFunction:
    """Element of Q(a), stored in reduced canonical form (see module docs)."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = self._promote(num)
        den = self._promote(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = self._canonical(num, den)

    @staticmethod
    def _promote(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.constant(x)
        raise TypeError(f"cannot build a rational function from {type(x).__name__}")

    @staticmethod
    def _canonical(num: LaurentPoly, den: LaurentPoly):
        if num.is_zero():
            return LaurentPoly(), LaurentPoly.one()
        if len(den.terms) == 1:
            # Monomial denominator: fold it into the numerator entirely.
            exp, c = next(iter(den.terms.items()))
            return num.shift(-exp).scale(1 / c), LaurentPoly.one()
        shift = num.low() - den.low()
        n = num.shift(-num.low())
        d = den.shift(-den.low())
        if len(num.terms) > 1:
            g = _dense_gcd(_dense(n), _dense(d))
            if len(g) > 1:
                n = _from_dense(_dense_divmod(_dense(n), g)[0])
                d = _from_dense(_dense_divmod(_dense(d), g)[0])
        lead = d.terms[d.degree()]
        if lead != 1:
            n = n.scale(1 / lead)
            d = d.scale(1 / lead)
        return n.shift(shift), d

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> RationalFunction:
        return _RF_ZERO

    @classmethod
    def one(cls) -> RationalFunction:
        return _RF_ONE

    @classmethod
    def gen(cls) -> RationalFunction:
        """The generator a itself."""
        return _RF_A

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def is_one(self) -> bool:
        return self.num.terms == {0: 1} and self.den.terms == {0: 1}

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return RationalFunction(other)
        return None

    def __add__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num.terms:
            return other
        if not other.num.terms:
            return self
        if self.den.terms == other.den.terms:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        out = RationalFunction.__new__(RationalFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return _RF_ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("zero rational function has no inverse")
        return RationalFunction(self.den, self.num)

    def __pow__(self, k: int) -> RationalFunction:
        if not isinstance(k, int):
            raise TypeError("rational function powers must be integers")
        if k < 0:
            return self.inverse() ** (-k)
        result = _RF_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num.terms == other.num.terms and self.den.terms == other.den.terms

    def __hash__(self) -> int:
        return hash((frozenset(self.num.terms.items()), frozenset(self.den.terms.items())))

    # -- evaluation / display ----------------------------------------------

    def evaluate(self, x) -> Fraction:
        """Substitute a := x.  Raises DenominatorVanishes at poles."""
        x = _as_fraction(x)
        if x == 0:
            raise ValueError("cannot evaluate a rational function at a = 0")
        d = self.den.evaluate(x)
        if d == 0:
            raise DenominatorVanishes(f"denominator {self.den} vanishes at a = {x}")
        return self.num.evaluate(x) / d

    def __str__(self) -> str:
        if self.den.terms == {0: 1}:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> RationalFunction:
        return cls(LaurentPoly.from_json(obj["num"]), LaurentPoly.from_json(obj["den"]))


_RF_ZERO = RationalFunction.__new__(RationalFunction)
_RF_ZERO.num = LaurentPoly()
_RF_ZERO.den = LaurentPoly.one()

_RF_ONE = RationalFunction.__new__(RationalFunction)
_RF_ONE.num = LaurentPoly.one()
_RF_ONE.den = LaurentPoly.one()

_RF_A = RationalFunction.__new__(RationalFunction)
_RF_A.num = LaurentPoly.monomial(1)
_RF_A.den = LaurentPoly.one()
