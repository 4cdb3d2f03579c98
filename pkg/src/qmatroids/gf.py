"""Exact arithmetic in small finite fields GF(p^e).

Elements are encoded as integers ``0 <= x < q``: the polynomial
``c_0 + c_1 x + ... + c_{e-1} x^{e-1}`` over Z_p maps to ``sum c_i p^i``.
So 0 is zero, 1 is one, and for prime fields the code is the residue.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import DivisionByZero, InvalidElement, InvalidField

DEFAULT_MAX_SIZE = 2**16
_ADD_TABLE_LIMIT = 1024


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise InvalidField otherwise."""
    if q < 2:
        raise InvalidField(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise InvalidField(f"{q} is not a prime power")
    return p, e


# -- polynomials over Z_p, coefficient lists with constant term first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    m = _trim(list(m))
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        shift = len(a) - len(m)
        f = a[-1] * inv_lead % p
        for i, c in enumerate(m):
            a[i + shift] = (a[i + shift] - f * c) % p
        _trim(a)
    return a


def _polymul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _monic_polys(p: int, d: int):
    for code in range(p**d):
        coeffs = []
        for _ in range(d):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    f = _trim([c % p for c in modulus])
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _polymod(f, g, p):
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Least irreducible monic polynomial of degree ``e`` (by integer code)."""
    for m in _monic_polys(p, e):
        if is_irreducible(m, p):
            return tuple(m)
    raise InvalidField(f"no irreducible polynomial of degree {e} over Z_{p}")


class GF:
    """The field GF(p^e) with precomputed log/antilog tables.

    Instances are immutable after construction and compare equal when
    ``(p, e, modulus)`` agree.
    """

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None,
                 max_size: int = DEFAULT_MAX_SIZE):
        if not is_prime(p):
            raise InvalidField(f"characteristic {p} is not prime")
        if e < 1:
            raise InvalidField("extension degree must be >= 1")
        q = p**e
        if q > max_size:
            raise InvalidField(f"field of order {q} exceeds the table cap {max_size}")
        if e == 1:
            modulus = (0, 1)
        elif modulus is None:
            modulus = default_modulus(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise InvalidField("modulus must be monic of degree e (constant term first)")
            if not is_irreducible(modulus, p):
                raise InvalidField(f"modulus {modulus} is reducible over Z_{p}")
        self.p, self.e, self.q = p, e, q
        self.modulus = tuple(modulus)
        self._build_tables()

    @classmethod
    def of_order(cls, q: int, modulus: Sequence[int] | None = None) -> "GF":
        p, e = prime_power(q)
        return cls(p, e, modulus)

    # -- construction --------------------------------------------------------
    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        self._digits = [self._to_coeffs(x) for x in range(q)]
        if p == 2:
            self._add = None
        elif q <= _ADD_TABLE_LIMIT:
            self._add = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add = None
        self.neg_table = [self._from_coeffs([(-c) % p for c in self._digits[a]]) for a in range(q)]

        # find a primitive element and fill exp/log
        for g in range(1, q):
            exp = [1]
            x = [1]
            gc = list(self._digits[g])
            while True:
                x = _polymod(_polymul(x, gc, p), self.modulus, p) if e > 1 else [x[0] * g % p]
                code = self._from_coeffs(x)
                if code == 1:
                    break
                exp.append(code)
            if len(exp) == q - 1:
                break
        self.primitive = g
        self._exp = exp + exp
        self._log = [0] * q
        for i, v in enumerate(exp):
            self._log[v] = i
        self.inv_table = [0] + [self._exp[(q - 1 - self._log[a]) % (q - 1)] for a in range(1, q)]

    def _to_coeffs(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def _from_coeffs(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(coeffs)[: self.e]):
            code = code * self.p + c
        return code

    def _digit_add(self, a: int, b: int) -> int:
        da, db = self._digits[a], self._digits[b]
        return self._from_coeffs([(x + y) % self.p for x, y in zip(da, db)])

    # -- element conversion --------------------------------------------------
    def element(self, value) -> int:
        """Validate and encode an element given as an int code or coefficient sequence."""
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise InvalidElement(f"{value} is not an element of GF({self.q})")
            return value
        coeffs = list(value)
        if len(coeffs) != self.e or any(not (isinstance(c, int) and 0 <= c < self.p) for c in coeffs):
            raise InvalidElement(f"{coeffs!r} is not a coefficient vector of GF({self.q})")
        return self._from_coeffs(coeffs)

    def coeffs(self, x: int) -> tuple[int, ...]:
        return self._digits[self.element(x)]

    # -- arithmetic on codes (no validation: hot path) -------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg_table[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self.q - 1]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k > 0 else 1
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    # -- identity -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    """Cached field of order ``q`` with the default modulus."""
    return GF.of_order(q)


_OPS = {"add": GF.add, "sub": GF.sub, "mul": GF.mul, "div": GF.div}


def field_arith(F: GF, a, b, op: str) -> int:
    """Checked binary operation; ``a`` and ``b`` may be codes or coefficient vectors."""
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    return _OPS[op](F, F.element(a), F.element(b))
