"""Exact dyadic rational arithmetic.

Every quantity the engine handles (stops, temperatures, thermograph
coordinates, bound constants) is a rational with a power-of-two
denominator. Values are normalized on construction, so equality and
hashing are structural. Numerators are plain ints: magnitude is bounded
only by memory, never by a machine word, and no float ever enters a
computation.
"""

from __future__ import annotations

import re

_FRACTION_RE = re.compile(r"([+-]?\d+)/(\d+)\Z")
_DECIMAL_RE = re.compile(r"([+-]?\d+)\.(\d+)\Z")
_INT_RE = re.compile(r"[+-]?\d+\Z")


class Dyadic:
    """num / 2**exp, normalized so exp >= 0 and (exp == 0 or num is odd)."""

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0) -> None:
        if not isinstance(num, int) or not isinstance(exp, int):
            raise TypeError(f"Dyadic parts must be int, got {num!r}, {exp!r}")
        if exp < 0:
            raise ValueError(f"negative exponent: {exp}")
        if num == 0:
            exp = 0
        elif exp:
            # strip common factors of two (trailing zero bits of num)
            shift = min(exp, (num & -num).bit_length() - 1)
            num >>= shift
            exp -= shift
        self.num = num
        self.exp = exp

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Parse "5", "-3/4" (power-of-two denominator) or "1.25"."""
        s = text.strip()
        if _INT_RE.match(s):
            return cls(int(s))
        m = _FRACTION_RE.match(s)
        if m:
            num, den = int(m.group(1)), int(m.group(2))
            if den <= 0 or den & (den - 1):
                raise ValueError(f"denominator is not a power of two: {text!r}")
            return cls(num, den.bit_length() - 1)
        m = _DECIMAL_RE.match(s)
        if m:
            digits = m.group(2)
            k = len(digits)
            whole = int(m.group(1))
            frac = int(digits)
            num = abs(whole) * 10**k + frac
            if s.lstrip().startswith("-"):
                num = -num
            # num / 10**k is dyadic iff 5**k divides num
            five = 5**k
            if num % five:
                raise ValueError(f"not a dyadic rational: {text!r}")
            return cls(num // five, k)
        raise ValueError(f"malformed dyadic literal: {text!r}")

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Dyadic | None":
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int):
            return Dyadic(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        e = max(self.exp, o.exp)
        return Dyadic((self.num << (e - self.exp)) + (o.num << (e - o.exp)), e)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        e = max(self.exp, o.exp)
        return Dyadic((self.num << (e - self.exp)) - (o.num << (e - o.exp)), e)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __abs__(self):
        return Dyadic(abs(self.num), self.exp)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Dyadic(self.num * o.num, self.exp + o.exp)

    __rmul__ = __mul__

    def half(self) -> "Dyadic":
        return Dyadic(self.num, self.exp + 1)

    # -- order ------------------------------------------------------------

    def _diff_sign(self, o: "Dyadic") -> int:
        e = max(self.exp, o.exp)
        d = (self.num << (e - self.exp)) - (o.num << (e - o.exp))
        return (d > 0) - (d < 0)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.exp == o.exp

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) >= 0

    def __hash__(self):
        # integer-valued dyadics normalize to exp == 0, so hashing them
        # like plain ints keeps mixed int/Dyadic dict keys coherent
        return hash(self.num) if self.exp == 0 else hash((self.num, self.exp))

    def __bool__(self):
        return self.num != 0

    # -- views ------------------------------------------------------------

    @property
    def is_integer(self) -> bool:
        return self.exp == 0

    def __int__(self) -> int:
        if self.exp:
            raise ValueError(f"{self} is not an integer")
        return self.num

    def __float__(self) -> float:
        # rendering only; exact code paths never call this
        return self.num / (1 << self.exp)

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def __repr__(self) -> str:
        return f"Dyadic({str(self)!r})"


ZERO = Dyadic(0)
ONE = Dyadic(1)
MINUS_ONE = Dyadic(-1)
HALF = Dyadic(1, 1)


def dyadic(value) -> Dyadic:
    """Coerce an int, string or Dyadic to a Dyadic."""
    if isinstance(value, Dyadic):
        return value
    if isinstance(value, int):
        return Dyadic(value)
    if isinstance(value, str):
        return Dyadic.parse(value)
    raise TypeError(f"cannot make a Dyadic from {value!r}")
