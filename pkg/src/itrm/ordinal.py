"""Exact arithmetic for ordinals below epsilon-0 in Cantor normal form.

An ordinal is stored as a finite sequence of (exponent, coefficient) pairs
with strictly decreasing exponents (themselves ordinals) and positive
integer coefficients; the empty sequence is 0.  Normal forms are unique,
so equality is structural.  All operations are pure; values are immutable
and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union


class OrdinalError(Exception):
    """Base class for ordinal arithmetic errors."""


class UnderflowError(OrdinalError):
    """Left subtraction was asked to remove a prefix that is too large."""


class DepthLimitError(OrdinalError):
    """A normal form exceeded the configured exponent-nesting bound."""


class BaseNotClosedError(OrdinalError):
    """A base-expansion operation was given a base that is not
    multiplicatively closed (or is below omega)."""


class InvalidDigitsError(OrdinalError):
    """A digit list violates the base-expansion invariants."""


class MalformedDescriptorError(OrdinalError):
    """A sequence descriptor does not describe a liminf-able sequence."""


class ArgumentOutOfRangeError(OrdinalError):
    """A pairing argument lies outside the declared bound."""


class OrdinalSyntaxError(OrdinalError):
    """Unparseable ordinal literal; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# Nesting guard: values must stay below epsilon-0, i.e. have finite
# exponent-tower height.  The limit is configurable for stress runs.
_DEPTH_LIMIT = 64


def set_depth_limit(limit: int) -> None:
    global _DEPTH_LIMIT
    if limit < 1:
        raise ValueError("depth limit must be positive")
    _DEPTH_LIMIT = limit


def get_depth_limit() -> int:
    return _DEPTH_LIMIT


OrdinalLike = Union["Ordinal", int]


class Ordinal:
    """An ordinal below epsilon-0 in Cantor normal form.

    Construct from a non-negative int, or use `omega_pow` / the parser for
    infinite values.  Supports +, *, **, and comparisons against Ordinal or int.
    """

    __slots__ = ("_terms", "_depth", "_hash")

    _terms: tuple[tuple["Ordinal", int], ...]
    _depth: int
    _hash: int

    def __init__(self, value: int = 0):
        if isinstance(value, Ordinal):
            self._terms = value._terms
            self._depth = value._depth
            self._hash = value._hash
            return
        if not isinstance(value, int):
            raise TypeError(f"cannot build an Ordinal from {type(value).__name__}")
        if value < 0:
            raise ValueError("ordinals are non-negative")
        if value == 0:
            self._terms = ()
            self._depth = 0
        else:
            self._terms = ((_ZERO, value),)
            self._depth = 1
        self._hash = hash(self._terms)

    @staticmethod
    def _make(terms: tuple[tuple["Ordinal", int], ...]) -> "Ordinal":
        o = object.__new__(Ordinal)
        o._terms = terms
        depth = 0
        for exp, coeff in terms:
            if coeff <= 0:
                raise OrdinalError("coefficients must be positive")
            if exp._depth >= depth:
                depth = exp._depth + 1
        if depth > _DEPTH_LIMIT:
            raise DepthLimitError(
                f"normal-form nesting depth {depth} exceeds limit {_DEPTH_LIMIT}"
            )
        o._depth = depth
        o._hash = hash(terms)
        return o

    # -- structure ----------------------------------------------------

    @property
    def terms(self) -> tuple[tuple["Ordinal", int], ...]:
        """The (exponent, coefficient) pairs, exponents strictly decreasing."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_finite(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0].is_zero)

    def to_int(self) -> int:
        if self.is_zero:
            return 0
        if self.is_finite:
            return self._terms[0][1]
        raise OverflowError(f"{self} is not a natural number")

    @property
    def leading_exponent(self) -> "Ordinal":
        if self.is_zero:
            raise OrdinalError("0 has no leading exponent")
        return self._terms[0][0]

    @property
    def trailing_exponent(self) -> "Ordinal":
        if self.is_zero:
            raise OrdinalError("0 has no trailing exponent")
        return self._terms[-1][0]

    @property
    def is_limit(self) -> bool:
        """True for nonzero ordinals with no finite part."""
        return bool(self._terms) and not self._terms[-1][0].is_zero

    @property
    def is_successor(self) -> bool:
        return bool(self._terms) and self._terms[-1][0].is_zero

    def predecessor(self) -> "Ordinal":
        if not self.is_successor:
            raise OrdinalError(f"{self} is not a successor")
        exp, coeff = self._terms[-1]
        if coeff > 1:
            return Ordinal._make(self._terms[:-1] + ((exp, coeff - 1),))
        return Ordinal._make(self._terms[:-1])

    def limit_part(self) -> "Ordinal":
        """The ordinal with the finite part stripped."""
        if self.is_successor:
            return Ordinal._make(self._terms[:-1])
        return self

    def finite_part(self) -> int:
        if self.is_successor:
            return self._terms[-1][1]
        return 0

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Ordinal):
            return self._terms == other._terms
        if isinstance(other, int):
            return self.is_finite and (self.to_int() == other)
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: OrdinalLike) -> bool:
        return compare(self, _coerce(other)) < 0

    def __le__(self, other: OrdinalLike) -> bool:
        return compare(self, _coerce(other)) <= 0

    def __gt__(self, other: OrdinalLike) -> bool:
        return compare(self, _coerce(other)) > 0

    def __ge__(self, other: OrdinalLike) -> bool:
        return compare(self, _coerce(other)) >= 0

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic sugar ----------------------------------------------

    def __add__(self, other: OrdinalLike) -> "Ordinal":
        return add(self, _coerce(other))

    def __radd__(self, other: int) -> "Ordinal":
        return add(_coerce(other), self)

    def __mul__(self, other: OrdinalLike) -> "Ordinal":
        return mul(self, _coerce(other))

    def __rmul__(self, other: int) -> "Ordinal":
        return mul(_coerce(other), self)

    def __pow__(self, other: OrdinalLike) -> "Ordinal":
        return power(self, _coerce(other))

    def __repr__(self) -> str:
        return format_ordinal(self)


def _coerce(value: OrdinalLike) -> Ordinal:
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int):
        return from_int(value)
    raise TypeError(f"expected Ordinal or int, got {type(value).__name__}")


_ZERO = Ordinal(0)
_small_cache: dict[int, Ordinal] = {0: _ZERO}


def from_int(n: int) -> Ordinal:
    cached = _small_cache.get(n)
    if cached is not None:
        return cached
    o = Ordinal(n)
    if 0 <= n < 1024:
        _small_cache[n] = o
    return o


ZERO = from_int(0)
ONE = from_int(1)


def omega_pow(exponent: OrdinalLike, coefficient: int = 1) -> Ordinal:
    """The ordinal w^exponent * coefficient."""
    e = _coerce(exponent)
    if coefficient == 0:
        return ZERO
    if coefficient < 0:
        raise ValueError("coefficient must be non-negative")
    return Ordinal._make(((e, coefficient),))


OMEGA = omega_pow(ONE)


# ---------------------------------------------------------------------------
# Core arithmetic
# ---------------------------------------------------------------------------


def compare(a: OrdinalLike, b: OrdinalLike) -> int:
    """Three-way ordinal comparison: -1, 0 or 1.

    Lexicographic on the (exponent, coefficient) term lists, which realises
    the ordinal order on normal forms.
    """
    a = _coerce(a)
    b = _coerce(b)
    if a._terms == b._terms:
        return 0
    for (ea, ca), (eb, cb) in zip(a._terms, b._terms):
        c = compare(ea, eb)
        if c != 0:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    return -1 if len(a._terms) < len(b._terms) else 1


def add(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Ordinal sum a + b; trailing terms of `a` below b's lead are absorbed."""
    a = _coerce(a)
    b = _coerce(b)
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    lead = b._terms[0][0]
    keep = len(a._terms)
    while keep > 0 and compare(a._terms[keep - 1][0], lead) < 0:
        keep -= 1
    if keep > 0 and compare(a._terms[keep - 1][0], lead) == 0:
        merged = (lead, a._terms[keep - 1][1] + b._terms[0][1])
        return Ordinal._make(a._terms[: keep - 1] + (merged,) + b._terms[1:])
    return Ordinal._make(a._terms[:keep] + b._terms)


def left_sub(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """The unique c with b + c = a.  Requires b <= a.

    This strips a known prefix: left_sub(w^2*3 + 5, w^2*3) = 5.
    """
    a = _coerce(a)
    b = _coerce(b)
    if compare(b, a) > 0:
        raise UnderflowError(f"cannot subtract {b} from {a}")
    for i, (tb, ta) in enumerate(zip(b._terms, a._terms)):
        if tb == ta:
            continue
        eb, cb = tb
        ea, ca = ta
        if compare(eb, ea) != 0:
            # b's term is smaller here; the whole suffix of a from i survives.
            return Ordinal._make(a._terms[i:])
        if cb > ca:
            raise UnderflowError(f"cannot subtract {b} from {a}")
        if cb < ca:
            return Ordinal._make(((ea, ca - cb),) + a._terms[i + 1 :])
    if len(b._terms) == len(a._terms):
        return ZERO
    return Ordinal._make(a._terms[len(b._terms) :])


def mul(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Ordinal product in normal form."""
    a = _coerce(a)
    b = _coerce(b)
    if a.is_zero or b.is_zero:
        return ZERO
    lead_exp, lead_coeff = a._terms[0]
    out: list[tuple[Ordinal, int]] = []
    for exp, coeff in b._terms:
        if exp.is_zero:
            # Finite factor multiplies the leading coefficient; a's tail rides along.
            out.append((lead_exp, lead_coeff * coeff))
            out.extend(a._terms[1:])
        else:
            out.append((add(lead_exp, exp), coeff))
    return Ordinal._make(tuple(out))


def power(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Ordinal exponentiation a^b in normal form.

    Raises DepthLimitError when the result's exponent nesting would pass the
    configured bound (the value would approach epsilon-0 territory).
    """
    a = _coerce(a)
    b = _coerce(b)
    if b.is_zero:
        return ONE
    if a.is_zero:
        return ZERO
    if a == ONE:
        return ONE
    if b.is_finite:
        return _pow_finite(a, b.to_int())
    lam = b.limit_part()
    k = b.finite_part()
    if a.is_finite:
        # n^(w*mu) = w^mu for finite n >= 2; peel one omega from each exponent.
        mu_terms = tuple((left_sub(e, ONE), c) for e, c in lam._terms)
        head = omega_pow(Ordinal._make(mu_terms))
    else:
        head = omega_pow(mul(a.leading_exponent, lam))
    return mul(head, _pow_finite(a, k)) if k else head


def _pow_finite(a: Ordinal, k: int) -> Ordinal:
    if k == 0:
        return ONE
    result = a
    bits = bin(k)[3:]
    for bit in bits:
        result = mul(result, result)
        if bit == "1":
            result = mul(result, a)
    return result


# ---------------------------------------------------------------------------
# Closure predicates (decided by normal-form shape)
# ---------------------------------------------------------------------------


def is_additively_closed(x: OrdinalLike) -> bool:
    """True iff x = w^g for some g (so u + v < x whenever u, v < x)."""
    x = _coerce(x)
    return len(x._terms) == 1 and x._terms[0][1] == 1


def is_multiplicatively_closed(x: OrdinalLike) -> bool:
    """True iff x is 1, 2, or w^(w^g) (so u * v < x whenever u, v < x)."""
    x = _coerce(x)
    if x == ONE or x == from_int(2):
        return True
    if not is_additively_closed(x):
        return False
    return is_additively_closed(x._terms[0][0]) and not x._terms[0][0].is_zero


def is_exponentially_closed_up_to(x: OrdinalLike, bound: OrdinalLike) -> bool:
    """True iff u^v < x for all u < x and v < bound.

    Exponents below 2 are trivial; past that, x must be multiplicatively
    closed, say x = w^(w^g), and every v < bound must multiply exponents
    without escaping: this holds exactly when bound <= w^(w^t) for t the
    trailing exponent of g (t = 0 when g = 0, i.e. x = w).
    """
    x = _coerce(x)
    bound = _coerce(bound)
    if compare(bound, from_int(2)) <= 0:
        return x.is_zero or compare(x, from_int(2)) >= 0 or bound.is_zero
    if x == from_int(2):
        return True
    if compare(x, OMEGA) < 0:
        return False
    if not is_multiplicatively_closed(x):
        return False
    g = x._terms[0][0]._terms[0][0]
    t = ZERO if g.is_zero else g.trailing_exponent
    return compare(bound, omega_pow(omega_pow(t))) <= 0


# ---------------------------------------------------------------------------
# Base-alpha expansions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BaseDigits:
    """A base-alpha expansion: x = sum of base^position * digit.

    Positions strictly decrease and every digit is a nonzero ordinal below
    the base.  Only defined for multiplicatively closed bases >= omega,
    which is what makes the expansion unique.
    """

    base: Ordinal
    digits: tuple[tuple[Ordinal, Ordinal], ...]

    def __iter__(self):
        return iter(self.digits)


def _require_expansion_base(base: Ordinal) -> Ordinal:
    """Validate the base and return gamma where base = w^(w^gamma)."""
    if compare(base, OMEGA) < 0 or not is_multiplicatively_closed(base):
        raise BaseNotClosedError(
            f"base {base} is not a multiplicatively closed ordinal >= w"
        )
    return base._terms[0][0]._terms[0][0]


def base_decompose(x: OrdinalLike, base: OrdinalLike) -> BaseDigits:
    """The unique base-alpha expansion of x.

    With base = w^b (b = w^gamma additively closed), a CNF term w^e * c of x
    lands at position q and sub-digit w^r * c where e = b*q + r, r < b; the
    split is just e's terms at-or-above gamma versus below.
    """
    x = _coerce(x)
    base = _coerce(base)
    gamma = _require_expansion_base(base)
    out: list[tuple[Ordinal, list[tuple[Ordinal, int]]]] = []
    for e, c in x._terms:
        high: list[tuple[Ordinal, int]] = []
        low: list[tuple[Ordinal, int]] = []
        for u, k in e._terms:
            if compare(u, gamma) >= 0:
                high.append((left_sub(u, gamma), k))
            else:
                low.append((u, k))
        position = Ordinal._make(tuple(high))
        rest = Ordinal._make(tuple(low))
        if out and out[-1][0] == position:
            out[-1][1].append((rest, c))
        else:
            out.append((position, [(rest, c)]))
    digits = tuple(
        (pos, Ordinal._make(tuple(parts))) for pos, parts in out
    )
    return BaseDigits(base=base, digits=digits)


def base_compose(
    digits: BaseDigits | Iterable[tuple[OrdinalLike, OrdinalLike]],
    base: OrdinalLike | None = None,
) -> Ordinal:
    """Sum base^position * digit; inverse of base_decompose."""
    if isinstance(digits, BaseDigits):
        if base is not None and _coerce(base) != digits.base:
            raise InvalidDigitsError("conflicting bases")
        base_ord = digits.base
        pairs = digits.digits
    else:
        if base is None:
            raise InvalidDigitsError("a base is required for a raw digit list")
        base_ord = _coerce(base)
        pairs = tuple((_coerce(p), _coerce(d)) for p, d in digits)
    _require_expansion_base(base_ord)
    total = ZERO
    previous: Ordinal | None = None
    for position, digit in pairs:
        if previous is not None and compare(position, previous) >= 0:
            raise InvalidDigitsError("positions must strictly decrease")
        if digit.is_zero:
            raise InvalidDigitsError("digits must be nonzero")
        if compare(digit, base_ord) >= 0:
            raise InvalidDigitsError(f"digit {digit} is not below base {base_ord}")
        total = add(total, mul(power(base_ord, position), digit))
        previous = position
    return total


# ---------------------------------------------------------------------------
# liminf of described sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstantDigit:
    """A digit that is eventually fixed along the limit."""

    value: Ordinal


@dataclass(frozen=True)
class IncreasingDigit:
    """A digit that increases cofinally, unbounded below `sup`."""

    sup: Ordinal


DigitBehavior = Union[ConstantDigit, IncreasingDigit]


@dataclass(frozen=True)
class SequenceDescriptor:
    """Per-digit eventual behavior of an ordinal sequence along a limit.

    Digits are (position, behavior) with strictly decreasing positions over
    the given base.  At most one digit may be increasing, and every digit
    above it must be constant; the liminf is then well-defined.
    """

    base: Ordinal
    digits: tuple[tuple[Ordinal, DigitBehavior], ...]

    @staticmethod
    def constant(value: OrdinalLike, base: OrdinalLike) -> "SequenceDescriptor":
        v = _coerce(value)
        b = _coerce(base)
        if v.is_zero:
            return SequenceDescriptor(base=b, digits=())
        return SequenceDescriptor(base=b, digits=((ZERO, ConstantDigit(v)),))


def _validate_descriptor(d: SequenceDescriptor) -> None:
    base = d.base
    if compare(base, OMEGA) < 0:
        raise MalformedDescriptorError("descriptor base must be >= w")
    previous: Ordinal | None = None
    seen_increasing = False
    for position, behavior in d.digits:
        if previous is not None and compare(position, previous) >= 0:
            raise MalformedDescriptorError("positions must strictly decrease")
        previous = position
        if seen_increasing and isinstance(behavior, ConstantDigit):
            # Fine: constants below the varying digit are allowed (and ignored).
            continue
        if isinstance(behavior, ConstantDigit):
            if compare(behavior.value, base) >= 0:
                raise MalformedDescriptorError("constant digit not below base")
        elif isinstance(behavior, IncreasingDigit):
            if seen_increasing:
                raise MalformedDescriptorError(
                    "only one increasing digit is allowed"
                )
            if not behavior.sup.is_limit:
                raise MalformedDescriptorError(
                    "an increasing digit needs a limit ordinal as its sup"
                )
            if compare(behavior.sup, base) > 0:
                raise MalformedDescriptorError("digit sup exceeds the base")
            seen_increasing = True
        else:
            raise MalformedDescriptorError(f"unknown behavior {behavior!r}")


def liminf(descriptor: SequenceDescriptor) -> Ordinal:
    """The liminf of any sequence matching the descriptor.

    Constant digits above the varying position persist; the varying
    position contributes base^position * sup; everything below it washes
    out to 0.  With no varying digit the sequence is eventually constant.
    """
    _validate_descriptor(descriptor)
    base = descriptor.base
    total = ZERO
    for position, behavior in descriptor.digits:
        if isinstance(behavior, ConstantDigit):
            total = add(total, mul(power(base, position), behavior.value))
        else:
            total = add(total, mul(power(base, position), behavior.sup))
            break
    return total


# ---------------------------------------------------------------------------
# Pairing (max-then-lexicographic)
# ---------------------------------------------------------------------------
#
# Pairs (a, b) are ordered by (max(a,b), a, b).  The rank of a pair is the
# order type of the set of smaller pairs; square_type(m) below is the order
# type of all pairs with maximum below m.  For multiplicatively closed alpha
# the rank map is a bijection alpha x alpha -> alpha.


def _square_type_pow(e: Ordinal) -> Ordinal:
    """square_type(w^e) in closed form."""
    if e.is_zero:
        return ONE
    if e.is_finite:
        return omega_pow(from_int(2 * e.to_int() - 1))
    if e.is_successor:
        return omega_pow(add(e, e))
    head = Ordinal._make(e._terms[:-1])
    last_exp, last_coeff = e._terms[-1]
    if head.is_zero:
        sup = omega_pow(last_exp, 2 * last_coeff - 1)
    else:
        sup = add(add(head, head), omega_pow(last_exp, last_coeff))
    return omega_pow(sup)


def _square_type(m: Ordinal) -> Ordinal:
    """Order type of the pairs with maximum below m.

    Satisfies square_type(0) = 0 and square_type(m+1) = square_type(m) +
    m*2 + 1, and is continuous at limits; the closed forms below follow.
    """
    if m.is_zero:
        return ZERO
    if m.is_finite:
        n = m.to_int()
        return from_int(n * n)
    head = Ordinal._make(m._terms[:-1])
    e, c = m._terms[-1]
    if e.is_zero:
        # m = head + c with head infinite: each of the c singleton blocks
        # contributes head*2 + (finite), summing to (head*2)*c + c.
        base = _square_type(head)
        return add(base, add(mul(add(head, head), from_int(c)), from_int(c)))
    if head.is_zero:
        return add(_square_type_pow(e), mul(omega_pow(add(e, e)), from_int(c - 1)))
    step = omega_pow(add(head.leading_exponent, e))
    return add(_square_type(head), mul(step, from_int(c)))


def godel_pair(a: OrdinalLike, b: OrdinalLike, alpha: OrdinalLike) -> Ordinal:
    """The rank of (a, b) in the max-then-lexicographic pair order.

    A bijection alpha x alpha -> alpha for multiplicatively closed alpha.
    """
    a = _coerce(a)
    b = _coerce(b)
    alpha = _coerce(alpha)
    _require_pairing_base(alpha)
    if compare(a, alpha) >= 0 or compare(b, alpha) >= 0:
        raise ArgumentOutOfRangeError(
            f"pair arguments must lie below {alpha}"
        )
    m = a if compare(a, b) >= 0 else b
    rank = _square_type(m)
    if compare(a, m) < 0:
        offset = a
    else:
        offset = add(m, b)
    result = add(rank, offset)
    if compare(result, alpha) >= 0:
        raise ArgumentOutOfRangeError(
            f"pair rank {result} escaped the bound {alpha}"
        )
    return result


def godel_unpair(z: OrdinalLike, alpha: OrdinalLike) -> tuple[Ordinal, Ordinal]:
    """Invert godel_pair: the unique (a, b) whose rank is z."""
    z = _coerce(z)
    alpha = _coerce(alpha)
    _require_pairing_base(alpha)
    if compare(z, alpha) >= 0:
        raise ArgumentOutOfRangeError(f"{z} is not below {alpha}")
    m = _square_floor(z)
    offset = left_sub(z, _square_type(m))
    if compare(offset, m) < 0:
        return offset, m
    b = left_sub(offset, m)
    if compare(b, m) > 0:
        raise OrdinalError(f"pair inversion failed for {z}")
    return m, b


def _require_pairing_base(alpha: Ordinal) -> None:
    if compare(alpha, OMEGA) < 0 or not is_multiplicatively_closed(alpha):
        raise BaseNotClosedError(
            f"pairing needs a multiplicatively closed bound >= w, got {alpha}"
        )


def _square_floor(z: Ordinal) -> Ordinal:
    """The largest m with square_type(m) <= z."""
    if z.is_finite:
        return from_int(_isqrt(z.to_int()))
    # Leading term of m: largest e with square_type(w^e) <= z, i.e. with the
    # closed-form exponent of square_type_pow at most z's leading exponent.
    big = z.leading_exponent
    if big.is_finite:
        e1 = from_int((big.to_int() + 1) // 2)
    else:
        lam = big.limit_part()
        n = big.finite_part()
        lead_exp, lead_coeff = lam._terms[0]
        tail = Ordinal._make(lam._terms[1:])
        if lead_coeff % 2 == 0:
            e1 = add(omega_pow(lead_exp, lead_coeff // 2), add(tail, from_int(n)))
        else:
            e1 = omega_pow(lead_exp, (lead_coeff + 1) // 2)
    m = omega_pow(e1)
    block = omega_pow(add(e1, e1))
    rest = left_sub(z, _square_type_pow(e1))
    extra = _power_quotient(rest, block)
    if extra:
        m = omega_pow(e1, 1 + extra)
    g = _square_type(m)
    # Remaining terms, greedily largest-first.
    while True:
        rem = left_sub(z, g)
        if rem.is_zero:
            return m
        lead = m.leading_exponent
        r = rem.leading_exponent
        if compare(r, lead) < 0:
            return m
        if compare(r, lead) == 0:
            # Finite extension: square_type(m + c) = g + (m*2)*c + c.
            double = add(m, m)
            c = rem._terms[0][1] // (2 * m._terms[0][1])
            while c > 0:
                cand = add(mul(double, from_int(c)), from_int(c))
                if compare(cand, rem) <= 0:
                    break
                c -= 1
            if c == 0:
                return m
            m = add(m, from_int(c))
            g = add(g, add(mul(double, from_int(c)), from_int(c)))
            return m if left_sub(z, g).is_zero else m
        e_next = left_sub(r, lead)
        c_next = rem._terms[0][1]
        m = add(m, omega_pow(e_next, c_next))
        g = add(g, omega_pow(r, c_next))


def _power_quotient(x: Ordinal, p: Ordinal) -> int:
    """The largest k with p * k <= x, for p a single omega-power."""
    if x.is_zero:
        return 0
    pe = p.leading_exponent
    xe = x.leading_exponent
    c = compare(xe, pe)
    if c < 0:
        return 0
    if c > 0:
        raise OrdinalError("unbounded power quotient")
    return x._terms[0][1] // p._terms[0][1]


def _isqrt(n: int) -> int:
    import math

    return math.isqrt(n)


# ---------------------------------------------------------------------------
# Literals
# ---------------------------------------------------------------------------
#
# ordinal  := "0" | term ("+" term)*
# term     := "w" ("^" exponent)? ("*" nat)? | nat
# exponent := nat | "w" | "(" ordinal ")"
#
# Whitespace is insignificant; "w" denotes omega.  Canonical output emits
# terms in strictly decreasing exponent order and omits coefficient 1.


def parse_ordinal(text: str) -> Ordinal:
    parser = _Parser(text)
    value = parser.parse_sum()
    parser.skip_ws()
    if parser.pos != len(parser.text):
        raise OrdinalSyntaxError("trailing input", parser.pos)
    return value


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise OrdinalSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def parse_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise OrdinalSyntaxError("expected a number", start)
        return int(self.text[start : self.pos])

    def parse_sum(self) -> Ordinal:
        total = self.parse_term()
        while self.peek() == "+":
            self.pos += 1
            total = add(total, self.parse_term())
        return total

    def parse_term(self) -> Ordinal:
        ch = self.peek()
        if ch == "w":
            self.pos += 1
            exponent = ONE
            if self.peek() == "^":
                self.pos += 1
                exponent = self.parse_exponent()
            coefficient = 1
            if self.peek() == "*":
                self.pos += 1
                coefficient = self.parse_nat()
            return omega_pow(exponent, coefficient)
        if ch.isdigit():
            return from_int(self.parse_nat())
        raise OrdinalSyntaxError("expected a term", self.pos)

    def parse_exponent(self) -> Ordinal:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.parse_sum()
            self.expect(")")
            return value
        if ch == "w":
            self.pos += 1
            return OMEGA
        if ch.isdigit():
            return from_int(self.parse_nat())
        raise OrdinalSyntaxError("expected an exponent", self.pos)


def format_ordinal(x: OrdinalLike) -> str:
    x = _coerce(x)
    if x.is_zero:
        return "0"
    parts = []
    for e, c in x.terms:
        if e.is_zero:
            parts.append(str(c))
            continue
        if e == ONE:
            body = "w"
        elif e.is_finite:
            body = f"w^{e.to_int()}"
        elif e == OMEGA:
            body = "w^w"
        else:
            body = f"w^({format_ordinal(e)})"
        if c != 1:
            body += f"*{c}"
        parts.append(body)
    return " + ".join(parts)
