"""The ring A = F_q[theta] and its fraction field K.

Polynomials are dense coefficient tuples over a finite field object
(anything exposing ``size``, ``add``, ``sub``, ``neg``, ``mul``, ``inv``,
``pow``); coefficients are the field's integer codes, constant term first.
Also houses the sequences d_n, l_n, the Carlitz factorial, base-q digit
statistics and the auxiliary polynomials G_d and H_N.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ConstantInput, NotPrime


def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


class APoly:
    """Dense polynomial over a finite field, lowest degree first."""

    __slots__ = ("F", "c")

    def __init__(self, F, coeffs=()):
        self.F = F
        self.c = _trim(tuple(coeffs))

    @classmethod
    def zero(cls, F):
        return cls(F, ())

    @classmethod
    def one(cls, F):
        return cls(F, (1,))

    @classmethod
    def constant(cls, F, code):
        return cls(F, (code,))

    @classmethod
    def theta(cls, F):
        return cls(F, (0, 1))

    @classmethod
    def from_int(cls, F, n):
        """Constant polynomial with value n mod char (image of the prime field)."""
        return cls(F, (n % F.char,))

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def is_constant(self):
        return len(self.c) <= 1

    def lead(self):
        return self.c[-1] if self.c else 0

    def is_monic(self):
        return bool(self.c) and self.c[-1] == 1

    def __hash__(self):
        return hash((id(self.F), self.c))

    def __eq__(self, other):
        if not isinstance(other, APoly):
            return NotImplemented
        return self.F is other.F and self.c == other.c

    def __add__(self, other):
        F = self.F
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = F.add(out[i], x)
        return APoly(F, out)

    def __neg__(self):
        F = self.F
        return APoly(F, [F.neg(x) for x in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.F
        a, b = self.c, other.c
        if not a or not b:
            return APoly(F, ())
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return APoly(F, out)

    def scale(self, code):
        F = self.F
        return APoly(F, [F.mul(code, x) for x in self.c])

    def shift(self, k):
        """Multiply by theta^k."""
        if not self.c:
            return self
        return APoly(self.F, (0,) * k + self.c)

    def __pow__(self, n):
        out = APoly.one(self.F)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other):
        F = self.F
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        d = other.degree
        inv_lead = F.inv(other.c[-1])
        q = [0] * max(0, len(r) - d)
        for i in range(len(r) - 1, d - 1, -1):
            if r[i]:
                f = F.mul(r[i], inv_lead)
                q[i - d] = f
                for j, y in enumerate(other.c):
                    r[i - d + j] = F.sub(r[i - d + j], F.mul(f, y))
        return APoly(F, q), APoly(F, r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(self.F.inv(self.c[-1]))

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        """Return (g, u, v) with u*self + v*other = g, g monic."""
        F = self.F
        r0, r1 = self, other
        s0, s1 = APoly.one(F), APoly.zero(F)
        t0, t1 = APoly.zero(F), APoly.one(F)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        lc = r0.c[-1]
        if lc != 1:
            u = F.inv(lc)
            r0, s0, t0 = r0.scale(u), s0.scale(u), t0.scale(u)
        return r0, s0, t0

    def inverse_mod(self, modulus):
        g, u, _ = self.xgcd(modulus)
        if g.degree != 0:
            return None
        return (u.scale(self.F.inv(g.c[0]))) % modulus

    def pow_mod(self, n, modulus):
        out = APoly.one(self.F) % modulus
        base = self % modulus
        while n:
            if n & 1:
                out = (out * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return out

    def derivative(self):
        F = self.F
        return APoly(F, [F.int_mul(i, x) for i, x in enumerate(self.c)][1:])

    def hyperderivative(self, n):
        """n-th divided derivative: theta^k -> C(k,n) theta^(k-n)."""
        F = self.F
        p = F.char
        out = []
        for k in range(n, len(self.c)):
            b = _lucas_binom(k, n, p)
            out.append(F.int_mul(b, self.c[k]))
        return APoly(F, out)

    def stretch(self, m):
        """Substitute theta -> theta^m."""
        if m == 1 or not self.c:
            return self
        out = [0] * (self.degree * m + 1)
        for i, x in enumerate(self.c):
            out[i * m] = x
        return APoly(self.F, out)

    def frobq(self, q):
        """The q-power Frobenius image: coefficients^q, exponents*q."""
        F = self.F
        out = [0] * (self.degree * q + 1) if self.c else []
        for i, x in enumerate(self.c):
            out[i * q] = F.pow(x, q)
        return APoly(self.F, out)

    def eval_code(self, code, field):
        """Horner evaluation at an element code of ``field`` (coefficients embed)."""
        acc = 0
        for x in reversed(self.c):
            acc = field.add(field.mul(acc, code), x)
        return acc

    def substitute(self, other):
        """Compose: self(other) for other an APoly over the same field."""
        acc = APoly.zero(self.F)
        for x in reversed(self.c):
            acc = acc * other + APoly.constant(self.F, x)
        return acc

    def is_irreducible(self):
        """Rabin irreducibility test over the coefficient field."""
        if self.degree < 1:
            raise ConstantInput("irreducibility is only defined for degree >= 1")
        F = self.F
        q = F.size
        n = self.degree
        a = self.monic()
        x = APoly.theta(F)
        xq = x.pow_mod(q, a)
        pows = {1: xq}
        cur = xq
        for k in range(2, n + 1):
            cur = cur.pow_mod(q, a)
            pows[k] = cur
        if (pows[n] - x) % a != APoly.zero(F):
            return False
        for r in _prime_factors(n):
            g = (pows[n // r] - x).gcd(a)
            if g.degree != 0:
                return False
        return True

    def to_json(self):
        return list(self.c)

    def __str__(self):
        return poly_str(self.c, "θ")

    __repr__ = __str__


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _lucas_binom(m, n, p):
    """C(m, n) mod p by Lucas' theorem."""
    r = 1
    while n:
        mi, ni = m % p, n % p
        if ni > mi:
            return 0
        num = den = 1
        for i in range(ni):
            num = num * (mi - i) % p
            den = den * (i + 1) % p
        r = r * num * pow(den, p - 2, p) % p
        m //= p
        n //= p
    return r


def lucas_binom(m, n, p):
    return _lucas_binom(m, n, p)


def poly_str(coeffs, var):
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# enumeration and primes

def monic_of_degree(F, d):
    """Yield the q^d monic polynomials of degree d, lexicographic on
    (c_0, c_1, ..., c_{d-1}) with the constant term compared first."""
    for lower in product(range(F.size), repeat=d):
        yield APoly(F, tuple(lower) + (1,))


def least_irreducible(F, d):
    for a in monic_of_degree(F, d):
        if d == 0:
            break
        if a.is_irreducible():
            return a
    raise NotPrime(f"no irreducible monic of degree {d}")


def primes_of_degree(F, d):
    return [a for a in monic_of_degree(F, d) if a.is_irreducible()]


# ---------------------------------------------------------------------------
# rational functions

class RatFunc:
    """num/den over F_q[theta], normalized: gcd 1, den monic, den != 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = APoly.one(num.F)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            if num.is_zero():
                den = APoly.one(num.F)
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num, den = num // g, den // g
                if den.c[-1] != 1:
                    u = num.F.inv(den.c[-1])
                    num, den = num.scale(u), den.scale(u)
        self.num = num
        self.den = den

    @classmethod
    def of(cls, num, den=None):
        return cls(num, den)

    @classmethod
    def zero(cls, F):
        return cls(APoly.zero(F), APoly.one(F), _normalized=True)

    @classmethod
    def one(cls, F):
        return cls(APoly.one(F), APoly.one(F), _normalized=True)

    @property
    def F(self):
        return self.num.F

    def is_zero(self):
        return self.num.is_zero()

    def is_integral(self):
        return self.den.degree == 0

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if self.den.c == other.den.c:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_integral() and other.is_integral():
            return RatFunc(self.num * other.num, APoly.one(self.F), _normalized=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def scale(self, code):
        return RatFunc(self.num.scale(code), self.den, _normalized=True) if code else RatFunc.zero(self.F)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc.one(self.F)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mod_prime(self, prime):
        """Residue in A/(prime); raises if the denominator is not invertible."""
        from .errors import NonInvertibleDenominator

        inv = self.den.inverse_mod(prime)
        if inv is None:
            raise NonInvertibleDenominator(f"denominator {self.den} not invertible mod {prime}")
        return (self.num * inv) % prime

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __str__(self):
        if self.is_integral():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# digit statistics and the classical sequences

def digits_base(n, q):
    if n == 0:
        return []
    out = []
    while n:
        out.append(n % q)
        n //= q
    return out


@dataclass(frozen=True)
class DigitStats:
    """Base-q digit statistics of n."""

    n: int
    q: int
    digits: tuple
    ell: int       # sum of digits
    ellp: int      # sum of i * digit_i
    mu: int        # sum of digit_i * i * q^i
    mustar: int    # (n - ell) / (q - 1)


def digit_stats(n, q):
    if n < 0:
        raise ValueError("n must be >= 0")
    ds = digits_base(n, q)
    ell = sum(ds)
    ellp = sum(i * d for i, d in enumerate(ds))
    mu = sum(d * i * q**i for i, d in enumerate(ds))
    mustar = (n - ell) // (q - 1) if q > 1 else 0
    return DigitStats(n, q, tuple(ds), ell, ellp, mu, mustar)


def ell_q(n, q):
    return sum(digits_base(n, q))


def dn(F, n):
    """d_n = (theta^{q^n}-theta)(theta^{q^n}-theta^q)...(theta^{q^n}-theta^{q^{n-1}})."""
    q = F.size
    out = APoly.one(F)
    for i in range(n):
        out = out * (_theta_pow(F, q**n) - _theta_pow(F, q**i))
    return out


def ln(F, n):
    """l_n = (-1)^n * prod_{i=1..n} (theta^{q^i} - theta)."""
    q = F.size
    out = APoly.one(F)
    for i in range(1, n + 1):
        out = out * (-(_theta_pow(F, q**i) - _theta_pow(F, 1)))
    return out


def _theta_pow(F, k):
    return APoly(F, (0,) * k + (1,))


def carlitz_factorial(F, n):
    """Pi(n) = prod d_i^{n_i} over the base-q digits of n."""
    q = F.size
    out = APoly.one(F)
    for i, digit in enumerate(digits_base(n, q)):
        if digit:
            out = out * dn(F, i) ** digit
    return out


# ---------------------------------------------------------------------------
# the auxiliary polynomials G_d(X, Y) and H_N(t)

def G_poly(F, d):
    """G_d(X,Y) = prod_{i=0}^{d-1} (X - Y^{q^i}) as {(i, j): code} over F_q."""
    q = F.size
    out = {(0, 0): 1}
    for i in range(d):
        nxt = {}
        for (a, b), c in out.items():
            # * X
            key = (a + 1, b)
            nxt[key] = F.add(nxt.get(key, 0), c)
            # * (-Y^{q^i})
            key = (a, b + q**i)
            nxt[key] = F.add(nxt.get(key, 0), F.neg(c))
        out = {k: v for k, v in nxt.items() if v}
    return out


def G_eval_poly(F, d, x, y):
    """Evaluate G_d at APoly arguments x, y (same field)."""
    q = F.size
    out = APoly.one(F)
    for i in range(d):
        out = out * (x - y ** (q**i))
    return out


class TPolyA:
    """Polynomial in t with APoly coefficients (elements of F[theta][t])."""

    __slots__ = ("F", "c")

    def __init__(self, F, coeffs=()):
        self.F = F
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.c = tuple(cs)

    @classmethod
    def zero(cls, F):
        return cls(F, ())

    @classmethod
    def one(cls, F):
        return cls(F, (APoly.one(F),))

    @classmethod
    def from_apoly(cls, a):
        return cls(a.F, (a,))

    @classmethod
    def t_minus(cls, a):
        """t^k*c ... helper: return t - a for APoly a."""
        return cls(a.F, (-a, APoly.one(a.F)))

    @property
    def deg_t(self):
        return len(self.c) - 1

    def deg_theta(self):
        return max((x.degree for x in self.c if not x.is_zero()), default=-1)

    def coeff(self, k):
        return self.c[k] if k < len(self.c) else APoly.zero(self.F)

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        return isinstance(other, TPolyA) and self.c == other.c

    def __add__(self, other):
        n = max(len(self.c), len(other.c))
        return TPolyA(self.F, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self):
        return TPolyA(self.F, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.c or not other.c:
            return TPolyA.zero(self.F)
        out = [APoly.zero(self.F) for _ in range(len(self.c) + len(other.c) - 1)]
        for i, x in enumerate(self.c):
            if x.is_zero():
                continue
            for j, y in enumerate(other.c):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return TPolyA(self.F, out)

    def __pow__(self, n):
        out = TPolyA.one(self.F)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, a):
        return TPolyA(self.F, [x * a for x in self.c])

    def eval_t_apoly(self, a):
        """Substitute t := a (an APoly)."""
        acc = APoly.zero(self.F)
        for x in reversed(self.c):
            acc = acc * a + x
        return acc

    def eval_t_code(self, code, field):
        """Substitute t := field element; returns APoly over ``field``."""
        acc = APoly.zero(field)
        for x in reversed(self.c):
            lifted = APoly(field, x.c)
            acc = acc.scale(code) + lifted
        return acc

    def map_theta(self, fn):
        """Apply fn to every theta-coefficient."""
        return TPolyA(self.F, [fn(x) for x in self.c])

    def to_json(self):
        return [x.to_json() for x in self.c]

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            x = self.c[i]
            if x.is_zero():
                continue
            tpart = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            parts.append(f"({x}){tpart}" if i else f"({x})")
        return " + ".join(parts)

    __repr__ = __str__


def H_poly(F, N):
    """H_N(t) = prod_i G_i(t^{q^i}, theta)^{N_i} in F_q[theta][t]."""
    q = F.size
    out = TPolyA.one(F)
    for i, digit in enumerate(digits_base(N, q)):
        if not digit:
            continue
        # G_i(t^{q^i}, theta) = prod_{j<i} (t^{q^i} - theta^{q^j})
        for j in range(i):
            factor_c = [APoly.zero(F)] * (q**i + 1)
            factor_c[0] = -_theta_pow(F, q**j)
            factor_c[q**i] = APoly.one(F)
            factor = TPolyA(F, factor_c)
            out = out * factor**digit
    return out
