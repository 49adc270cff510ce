"""Finite fields F_q = F_{p^e}, extension levels F_{q^d}, and the tower.

Elements are integer codes. A code over an extension field encodes the
coefficient vector over its subfield in mixed radix (constant digit least
significant), so subfield codes are literally their own embedded codes.
Multiplication uses discrete-log (Zech) tables; all stored levels at desk
scale are small enough for full tables.
"""

from __future__ import annotations

import json

from .errors import IncompatibleLevels, NotPrime, ReducibleModulus


def is_prime_int(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class PrimeField:
    """F_p with codes 0..p-1."""

    def __init__(self, p):
        if not is_prime_int(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.size = p
        self.char = p
        self.degree_over_prime = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, k):
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("inverse of 0")
            return 0
        return pow(a, k % (self.p - 1) if k >= self.p - 1 or k < 0 else k, self.p)

    def int_mul(self, n, a):
        return (n * a) % self.p

    def elements(self):
        return range(self.p)

    def frobenius(self, a):
        return a

    def __repr__(self):
        return f"F_{self.p}"


class ExtField:
    """Extension of ``subfield`` by a monic irreducible ``modulus`` of degree d."""

    def __init__(self, subfield, modulus, _skip_check=False):
        self.subfield = subfield
        self.modulus = tuple(modulus)
        self.d = len(modulus) - 1
        if self.d < 1 or modulus[-1] != 1:
            raise ReducibleModulus("modulus must be monic of degree >= 1")
        self.size = subfield.size ** self.d
        self.char = subfield.char
        self.degree_over_prime = self.d * getattr(subfield, "degree_over_prime", 1)
        if not _skip_check and not self._modulus_irreducible():
            raise ReducibleModulus(
                f"{list(modulus)} is reducible over {subfield!r}")
        self._decode_cache = [self._decode_raw(c) for c in range(self.size)]
        self._build_log_tables()
        self._add_table = None
        if self.size <= 1024:
            add = self.subfield.add
            dec, enc = self._decode_cache, self._encode
            self._add_table = [
                [enc([add(x, y) for x, y in zip(dec[a], dec[b])]) for b in range(self.size)]
                for a in range(self.size)
            ]

    def _modulus_irreducible(self):
        from .aring import APoly

        return APoly(self.subfield, self.modulus).is_irreducible()

    # -- code <-> digit vector over the subfield
    def _decode_raw(self, code):
        s = self.subfield.size
        return [(code // s**i) % s for i in range(self.d)]

    def decode(self, code):
        return list(self._decode_cache[code])

    def _encode(self, digits):
        s = self.subfield.size
        return sum(d * s**i for i, d in enumerate(digits))

    def _polymul_digits(self, u, v):
        sub = self.subfield
        out = [0] * (2 * self.d - 1)
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    if y:
                        out[i + j] = sub.add(out[i + j], sub.mul(x, y))
        # reduce modulo the monic modulus
        for i in range(len(out) - 1, self.d - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(self.d):
                    out[i - self.d + j] = sub.sub(out[i - self.d + j],
                                                  sub.mul(c, self.modulus[j]))
        return out[: self.d]

    def _mul_raw(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._encode(self._polymul_digits(self._decode_raw(a), self._decode_raw(b)))

    def _build_log_tables(self):
        n = self.size - 1
        factors = list(_factorize(n))
        gen = None
        for cand in range(1, self.size):
            if all(self._pow_raw(cand, n // r) != 1 for r in factors) and self._pow_raw(cand, n) == 1:
                gen = cand
                break
        if gen is None:
            raise ReducibleModulus("no multiplicative generator: modulus is reducible")
        exp = [1] * n
        for i in range(1, n):
            exp[i] = self._mul_raw(exp[i - 1], gen)
        log = [0] * self.size
        for i, v in enumerate(exp):
            log[v] = i
        self.generator = gen
        self._exp, self._log = exp, log

    def _pow_raw(self, a, k):
        out, base = 1, a
        while k:
            if k & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            k >>= 1
        return out

    # -- public ring ops
    def add(self, a, b):
        if self._add_table is not None:
            return self._add_table[a][b]
        sub = self.subfield
        return self._encode([sub.add(x, y) for x, y in
                             zip(self._decode_cache[a], self._decode_cache[b])])

    def neg(self, a):
        sub = self.subfield
        return self._encode([sub.neg(x) for x in self._decode_cache[a]])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        n = self.size - 1
        return self._exp[(self._log[a] + self._log[b]) % n]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        n = self.size - 1
        return self._exp[(-self._log[a]) % n]

    def pow(self, a, k):
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("inverse of 0")
            return 0
        n = self.size - 1
        return self._exp[(self._log[a] * k) % n]

    def int_mul(self, n, a):
        n %= self.char
        out = 0
        for _ in range(n):
            out = self.add(out, a)
        return out

    def elements(self):
        return range(self.size)

    def __repr__(self):
        return f"F_{self.size}"


class FFElem:
    """Element of a tower level: (tower, level, code)."""

    __slots__ = ("tower", "level", "code")

    def __init__(self, tower, level, code):
        self.tower = tower
        self.level = level
        self.code = code

    @property
    def field(self):
        return self.tower.field(self.level)

    def _coerced(self, other):
        if isinstance(other, int):
            other = self.tower.scalar(other)
        return self.tower.coerce_pair(self, other)

    def __add__(self, other):
        a, b = self._coerced(other)
        return FFElem(self.tower, a.level, a.field.add(a.code, b.code))

    __radd__ = __add__

    def __neg__(self):
        return FFElem(self.tower, self.level, self.field.neg(self.code))

    def __sub__(self, other):
        a, b = self._coerced(other)
        return FFElem(self.tower, a.level, a.field.sub(a.code, b.code))

    def __mul__(self, other):
        a, b = self._coerced(other)
        return FFElem(self.tower, a.level, a.field.mul(a.code, b.code))

    __rmul__ = __mul__

    def __pow__(self, k):
        return FFElem(self.tower, self.level, self.field.pow(self.code, k))

    def inverse(self):
        return FFElem(self.tower, self.level, self.field.inv(self.code))

    def __truediv__(self, other):
        a, b = self._coerced(other)
        return FFElem(self.tower, a.level, a.field.mul(a.code, a.field.inv(b.code)))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.level >= 1 and self.code == other if other < self.tower.q else NotImplemented
        if not isinstance(other, FFElem):
            return NotImplemented
        a, b = self.tower.coerce_pair(self, other)
        return a.code == b.code

    def __hash__(self):
        return hash((self.level, self.code))

    def is_zero(self):
        return self.code == 0

    def frobenius_q(self):
        return self.tower.frobenius_q(self)

    def conjugates(self):
        return self.tower.conjugate_set(self)

    def minimal_polynomial(self):
        return self.tower.minimal_polynomial(self)

    def in_base(self):
        """True if the element lies in F_q (fixed by Frobenius)."""
        return self.frobenius_q() == self

    def base_code(self):
        """The F_q code of an element that lies in F_q."""
        x = self
        while x.level > 1:
            if x.code >= self.tower.q:
                raise ValueError(f"{self} is not in F_q")
            x = FFElem(self.tower, 1, x.code)
        return x.code

    def __repr__(self):
        return f"FF(level={self.level}, code={self.code})"


class FieldTower:
    """F_q = F_{p^e} with stored extension levels F_{q^d}.

    Immutable after construction; all operations are pure.
    """

    def __init__(self, p, e=1, degrees=(), base_modulus=None, ext_moduli=None):
        if not is_prime_int(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1:
            raise ValueError("e must be >= 1")
        self.p, self.e = p, e
        self.Fp = PrimeField(p)
        if e == 1:
            if base_modulus is not None:
                raise ValueError("base modulus only applies when e > 1")
            self.Fq = self.Fp
            self.base_modulus = None
        else:
            if base_modulus is None:
                base_modulus = self._least_irreducible_codes(self.Fp, e)
            self.Fq = ExtField(self.Fp, base_modulus)
            self.base_modulus = tuple(base_modulus)
        self.q = self.Fq.size
        self.levels = {1: self.Fq}
        self.ext_moduli = {}
        ext_moduli = dict(ext_moduli or {})
        for d in sorted(set(degrees)):
            if d <= 1:
                continue
            mod = ext_moduli.get(d) or self._least_irreducible_codes(self.Fq, d)
            self.levels[d] = ExtField(self.Fq, mod)
            self.ext_moduli[d] = tuple(mod)
        self._embeds = {}

    @staticmethod
    def _least_irreducible_codes(F, d):
        from .aring import least_irreducible

        return list(least_irreducible(F, d).c)

    # -- levels and elements
    def field(self, level):
        try:
            return self.levels[level]
        except KeyError:
            raise IncompatibleLevels(f"level {level} not stored") from None

    def element(self, level, code):
        F = self.field(level)
        if not 0 <= code < F.size:
            raise ValueError("code out of range")
        return FFElem(self, level, code)

    def scalar(self, n):
        """Image of the integer n in F_q."""
        return FFElem(self, 1, n % self.p)

    def zero(self, level=1):
        return FFElem(self, level, 0)

    def one(self, level=1):
        return FFElem(self, level, 1)

    def elements(self, level=1):
        return (FFElem(self, level, c) for c in range(self.field(level).size))

    # -- embeddings
    def embed_map(self, da, db):
        """Code map for the deterministic embedding F_{q^da} -> F_{q^db}."""
        if da == db:
            return None
        if db % da != 0:
            raise IncompatibleLevels(f"no embedding of level {da} into level {db}")
        key = (da, db)
        cached = self._embeds.get(key)
        if cached is not None:
            return cached
        Fa, Fb = self.field(da), self.field(db)
        if da == 1:
            table = list(range(self.q))
        else:
            # image of the level-da generator: least root of its modulus in Fb
            from .aring import APoly

            mod = APoly(self.Fq, Fa.modulus)
            root = None
            for cand in range(Fb.size):
                if mod.eval_code(cand, Fb) == 0:
                    root = cand
                    break
            if root is None:
                raise IncompatibleLevels("modulus has no root at the target level")
            table = []
            for code in range(Fa.size):
                digits = Fa.decode(code)
                acc = 0
                for dcode in reversed(digits):
                    acc = Fb.add(Fb.mul(acc, root), dcode)
                table.append(acc)
        self._embeds[key] = table
        return table

    def embed(self, x, level):
        if x.level == level:
            return x
        table = self.embed_map(x.level, level)
        return FFElem(self, level, table[x.code])

    def coerce_pair(self, x, y):
        if x.level == y.level:
            return x, y
        la, lb = x.level, y.level
        if lb % la == 0:
            return self.embed(x, lb), y
        if la % lb == 0:
            return x, self.embed(y, la)
        lcm = la * lb // _gcd(la, lb)
        if lcm in self.levels:
            return self.embed(x, lcm), self.embed(y, lcm)
        raise IncompatibleLevels(f"no stored compositum of levels {la} and {lb}")

    # -- Frobenius and friends
    def frobenius_q(self, x):
        return FFElem(self, x.level, self.field(x.level).pow(x.code, self.q))

    def conjugate_set(self, x):
        out = [x]
        cur = self.frobenius_q(x)
        while cur.code != x.code:
            out.append(cur)
            cur = self.frobenius_q(cur)
        return out

    def minimal_polynomial(self, x):
        """Monic irreducible APoly over F_q vanishing at x."""
        from .aring import APoly

        F = self.field(x.level)
        orbit = self.conjugate_set(x)
        coeffs = [1]  # building prod (theta - zeta^{q^k}) over the level field
        poly = [1]
        for z in orbit:
            # multiply poly (over level field) by (theta - z)
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] = F.add(nxt[i + 1], c)
                nxt[i] = F.add(nxt[i], F.mul(F.neg(z.code), c))
            poly = nxt
        del coeffs
        base = []
        for c in poly:
            if c >= self.q:
                raise ValueError("minimal polynomial does not descend to F_q")
            base.append(c)
        return APoly(self.Fq, base)

    def eval_chi(self, a, zeta):
        """chi_zeta(a) = a(zeta): Horner evaluation of a in A at a tower element."""
        F = self.field(zeta.level)
        return FFElem(self, zeta.level, a.eval_code(zeta.code, F))

    def roots_in_level(self, a, level):
        """All roots of the APoly a at the given level, ascending code order."""
        F = self.field(level)
        return [FFElem(self, level, c) for c in range(F.size)
                if a.eval_code(c, F) == 0]

    # -- serialization
    def to_json(self):
        return {
            "p": self.p,
            "e": self.e,
            "base_modulus": list(self.base_modulus) if self.base_modulus else
            [0, 1][:0] or ([] if self.e == 1 else list(self.base_modulus)),
            "ext_moduli": {str(d): list(m) for d, m in sorted(self.ext_moduli.items())},
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    def __repr__(self):
        return f"FieldTower(q={self.q}, levels={sorted(self.levels)})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def build_tower(p, e=1, degrees=(), base_modulus=None, ext_moduli=None):
    """Deterministic tower; omitted moduli default to the lexicographically
    least irreducible monic at each level."""
    return FieldTower(p, e=e, degrees=degrees, base_modulus=base_modulus,
                      ext_moduli=ext_moduli)
