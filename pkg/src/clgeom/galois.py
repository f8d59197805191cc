"""GF(q) arithmetic as dense lookup tables, for prime powers q <= 49.

Elements are labelled 0..q-1.  For q = p^e with e > 1 the label encodes a
polynomial over GF(p): label = sum(c_i * p^i) for the element
sum(c_i * t^i) modulo a fixed irreducible polynomial from FIELD_CATALOG.
Label 0 is the additive identity and label 1 the multiplicative identity.
Tables are immutable after construction, so concurrent reads are safe.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedError
from .exactmath import as_prime_power, is_prime

# Irreducible moduli for the extension fields we support, as coefficient
# tuples (c_0, c_1, ..., c_e) of c_0 + c_1*t + ... + c_e*t^e over GF(p).
# These constants are part of the public configuration: coordinates of all
# geometries are reproducible only for this exact catalog.
FIELD_CATALOG: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # t^2 + t + 1          over GF(2)
    8: (1, 1, 0, 1),  # t^3 + t + 1       over GF(2)
    9: (1, 0, 1),  # t^2 + 1              over GF(3)
    16: (1, 1, 0, 0, 1),  # t^4 + t + 1   over GF(2)
    25: (2, 0, 1),  # t^2 + 2             over GF(5)
    27: (1, 2, 0, 1),  # t^3 + 2t + 1     over GF(3)
    32: (1, 0, 1, 0, 0, 1),  # t^5 + t^2 + 1  over GF(2)
    49: (1, 0, 1),  # t^2 + 1             over GF(7)
}

MAX_SUPPORTED_Q = 49


def supported_q_values() -> list[int]:
    """All q this module can build: primes <= 49 plus the extension catalog."""
    qs = [p for p in range(2, MAX_SUPPORTED_Q + 1) if is_prime(p)]
    qs.extend(FIELD_CATALOG)
    return sorted(qs)


def _poly_of_label(label: int, p: int, e: int) -> list[int]:
    coeffs = []
    for _ in range(e):
        coeffs.append(label % p)
        label //= p
    return coeffs


def _label_of_poly(coeffs, p: int) -> int:
    label = 0
    for c in reversed(coeffs):
        label = label * p + (c % p)
    return label


def _poly_mul_mod(a, b, modulus, p):
    """Multiply two coefficient lists over GF(p) and reduce mod `modulus`."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    e = len(modulus) - 1
    # long division by the monic modulus
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c == 0:
            continue
        prod[d] = 0
        for i in range(e):
            prod[d - e + i] = (prod[d - e + i] - c * modulus[i]) % p
    return prod[:e]


class FieldTable:
    """Complete arithmetic tables for GF(q)."""

    def __init__(self, q: int):
        pp = as_prime_power(q)
        self.q = pp.q
        self.p = pp.p
        self.e = pp.e
        if self.e == 1:
            self.modulus = None
        elif self.q in FIELD_CATALOG:
            self.modulus = FIELD_CATALOG[self.q]
        else:
            raise UnsupportedError(
                f"GF({self.q}) is not in the field catalog "
                f"(supported q: {supported_q_values()})"
            )

        q = self.q
        p = self.p
        add = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        if self.e == 1:
            for a in range(q):
                for b in range(q):
                    add[a, b] = (a + b) % p
                    mul[a, b] = (a * b) % p
        else:
            polys = [_poly_of_label(a, p, self.e) for a in range(q)]
            for a in range(q):
                for b in range(a, q):
                    s = _label_of_poly(
                        [(x + y) % p for x, y in zip(polys[a], polys[b])], p
                    )
                    m = _label_of_poly(
                        _poly_mul_mod(polys[a], polys[b], self.modulus, p), p
                    )
                    add[a, b] = add[b, a] = s
                    mul[a, b] = mul[b, a] = m

        neg = np.zeros(q, dtype=np.uint8)
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(q):
            row = add[a]
            neg[a] = int(np.nonzero(row == 0)[0][0])
            if a != 0:
                hits = np.nonzero(mul[a] == 1)[0]
                if hits.size != 1:
                    raise UnsupportedError(
                        f"modulus for GF({q}) is not irreducible: "
                        f"element {a} has {hits.size} inverses"
                    )
                inv[a] = int(hits[0])

        self.add_table = add
        self.mul_table = mul
        self.neg_table = neg
        self.inv_table = inv
        # plain nested lists are noticeably faster for scalar lookups
        self._add = add.tolist()
        self._mul = mul.tolist()
        self._neg = neg.tolist()
        self._inv = inv.tolist()
        self.primitive = self._find_primitive()

    def _find_primitive(self) -> int:
        for a in range(1, self.q):
            x = a
            order = 1
            while x != 1:
                x = self._mul[x][a]
                order += 1
            if order == self.q - 1:
                return a
        raise AssertionError("no primitive element found; tables are broken")

    # scalar operations -------------------------------------------------
    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._inv[a]

    def div(self, a, b):
        return self._mul[a][self.inv(b)]

    def pow(self, a, k):
        out = 1
        for _ in range(k):
            out = self._mul[out][a]
        return out

    def elements(self):
        return range(self.q)

    def modulus_str(self) -> str:
        if self.modulus is None:
            return f"prime field, arithmetic mod {self.p}"
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("t" if c == 1 else f"{c}t")
            else:
                terms.append(f"t^{i}" if c == 1 else f"{c}t^{i}")
        return " + ".join(terms)

    def __repr__(self):
        return f"FieldTable(GF({self.q}))"


@functools.lru_cache(maxsize=None)
def build_field(q: int) -> FieldTable:
    """Build (and cache) the arithmetic tables for GF(q)."""
    return FieldTable(int(q))


@dataclass(frozen=True)
class QuadraticExtension:
    """A GF(q)-linear bijection GF(q^2) <-> GF(q)^2.

    `embed[a]` is the image of the GF(q)-element a inside GF(q^2); `basis_t`
    is the second basis element, so the pair (a, b) corresponds to
    embed[a] + embed[b] * basis_t.  Compatible with addition and with
    GF(q)-scalar multiplication by construction.
    """

    base: FieldTable
    ext: FieldTable
    embed: tuple[int, ...]
    basis_t: int
    ext_to_pair: tuple[tuple[int, int], ...]

    def pair_of(self, z: int) -> tuple[int, int]:
        return self.ext_to_pair[z]

    def ext_of(self, a: int, b: int) -> int:
        f = self.ext
        return f.add(self.embed[a], f.mul(self.embed[b], self.basis_t))


def quadratic_extension_structure(q: int) -> QuadraticExtension:
    """Identify GF(q^2) with GF(q)^2 via a fixed basis {1, t}.

    Requires q^2 to be buildable (prime square in the catalog, or q prime).
    The embedding GF(q) -> GF(q^2) sends the generator of GF(q) to the
    smallest root of GF(q)'s defining polynomial inside GF(q^2); for prime q
    it is the prime subfield.
    """
    base = build_field(q)
    ext = build_field(q * q)

    if base.e == 1:
        # prime subfield: a -> 1 + 1 + ... (a times)
        embed = [0] * q
        for a in range(1, q):
            embed[a] = ext.add(embed[a - 1], 1)
    else:
        # find a root of the base modulus inside the extension field
        coeffs = base.modulus
        root = None
        for z in ext.elements():
            acc = 0
            zp = 1
            for c in coeffs:
                acc = ext.add(acc, ext.mul(c % ext.p, zp))
                zp = ext.mul(zp, z)
            if acc == 0:
                root = z
                break
        if root is None:
            raise AssertionError(f"GF({q}) does not embed in GF({q * q})")
        embed = [0] * q
        for a in range(q):
            coeffs_a = _poly_of_label(a, base.p, base.e)
            acc = 0
            rp = 1
            for c in coeffs_a:
                acc = ext.add(acc, ext.mul(c, rp))
                rp = ext.mul(rp, root)
            embed[a] = acc

    image = set(embed)
    if len(image) != q:
        raise AssertionError("embedding is not injective")
    basis_t = next(z for z in ext.elements() if z not in image)

    ext_to_pair = [None] * (q * q)
    for a in range(q):
        ea = embed[a]
        for b in range(q):
            z = ext.add(ea, ext.mul(embed[b], basis_t))
            if ext_to_pair[z] is not None:
                raise AssertionError("pair map is not a bijection")
            ext_to_pair[z] = (a, b)

    return QuadraticExtension(
        base=base,
        ext=ext,
        embed=tuple(embed),
        basis_t=basis_t,
        ext_to_pair=tuple(ext_to_pair),
    )
