"""Chain algebras and coalgebras presented by exhaustive structure-constant
tables, plus module/comodule structures over them.

Conventions enforced throughout: algebras are connected (degree 0 spanned by
the unit), coalgebras are 1-connected (degree 0 spanned by the coaugmentation,
degree 1 empty).  Products landing above the truncation are silently dropped;
all axiom checks quantify only over basis tuples whose total degree stays
within the truncation, which keeps them exact rather than approximate.
"""

from __future__ import annotations

from .complexes import ChainComplex, ChainMap, RingMismatch, tensor_complex, tensor_name


class NotConnected(Exception):
    pass


class NotOneConnected(Exception):
    pass


Key = tuple[int, str]  # (degree, basis name)


def _sign(ring, k: int):
    return ring.of(-1) if k % 2 else ring.one


class ChainAlgebra:
    """Connected augmented chain algebra with a basis-indexed product table."""

    def __init__(self, complex: ChainComplex, unit: str, mult=None, name: str = "",
                 product_fn=None):
        self.complex = complex
        self.unit = unit
        self.name = name
        # ((da, a), (db, b)) -> {result name in degree da+db: coeff}
        self.mult: dict[tuple[Key, Key], dict[str, object]] = dict(mult or {})
        # optional computed product (da, a, db, b) -> combo, consulted after
        # the table; lets free constructions avoid exhaustive tables
        self.product_fn = product_fn

    @property
    def ring(self):
        return self.complex.ring

    @property
    def truncation(self):
        return self.complex.truncation

    def basis(self, n: int):
        return self.complex.basis.names(n)

    def set_product(self, da: int, a: str, db: int, b: str, result: dict[str, object]):
        clean = {k: self.ring.of(v) for k, v in result.items() if not self.ring.is_zero(self.ring.of(v))}
        self.mult[((da, a), (db, b))] = clean

    def product(self, da: int, a: str, db: int, b: str) -> dict[str, object]:
        """Product of two basis elements; unit acts strictly."""
        n = da + db
        if n > self.truncation:
            return {}
        if da == 0:
            return {b: self.ring.one} if a == self.unit else {}
        if db == 0:
            return {a: self.ring.one} if b == self.unit else {}
        key = ((da, a), (db, b))
        if key in self.mult:
            return self.mult[key]
        if self.product_fn is not None:
            return self.product_fn(da, a, db, b)
        return {}

    def mul_combo(self, da: int, ca: dict, db: int, cb: dict) -> dict[str, object]:
        R = self.ring
        out: dict[str, object] = {}
        for a, va in ca.items():
            for b, vb in cb.items():
                for r, vr in self.product(da, a, db, b).items():
                    out[r] = R.add(out.get(r, R.zero), R.mul(R.mul(va, vb), vr))
        return {k: v for k, v in out.items() if not R.is_zero(v)}

    def aug(self, n: int, name: str):
        """Augmentation functional: 1 on the unit, 0 elsewhere."""
        return self.ring.one if (n == 0 and name == self.unit) else self.ring.zero

    def is_connected(self) -> bool:
        return self.basis(0) == [self.unit]


class ChainCoalgebra:
    """1-connected coaugmented chain coalgebra with a coproduct table."""

    def __init__(self, complex: ChainComplex, coaug: str, comult=None, name: str = ""):
        self.complex = complex
        self.coaug = coaug
        self.name = name
        # (dc, c) -> list of ((d1, n1), (d2, n2), coeff): the FULL coproduct
        self.comult: dict[Key, list[tuple[Key, Key, object]]] = dict(comult or {})

    @property
    def ring(self):
        return self.complex.ring

    @property
    def truncation(self):
        return self.complex.truncation

    def basis(self, n: int):
        return self.complex.basis.names(n)

    def set_coproduct_reduced(self, dc: int, c: str, terms):
        """Store Δc = c⊗1 + 1⊗c + (reduced terms), c in positive degree."""
        R = self.ring
        full = [((dc, c), (0, self.coaug), R.one), ((0, self.coaug), (dc, c), R.one)]
        for (d1, n1), (d2, n2), coeff in terms:
            v = R.of(coeff)
            if not R.is_zero(v):
                full.append(((d1, n1), (d2, n2), v))
        self.comult[(dc, c)] = full

    def coproduct(self, dc: int, c: str):
        if dc == 0:
            return [((0, self.coaug), (0, self.coaug), self.ring.one)] if c == self.coaug else []
        return self.comult.get((dc, c), [
            ((dc, c), (0, self.coaug), self.ring.one),
            ((0, self.coaug), (dc, c), self.ring.one),
        ])

    def reduced_coproduct(self, dc: int, c: str):
        return [t for t in self.coproduct(dc, c) if t[0][0] > 0 and t[1][0] > 0]

    def counit(self, n: int, name: str):
        return self.ring.one if (n == 0 and name == self.coaug) else self.ring.zero

    def is_one_connected(self) -> bool:
        return self.basis(0) == [self.coaug] and not self.basis(1)


class ModuleStructure:
    """Action of a ChainAlgebra on a carrier complex (side: left or right)."""

    def __init__(self, algebra: ChainAlgebra, carrier: ChainComplex, side: str, action=None,
                 act_fn=None):
        assert side in ("left", "right")
        self.algebra = algebra
        self.carrier = carrier
        self.side = side
        # right: ((dm, m), (da, a)) -> {result: coeff}; left: ((da, a), (dm, m)) -> ...
        self.action: dict[tuple[Key, Key], dict[str, object]] = dict(action or {})
        self.act_fn = act_fn  # optional computed action (dm, m, da, a) -> combo

    @property
    def ring(self):
        return self.carrier.ring

    def act(self, dm: int, m: str, da: int, a: str) -> dict[str, object]:
        """m·a (right) or a·m (left, arguments still (m, a))."""
        if dm + da > self.carrier.truncation:
            return {}
        if da == 0:
            return {m: self.ring.one} if a == self.algebra.unit else {}
        key = ((dm, m), (da, a)) if self.side == "right" else ((da, a), (dm, m))
        if key in self.action:
            return self.action[key]
        if self.act_fn is not None:
            return self.act_fn(dm, m, da, a)
        return {}

    def set_action(self, dm: int, m: str, da: int, a: str, result: dict[str, object]):
        R = self.ring
        key = ((dm, m), (da, a)) if self.side == "right" else ((da, a), (dm, m))
        self.action[key] = {k: R.of(v) for k, v in result.items() if not R.is_zero(R.of(v))}

    def act_combo(self, dm: int, cm: dict, da: int, ca: dict) -> dict[str, object]:
        R = self.ring
        out: dict[str, object] = {}
        for m, vm in cm.items():
            for a, va in ca.items():
                for r, vr in self.act(dm, m, da, a).items():
                    out[r] = R.add(out.get(r, R.zero), R.mul(R.mul(vm, va), vr))
        return {k: v for k, v in out.items() if not R.is_zero(v)}


class ComoduleStructure:
    """Coaction of a ChainCoalgebra on a carrier complex.

    side "left": λ: M -> C⊗M, stored as m -> [((dc, c), (dm2, m2), coeff)].
    side "right": ρ: M -> M⊗C, stored as m -> [((dm2, m2), (dc, c), coeff)].
    """

    def __init__(self, coalgebra: ChainCoalgebra, carrier: ChainComplex, side: str, coaction=None,
                 coact_fn=None):
        assert side in ("left", "right")
        self.coalgebra = coalgebra
        self.carrier = carrier
        self.side = side
        self.coaction: dict[Key, list[tuple[Key, Key, object]]] = dict(coaction or {})
        self.coact_fn = coact_fn  # optional computed coaction (dm, m) -> terms

    @property
    def ring(self):
        return self.carrier.ring

    def coact(self, dm: int, m: str):
        default_c = (0, self.coalgebra.coaug)
        if (dm, m) in self.coaction:
            return self.coaction[(dm, m)]
        if self.coact_fn is not None:
            return self.coact_fn(dm, m)
        if self.side == "left":
            return [(default_c, (dm, m), self.ring.one)]
        return [((dm, m), default_c, self.ring.one)]

    def set_coaction(self, dm: int, m: str, terms):
        R = self.ring
        self.coaction[(dm, m)] = [
            (k1, k2, R.of(c)) for (k1, k2, c) in terms if not R.is_zero(R.of(c))
        ]


# ---------------------------------------------------------------------
# Axiom verification.
# ---------------------------------------------------------------------

def verify_algebra(A: ChainAlgebra):
    """Exhaustive associativity/unit/Leibniz/connectivity/augmentation check.

    Returns (ok, witnesses); each witness names the violated axiom and the
    basis tuple realizing the violation.
    """
    R = A.ring
    X = A.complex
    N = A.truncation
    witnesses = []

    if not A.is_connected():
        witnesses.append({"axiom": "connected", "degree0": X.basis.names(0), "unit": A.unit})

    def combos_equal(u, v):
        keys = set(u) | set(v)
        return all(R.is_zero(R.sub(u.get(k, R.zero), v.get(k, R.zero))) for k in keys)

    # unit acts as identity (strict by construction, but the table may override)
    for n in range(N + 1):
        for a in X.basis.names(n):
            if not combos_equal(A.product(0, A.unit, n, a), {a: R.one}):
                witnesses.append({"axiom": "left-unit", "element": (n, a)})
            if not combos_equal(A.product(n, a, 0, A.unit), {a: R.one}):
                witnesses.append({"axiom": "right-unit", "element": (n, a)})

    # associativity on basis triples with total degree within truncation
    for p in range(1, N + 1):
        for q in range(1, N + 1 - p):
            for r in range(1, N + 1 - p - q):
                for a in X.basis.names(p):
                    for b in X.basis.names(q):
                        for c in X.basis.names(r):
                            left = A.mul_combo(p + q, A.product(p, a, q, b), r, {c: R.one})
                            right = A.mul_combo(p, {a: R.one}, q + r, A.product(q, b, r, c))
                            if not combos_equal(left, right):
                                witnesses.append({"axiom": "associativity", "triple": (a, b, c)})

    # Leibniz: d(ab) = da·b + (-1)^|a| a·db
    for p in range(N + 1):
        for q in range(N + 1 - p):
            if p + q == 0:
                continue
            for a in X.basis.names(p):
                for b in X.basis.names(q):
                    dab = {}
                    ab = A.product(p, a, q, b)
                    for r_name, v in ab.items():
                        for r2, c in X.d_of(p + q, r_name).items():
                            dab[r2] = R.add(dab.get(r2, R.zero), R.mul(v, c))
                    lhs = {k: v for k, v in dab.items() if not R.is_zero(v)}
                    rhs = {}
                    da = X.d_of(p, a)
                    for r_name, v in A.mul_combo(p - 1, da, q, {b: R.one}).items():
                        rhs[r_name] = R.add(rhs.get(r_name, R.zero), v)
                    db = X.d_of(q, b)
                    sgn = _sign(R, p)
                    for r_name, v in A.mul_combo(p, {a: R.one}, q - 1, db).items():
                        rhs[r_name] = R.add(rhs.get(r_name, R.zero), R.mul(sgn, v))
                    rhs = {k: v for k, v in rhs.items() if not R.is_zero(v)}
                    if not combos_equal(lhs, rhs):
                        witnesses.append({"axiom": "Leibniz", "pair": ((p, a), (q, b))})

    # augmentation is a chain algebra map: aug(d x) = 0 for |x| = 1
    for a in X.basis.names(1):
        val = R.zero
        for r_name, c in X.d_of(1, a).items():
            val = R.add(val, R.mul(c, A.aug(0, r_name)))
        if not R.is_zero(val):
            witnesses.append({"axiom": "augmentation-chain", "element": a})

    return (not witnesses), witnesses


def verify_coalgebra(C: ChainCoalgebra):
    """Dual check: coassociativity, counit, coderivation, 1-connectivity."""
    R = C.ring
    X = C.complex
    N = C.truncation
    witnesses = []

    if not C.is_one_connected():
        witnesses.append({
            "axiom": "1-connected",
            "degree0": X.basis.names(0),
            "degree1": X.basis.names(1),
        })

    def norm3(terms):
        out = {}
        for k1, k2, k3, v in terms:
            key = (k1, k2, k3)
            out[key] = R.add(out.get(key, R.zero), v)
        return {k: v for k, v in out.items() if not R.is_zero(v)}

    for n in range(N + 1):
        for c in X.basis.names(n):
            cop = C.coproduct(n, c)
            # counit on both sides
            left = {}
            right = {}
            for (d1, n1), (d2, n2), v in cop:
                if d1 == 0:
                    left[(d2, n2)] = R.add(left.get((d2, n2), R.zero), R.mul(C.counit(d1, n1), v))
                if d2 == 0:
                    right[(d1, n1)] = R.add(right.get((d1, n1), R.zero), R.mul(C.counit(d2, n2), v))
            for side_name, got in (("left-counit", left), ("right-counit", right)):
                want = {(n, c): R.one}
                keys = set(got) | set(want)
                if any(not R.is_zero(R.sub(got.get(k, R.zero), want.get(k, R.zero))) for k in keys):
                    witnesses.append({"axiom": side_name, "element": (n, c)})

            # coassociativity: (Δ⊗1)Δ = (1⊗Δ)Δ, no signs (degree-0 maps)
            lhs = []
            rhs = []
            for (d1, n1), (d2, n2), v in cop:
                for (e1, m1), (e2, m2), w in C.coproduct(d1, n1):
                    lhs.append(((e1, m1), (e2, m2), (d2, n2), R.mul(v, w)))
                for (e1, m1), (e2, m2), w in C.coproduct(d2, n2):
                    rhs.append(((d1, n1), (e1, m1), (e2, m2), R.mul(v, w)))
            if norm3(lhs) != norm3(rhs):
                witnesses.append({"axiom": "coassociativity", "element": (n, c)})

            # coderivation: Δ(dc) = (d⊗1 + 1⊗d) Δc, Koszul sign on 1⊗d
            if n >= 1:
                lhs2 = {}
                for c2, v in X.d_of(n, c).items():
                    for (d1, n1), (d2, n2), w in C.coproduct(n - 1, c2):
                        key = ((d1, n1), (d2, n2))
                        lhs2[key] = R.add(lhs2.get(key, R.zero), R.mul(v, w))
                rhs2 = {}
                for (d1, n1), (d2, n2), v in cop:
                    for m1, cc in X.d_of(d1, n1).items():
                        key = ((d1 - 1, m1), (d2, n2))
                        rhs2[key] = R.add(rhs2.get(key, R.zero), R.mul(v, cc))
                    sgn = _sign(R, d1)
                    for m2, cc in X.d_of(d2, n2).items():
                        key = ((d1, n1), (d2 - 1, m2))
                        rhs2[key] = R.add(rhs2.get(key, R.zero), R.mul(R.mul(sgn, v), cc))
                keys = set(lhs2) | set(rhs2)
                if any(not R.is_zero(R.sub(lhs2.get(k, R.zero), rhs2.get(k, R.zero))) for k in keys):
                    witnesses.append({"axiom": "coderivation", "element": (n, c)})

    return (not witnesses), witnesses


def verify_module(M: ModuleStructure):
    """Unital + associative + chain-map check for an action table."""
    R = M.ring
    A = M.algebra
    X = M.carrier
    N = X.truncation
    witnesses = []

    def eq(u, v):
        keys = set(u) | set(v)
        return all(R.is_zero(R.sub(u.get(k, R.zero), v.get(k, R.zero))) for k in keys)

    for dm in range(N + 1):
        for m in X.basis.names(dm):
            if not eq(M.act(dm, m, 0, A.unit), {m: R.one}):
                witnesses.append({"axiom": "unital", "element": (dm, m)})

    for dm in range(N + 1):
        for da in range(1, N + 1 - dm):
            for db in range(1, N + 1 - dm - da):
                for m in X.basis.names(dm):
                    for a in A.basis(da):
                        for b in A.basis(db):
                            if M.side == "right":
                                one = M.act_combo(dm + da, M.act(dm, m, da, a), db, {b: R.one})
                                two = M.act_combo(dm, {m: R.one}, da + db, A.product(da, a, db, b))
                            else:
                                # a·(b·m) = (ab)·m
                                one = M.act_combo(dm + db, M.act(dm, m, db, b), da, {a: R.one})
                                two = M.act_combo(dm, {m: R.one}, da + db, A.product(da, a, db, b))
                            if not eq(one, two):
                                witnesses.append({"axiom": "associativity", "triple": (m, a, b)})

    # chain map: right: d(m·a) = dm·a + (-1)^|m| m·da
    #            left:  d(a·m) = da·m + (-1)^|a| a·dm
    for dm in range(N + 1):
        for da in range(1, N + 1 - dm):
            for m in X.basis.names(dm):
                for a in A.basis(da):
                    lhs = {}
                    for r, v in M.act(dm, m, da, a).items():
                        for r2, c in X.d_of(dm + da, r).items():
                            lhs[r2] = R.add(lhs.get(r2, R.zero), R.mul(v, c))
                    lhs = {k: v for k, v in lhs.items() if not R.is_zero(v)}
                    rhs = {}
                    if M.side == "right":
                        for r, v in M.act_combo(dm - 1, X.d_of(dm, m), da, {a: R.one}).items():
                            rhs[r] = R.add(rhs.get(r, R.zero), v)
                        sgn = _sign(R, dm)
                        for r, v in M.act_combo(dm, {m: R.one}, da - 1, A.complex.d_of(da, a)).items():
                            rhs[r] = R.add(rhs.get(r, R.zero), R.mul(sgn, v))
                    else:
                        sgn = _sign(R, da)
                        for r, v in M.act_combo(dm - 1, X.d_of(dm, m), da, {a: R.one}).items():
                            rhs[r] = R.add(rhs.get(r, R.zero), R.mul(sgn, v))
                        for r, v in M.act_combo(dm, {m: R.one}, da - 1, A.complex.d_of(da, a)).items():
                            rhs[r] = R.add(rhs.get(r, R.zero), v)
                    rhs = {k: v for k, v in rhs.items() if not R.is_zero(v)}
                    if not eq(lhs, rhs):
                        witnesses.append({"axiom": "chain-map", "pair": ((dm, m), (da, a))})
    return (not witnesses), witnesses


def verify_comodule(M: ComoduleStructure):
    """Counital + coassociative + chain-map check for a coaction table."""
    R = M.ring
    C = M.coalgebra
    X = M.carrier
    N = X.truncation
    witnesses = []

    for dm in range(N + 1):
        for m in X.basis.names(dm):
            terms = M.coact(dm, m)
            got = {}
            for k1, k2, v in terms:
                ckey, mkey = (k1, k2) if M.side == "left" else (k2, k1)
                if ckey[0] == 0:
                    got[mkey] = R.add(got.get(mkey, R.zero), R.mul(C.counit(*ckey), v))
            want = {(dm, m): R.one}
            keys = set(got) | set(want)
            if any(not R.is_zero(R.sub(got.get(k, R.zero), want.get(k, R.zero))) for k in keys):
                witnesses.append({"axiom": "counital", "element": (dm, m)})

            # coassociativity: (Δ⊗1)λ = (1⊗λ)λ for left; mirrored for right
            def norm3(ts):
                out = {}
                for a, b, c, v in ts:
                    out[(a, b, c)] = R.add(out.get((a, b, c), R.zero), v)
                return {k: v for k, v in out.items() if not R.is_zero(v)}

            lhs, rhs = [], []
            if M.side == "left":
                for (dc, c), (dm2, m2), v in terms:
                    for (e1, c1), (e2, c2), w in C.coproduct(dc, c):
                        lhs.append(((e1, c1), (e2, c2), (dm2, m2), R.mul(v, w)))
                    for (dc2, c2), (dm3, m3), w in M.coact(dm2, m2):
                        rhs.append(((dc, c), (dc2, c2), (dm3, m3), R.mul(v, w)))
            else:
                for (dm2, m2), (dc, c), v in terms:
                    for (dm3, m3), (dc2, c2), w in M.coact(dm2, m2):
                        lhs.append(((dm3, m3), (dc2, c2), (dc, c), R.mul(v, w)))
                    for (e1, c1), (e2, c2), w in C.coproduct(dc, c):
                        rhs.append(((dm2, m2), (e1, c1), (e2, c2), R.mul(v, w)))
            if norm3(lhs) != norm3(rhs):
                witnesses.append({"axiom": "coassociativity", "element": (dm, m)})

            # chain map: λ(dm) = (d⊗1 + Koszul 1⊗d) λ(m)
            lhs2 = {}
            for m2, v in X.d_of(dm, m).items():
                for k1, k2, w in M.coact(dm - 1, m2):
                    lhs2[(k1, k2)] = R.add(lhs2.get((k1, k2), R.zero), R.mul(v, w))
            rhs2 = {}
            for k1, k2, v in terms:
                (d1, n1), (d2, n2) = k1, k2
                src1 = C.complex if M.side == "left" else X
                src2 = X if M.side == "left" else C.complex
                for n1b, cc in src1.d_of(d1, n1).items():
                    key = ((d1 - 1, n1b), k2)
                    rhs2[key] = R.add(rhs2.get(key, R.zero), R.mul(v, cc))
                sgn = _sign(R, d1)
                for n2b, cc in src2.d_of(d2, n2).items():
                    key = (k1, (d2 - 1, n2b))
                    rhs2[key] = R.add(rhs2.get(key, R.zero), R.mul(R.mul(sgn, v), cc))
            keys = set(lhs2) | set(rhs2)
            if any(not R.is_zero(R.sub(lhs2.get(k, R.zero), rhs2.get(k, R.zero))) for k in keys):
                witnesses.append({"axiom": "chain-map", "element": (dm, m)})

    return (not witnesses), witnesses


# ---------------------------------------------------------------------
# Tensor products of algebras and coalgebras (Koszul convention).
# ---------------------------------------------------------------------

def tensor_algebra_product(A: ChainAlgebra, B: ChainAlgebra, through: int | None = None) -> ChainAlgebra:
    """(a⊗b)·(a'⊗b') = (-1)^{|b||a'|} aa' ⊗ bb'."""
    if A.ring != B.ring:
        raise RingMismatch(f"{A.ring} vs {B.ring}")
    R = A.ring
    Z = tensor_complex(A.complex, B.complex, through)
    out = ChainAlgebra(Z, tensor_name(A.unit, B.unit), name=f"{A.name}⊗{B.name}")
    N = Z.truncation
    for p1 in range(N + 1):
        for q1 in range(N + 1 - p1):
            for p2 in range(N + 1 - p1 - q1):
                for q2 in range(N + 1 - p1 - q1 - p2):
                    if p1 + q1 == 0 or p2 + q2 == 0:
                        continue
                    for a in A.basis(p1):
                        for b in B.basis(q1):
                            for a2 in A.basis(p2):
                                for b2 in B.basis(q2):
                                    sgn = _sign(R, q1 * p2)
                                    res = {}
                                    for ra, va in A.product(p1, a, p2, a2).items():
                                        for rb, vb in B.product(q1, b, q2, b2).items():
                                            res[tensor_name(ra, rb)] = R.mul(sgn, R.mul(va, vb))
                                    if res:
                                        out.set_product(
                                            p1 + q1, tensor_name(a, b),
                                            p2 + q2, tensor_name(a2, b2), res,
                                        )
    return out


def tensor_coalgebra_product(C: ChainCoalgebra, D: ChainCoalgebra, through: int | None = None) -> ChainCoalgebra:
    """Δ(c⊗d) = Σ ± (c1⊗d1) ⊗ (c2⊗d2), sign (-1)^{|d1||c2|}."""
    if C.ring != D.ring:
        raise RingMismatch(f"{C.ring} vs {D.ring}")
    R = C.ring
    Z = tensor_complex(C.complex, D.complex, through)
    out = ChainCoalgebra(Z, tensor_name(C.coaug, D.coaug), name=f"{C.name}⊗{D.name}")
    N = Z.truncation
    for p in range(N + 1):
        for q in range(N + 1 - p):
            if p + q == 0:
                continue
            for c in C.basis(p):
                for d in D.basis(q):
                    terms = []
                    for (e1, c1), (e2, c2), v in C.coproduct(p, c):
                        for (f1, d1), (f2, d2), w in D.coproduct(q, d):
                            sgn = _sign(R, f1 * e2)
                            coeff = R.mul(sgn, R.mul(v, w))
                            k1 = (e1 + f1, tensor_name(c1, d1))
                            k2 = (e2 + f2, tensor_name(c2, d2))
                            if not (k1[0] == 0 and k2 == (p + q, tensor_name(c, d))) and \
                               not (k2[0] == 0 and k1 == (p + q, tensor_name(c, d))):
                                if k1[0] > 0 and k2[0] > 0:
                                    terms.append((k1, k2, coeff))
                    out.set_coproduct_reduced(p + q, tensor_name(c, d), terms)
    return out


def free_module_over(A: ChainAlgebra, left_basis: ChainComplex, carrier: ChainComplex,
                     pair_name=tensor_name) -> ModuleStructure:
    """Right A-module structure on carrier = left_basis ⊗ A, acting on the
    second factor.  Used for every free module in this artifact."""
    R = A.ring
    M = ModuleStructure(A, carrier, "right")
    N = carrier.truncation
    for p in range(N + 1):
        for x in left_basis.basis.names(p):
            for q in range(N + 1 - p):
                for a in A.basis(q):
                    m = pair_name(x, a)
                    for r in range(1, N + 1 - p - q):
                        for b in A.basis(r):
                            res = {
                                pair_name(x, ab): v
                                for ab, v in A.product(q, a, r, b).items()
                            }
                            if res:
                                M.set_action(p + q, m, r, b, res)
    return M


def cofree_comodule_over(C: ChainCoalgebra, carrier: ChainComplex, right_basis: ChainComplex,
                         pair_name=tensor_name) -> ComoduleStructure:
    """Left C-comodule structure on carrier = C ⊗ right_basis, splitting the
    first factor by Δ.  Dual of free_module_over."""
    R = C.ring
    M = ComoduleStructure(C, carrier, "left")
    N = carrier.truncation
    for p in range(N + 1):
        for c in C.basis(p):
            for q in range(N + 1 - p):
                for y in right_basis.basis.names(q):
                    m = pair_name(c, y)
                    terms = []
                    for (e1, c1), (e2, c2), v in C.coproduct(p, c):
                        terms.append(((e1, c1), (e2 + q, pair_name(c2, y)), v))
                    M.set_coaction(p + q, m, terms)
    return M
