"""Twisting cochains, their Maurer-Cartan verification, the universal and
couniversal examples, and twisted tensor products with the D_t differential.
"""

from __future__ import annotations

from dataclasses import dataclass

from .barcobar import bar_word_name, cobar_word_name
from .complexes import ChainComplex, ChainMap, GradedBasis, tensor_name
from .hopf import ChainAlgebra, ChainCoalgebra, ComoduleStructure, Key, ModuleStructure, _sign


class NotATwistingCochain(Exception):
    pass


class StructureMismatch(Exception):
    pass


class CompositionMismatch(Exception):
    pass


class TwistingCochain:
    """Degree -1 map t: C -> A, stored per basis element of C."""

    def __init__(self, source: ChainCoalgebra, target: ChainAlgebra, values=None, name: str = ""):
        self.source = source
        self.target = target
        self.name = name
        # (deg, name in C) -> {name in A of degree deg-1: coeff}
        self.values: dict[Key, dict[str, object]] = {}
        if values:
            for k, combo in values.items():
                self.set_value(k[0], k[1], combo)

    @property
    def ring(self):
        return self.source.ring

    def set_value(self, dc: int, c: str, combo: dict[str, object]):
        R = self.ring
        clean = {k: R.of(v) for k, v in combo.items() if not R.is_zero(R.of(v))}
        if clean:
            self.values[(dc, c)] = clean
        else:
            self.values.pop((dc, c), None)

    def value(self, dc: int, c: str) -> dict[str, object]:
        return self.values.get((dc, c), {})

    def value_combo(self, dc: int, combo: dict[str, object]) -> dict[str, object]:
        R = self.ring
        out: dict[str, object] = {}
        for c, v in combo.items():
            for a, w in self.value(dc, c).items():
                out[a] = R.add(out.get(a, R.zero), R.mul(v, w))
        return {k: v for k, v in out.items() if not R.is_zero(v)}


def verify_twisting_cochain(t: TwistingCochain, through: int | None = None):
    """Check dt + td = m(t⊗t)Δ on every basis element; (ok, witnesses)."""
    C, A, R = t.source, t.target, t.ring
    N = min(C.truncation, A.truncation + 1)
    if through is not None:
        N = min(N, through)
    witnesses = []
    if t.value(0, C.coaug):
        witnesses.append({"element": (0, C.coaug), "reason": "nonzero on coaugmentation"})
    for n in range(1, N + 1):
        for c in C.basis(n):
            lhs: dict[str, object] = {}
            # d_A(t(c))
            for a, v in t.value(n, c).items():
                for a2, w in A.complex.d_of(n - 1, a).items():
                    lhs[a2] = R.add(lhs.get(a2, R.zero), R.mul(v, w))
            # t(d_C(c))
            for c2, v in C.complex.d_of(n, c).items():
                for a, w in t.value(n - 1, c2).items():
                    lhs[a] = R.add(lhs.get(a, R.zero), R.mul(v, w))
            # m(t⊗t)Δ(c): Koszul sign (-1)^{|c1|} from moving t past c1
            rhs: dict[str, object] = {}
            for (d1, c1), (d2, c2), v in C.reduced_coproduct(n, c):
                sgn = _sign(R, d1)
                prod = A.mul_combo(d1 - 1, t.value(d1, c1), d2 - 1, t.value(d2, c2))
                for a, w in prod.items():
                    rhs[a] = R.add(rhs.get(a, R.zero), R.mul(R.mul(sgn, v), w))
            keys = set(lhs) | set(rhs)
            if any(not R.is_zero(R.sub(lhs.get(k, R.zero), rhs.get(k, R.zero))) for k in keys):
                witnesses.append({"element": (n, c), "lhs": lhs, "rhs": rhs})
    return (not witnesses), witnesses


def universal_cochain(C: ChainCoalgebra, Omega: ChainAlgebra) -> TwistingCochain:
    """t_Ω: C -> Cobar(C), c -> s-1(c)  (0 on the coaugmentation)."""
    t = TwistingCochain(C, Omega, name="t_Omega")
    for n in range(2, C.truncation + 1):
        for c in C.basis(n):
            name = cobar_word_name(((n, c),))
            if n - 1 <= Omega.truncation:
                t.set_value(n, c, {name: 1})
    return t


def couniversal_cochain(Bar: ChainCoalgebra, A: ChainAlgebra) -> TwistingCochain:
    """t_Bar: Bar(A) -> A: s(a) -> a on one-letter words, 0 on longer ones."""
    t = TwistingCochain(Bar, A, name="t_Bar")
    for n in range(1, A.truncation + 1):
        for a in A.basis(n):
            name = bar_word_name(((n, a),))
            if n + 1 <= Bar.truncation:
                t.set_value(n + 1, name, {a: 1})
    return t


def compose_cochain(g: ChainMap | None, t: TwistingCochain, f: ChainMap | None,
                    source: ChainCoalgebra | None = None,
                    target: ChainAlgebra | None = None) -> TwistingCochain:
    """f ∘ t ∘ g for a coalgebra map g: C' -> C and algebra map f: A -> A'."""
    C2 = source if source is not None else t.source
    A2 = target if target is not None else t.target
    if g is not None and g.target.basis is not t.source.complex.basis:
        raise CompositionMismatch("g must land in the cochain source")
    if f is not None and f.source.basis is not t.target.complex.basis:
        raise CompositionMismatch("f must start at the cochain target")
    R = t.ring
    out = TwistingCochain(C2, A2, name=f"({t.name} composed)")
    N = C2.truncation
    for n in range(1, N + 1):
        for c in C2.basis(n):
            pre = g.apply(n, c) if g is not None else {c: R.one}
            mid = t.value_combo(n, pre)
            if f is not None:
                post: dict[str, object] = {}
                for a, v in mid.items():
                    for a2, w in f.apply(n - 1, a).items():
                        post[a2] = R.add(post.get(a2, R.zero), R.mul(v, w))
                mid = post
            out.set_value(n, c, mid)
    return out


@dataclass
class TwistedTensorProduct:
    complex: ChainComplex
    comodule: ComoduleStructure
    module: ModuleStructure
    cochain: TwistingCochain
    orientation: str
    pairs: dict[str, tuple[Key, Key]] = None  # pair name -> (left key, right key)


def twisted_tensor(P: ComoduleStructure, M: ModuleStructure, t: TwistingCochain,
                   orientation: str, N: int, verify: bool = True) -> TwistedTensorProduct:
    """Twisted tensor product with differential d⊗1 + 1⊗d + twist term.

    orientation "module-first": total = M ⊗ P-carrier, M a right A-module,
    P a left C-comodule; twist(m⊗n) = Σ (-1)^{|m|} m·t(c) ⊗ n'.

    orientation "comodule-first": total = P-carrier ⊗ M, P a right
    C-comodule, M a left A-module; twist(p⊗m) = Σ (-1)^{|p'|} p' ⊗ t(c)·m.
    """
    if orientation not in ("module-first", "comodule-first"):
        raise ValueError(orientation)
    if P.coalgebra is not t.source:
        raise StructureMismatch("comodule is not over the cochain source")
    if M.algebra is not t.target:
        raise StructureMismatch("module is not over the cochain target")
    if verify:
        ok, w = verify_twisting_cochain(t)
        if not ok:
            raise NotATwistingCochain(str(w[:1]))
    R = t.ring
    if orientation == "module-first":
        if M.side != "right" or P.side != "left":
            raise StructureMismatch("module-first needs a right module and a left comodule")
        left_cx, right_cx = M.carrier, P.carrier
    else:
        if P.side != "right" or M.side != "left":
            raise StructureMismatch("comodule-first needs a right comodule and a left module")
        left_cx, right_cx = P.carrier, M.carrier

    basis = GradedBasis(N)
    pairs: dict[str, tuple[Key, Key]] = {}
    for n in range(N + 1):
        for p in range(n + 1):
            for x in left_cx.basis.names(p):
                for y in right_cx.basis.names(n - p):
                    name = tensor_name(x, y)
                    basis.add(n, name)
                    pairs[name] = ((p, x), (n - p, y))
    Z = ChainComplex(R, basis)

    for n in range(1, N + 1):
        for name, ((p, x), (q, y)) in pairs.items():
            if p + q != n:
                continue
            # tensor differential
            for x2, c in left_cx.d_of(p, x).items():
                Z.set_d_entry(n, name, tensor_name(x2, y), c)
            sgn = _sign(R, p)
            for y2, c in right_cx.d_of(q, y).items():
                Z.set_d_entry(n, name, tensor_name(x, y2), R.mul(sgn, c))
            # twist term.  The relative sign between the two orientations is
            # forced: D_t^2 = 0 must be equivalent to the Maurer-Cartan
            # identity, and the t-operator crosses the surviving tensor
            # factor on opposite sides (tested both ways on fixtures with
            # nontrivial quadratic terms).
            if orientation == "module-first":
                # λ(y) = Σ c ⊗ y2;  m⊗y -> (-1)^{|m|} (m·t(c)) ⊗ y2
                for (dc, c), (dy, y2), v in P.coact(q, y):
                    tval = t.value(dc, c)
                    if not tval:
                        continue
                    acted = M.act_combo(p, {x: R.one}, dc - 1, tval)
                    for m2, w in acted.items():
                        coeff = R.mul(R.mul(_sign(R, p), v), w)
                        Z.set_d_entry(n, name, tensor_name(m2, y2), coeff)
            else:
                # ρ(x) = Σ x2 ⊗ c;  x⊗m -> -(-1)^{|x2|} x2 ⊗ (t(c)·m)
                for (dx, x2), (dc, c), v in P.coact(p, x):
                    tval = t.value(dc, c)
                    if not tval:
                        continue
                    acted = M.act_combo(q, {y: R.one}, dc - 1, tval)
                    for m2, w in acted.items():
                        coeff = R.neg(R.mul(R.mul(_sign(R, dx), v), w))
                        Z.set_d_entry(n, name, tensor_name(x2, m2), coeff)
    return TwistedTensorProduct(Z, P, M, t, orientation, pairs)


# ---------------------------------------------------------------------
# Canonical (co)module structures used by the classifying bundles.
# ---------------------------------------------------------------------

def self_comodule_right(C: ChainCoalgebra) -> ComoduleStructure:
    """C as a right comodule over itself via Δ (back part is the C-part)."""
    return ComoduleStructure(C, C.complex, "right", coact_fn=lambda dm, m: C.coproduct(dm, m))


def self_comodule_left(C: ChainCoalgebra) -> ComoduleStructure:
    return ComoduleStructure(C, C.complex, "left", coact_fn=lambda dm, m: C.coproduct(dm, m))


def self_module_left(A: ChainAlgebra) -> ModuleStructure:
    return ModuleStructure(A, A.complex, "left",
                           act_fn=lambda dm, m, da, a: A.product(da, a, dm, m))


def self_module_right(A: ChainAlgebra) -> ModuleStructure:
    return ModuleStructure(A, A.complex, "right",
                           act_fn=lambda dm, m, da, a: A.product(dm, m, da, a))


def comodule_via_map(C: ChainCoalgebra, carrier_coalgebra: ChainCoalgebra,
                     g: ChainMap, side: str = "right") -> ComoduleStructure:
    """carrier as a C-comodule via a coalgebra map g: carrier -> C.

    side "right": ρ = (1⊗g)Δ;  side "left": λ = (g⊗1)Δ.
    """
    R = C.ring

    def fn(dm, m):
        out = []
        for (d1, n1), (d2, n2), v in carrier_coalgebra.coproduct(dm, m):
            if side == "right":
                for c, w in g.apply(d2, n2).items():
                    out.append(((d1, n1), (d2, c), R.mul(v, w)))
            else:
                for c, w in g.apply(d1, n1).items():
                    out.append(((d1, c), (d2, n2), R.mul(v, w)))
        return out

    return ComoduleStructure(C, carrier_coalgebra.complex, side, coact_fn=fn)


def module_via_map(A: ChainAlgebra, carrier_algebra: ChainAlgebra,
                   f: ChainMap, side: str = "left") -> ModuleStructure:
    """carrier as an A-module via an algebra map f: A -> carrier."""
    R = A.ring

    def fn(dm, m, da, a):
        out: dict[str, object] = {}
        for b, v in f.apply(da, a).items():
            prod = (carrier_algebra.product(da, b, dm, m) if side == "left"
                    else carrier_algebra.product(dm, m, da, b))
            for r, w in prod.items():
                out[r] = R.add(out.get(r, R.zero), R.mul(v, w))
        return {k: v for k, v in out.items() if not R.is_zero(v)}

    return ModuleStructure(A, carrier_algebra.complex, side, act_fn=fn)
