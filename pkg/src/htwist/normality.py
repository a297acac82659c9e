"""Extended bundles, elementary equivalences, normal-pair certificates, and
the concrete certificate builders: rigid (co)normality, commutative algebras,
trivial extensions, and the extreme unit/identity examples.

A certificate is an explicit finite zigzag of extended-bundle morphisms
joining a truncated dual Nomura-Puppe window to a truncated Nomura-Puppe
window.  Verification is strict: all three squares commute as matrices,
structure maps are preserved, and every component is a quasi-isomorphism
through the declared degree.  Certificate *construction* uses a library of
closed-form bridges, each re-verified at build time; where the source
text's ladder is strictly unsatisfiable the builder reports the failure
with a witness instead of papering over it (see the decisions ledger).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .barcobar import (
    bar,
    bar_map,
    cobar,
    cobar_map,
    counit_map,
    is_algebra_map,
    is_coalgebra_map,
    shuffle_product_bar,
    unit_map,
    NotCommutative,
)
from .bundles import BorelKernel, BorelQuotient, borel_kernel, borel_quotient, twisted_bundle
from .complexes import (
    ChainComplex,
    ChainMap,
    is_quasi_iso_through,
    tensor_name,
)
from .hopf import (
    ChainAlgebra,
    ChainCoalgebra,
    ComoduleStructure,
    ModuleStructure,
    verify_algebra,
)
from .twisting import compose_cochain, couniversal_cochain, universal_cochain


class MalformedMorphism(Exception):
    pass


class EndpointMismatch(Exception):
    pass


class HypothesisFailed(Exception):
    def __init__(self, axiom: str, detail=None):
        super().__init__(axiom)
        self.axiom = axiom
        self.detail = detail


@dataclass
class ExtendedBundle:
    """A -> M -> N -> C: monoid, right-A-module, left-C-comodule, comonoid."""

    monoid: ChainAlgebra
    module: ModuleStructure          # right action of monoid on M
    comodule: ComoduleStructure      # left coaction of comonoid on N
    comonoid: ChainCoalgebra
    j: ChainMap                      # A -> M, module map
    d: ChainMap                      # M -> N, plain chain map
    p: ChainMap                      # N -> C, comodule map
    label: str = ""

    @property
    def M(self) -> ChainComplex:
        return self.module.carrier

    @property
    def N(self) -> ChainComplex:
        return self.comodule.carrier

    def slots(self):
        return (self.monoid.complex, self.M, self.N, self.comonoid.complex)


@dataclass
class ExtendedBundleMorphism:
    source: ExtendedBundle
    target: ExtendedBundle
    alpha: ChainMap                  # monoids
    mu: ChainMap                     # M-slots
    nu: ChainMap                     # N-slots
    beta: ChainMap                   # comonoids
    label: str = ""


def verify_elementary_equivalence(m: ExtendedBundleMorphism, through: int):
    """Squares, structure preservation, and four quasi-isomorphism checks.

    Returns (ok, report); the report localizes each failed check."""
    S, T = m.source, m.target
    R = S.monoid.ring
    report = {}

    for nm, f in (("alpha", m.alpha), ("mu", m.mu), ("nu", m.nu), ("beta", m.beta)):
        ok, deg = f.is_chain_map()
        report[f"{nm}-chain"] = ok if ok else {"failed-at": deg}

    report["alpha-algebra-map"] = is_algebra_map(m.alpha, S.monoid, T.monoid)
    report["beta-coalgebra-map"] = is_coalgebra_map(m.beta, S.comonoid, T.comonoid)

    # mu is a module map over alpha: mu(x·a) = mu(x)·alpha(a)
    ok_mod = True
    N = min(S.M.truncation, T.M.truncation)
    for n in range(N + 1):
        for x in S.M.basis.names(n):
            for q in range(1, N + 1 - n):
                for a in S.monoid.basis(q):
                    lhs: dict = {}
                    for x2, v in S.module.act(n, x, q, a).items():
                        for y, w in m.mu.apply(n + q, x2).items():
                            lhs[y] = R.add(lhs.get(y, R.zero), R.mul(v, w))
                    rhs = T.module.act_combo(n, m.mu.apply(n, x), q, m.alpha.apply(q, a))
                    keys = set(lhs) | set(rhs)
                    if any(not R.is_zero(R.sub(lhs.get(k, R.zero), rhs.get(k, R.zero)))
                           for k in keys):
                        ok_mod = False
    report["mu-module-map"] = ok_mod

    # nu is a comodule map over beta: λ' ∘ nu = (beta ⊗ nu) ∘ λ
    ok_com = True
    N2 = min(S.N.truncation, T.N.truncation)
    for n in range(N2 + 1):
        for x in S.N.basis.names(n):
            lhs: dict = {}
            for y, v in m.nu.apply(n, x).items():
                for k1, k2, w in T.comodule.coact(n, y):
                    lhs[(k1, k2)] = R.add(lhs.get((k1, k2), R.zero), R.mul(v, w))
            rhs: dict = {}
            for (dc, c), (dm, x2), v in S.comodule.coact(n, x):
                for c2, w1 in m.beta.apply(dc, c).items():
                    for y2, w2 in m.nu.apply(dm, x2).items():
                        key = ((dc, c2), (dm, y2))
                        rhs[key] = R.add(rhs.get(key, R.zero), R.mul(v, R.mul(w1, w2)))
            keys = set(lhs) | set(rhs)
            if any(not R.is_zero(R.sub(lhs.get(k, R.zero), rhs.get(k, R.zero))) for k in keys):
                ok_com = False
    report["nu-comodule-map"] = ok_com

    hi = through
    sq1 = m.mu.compose(S.j)
    sq1b = T.j.compose(m.alpha)
    report["j-square"] = all(sq1.mat(n) == sq1b.mat(n) for n in range(hi + 1))
    sq2 = m.nu.compose(S.d)
    sq2b = T.d.compose(m.mu)
    report["d-square"] = all(sq2.mat(n) == sq2b.mat(n) for n in range(hi + 1))
    sq3 = m.beta.compose(S.p)
    sq3b = T.p.compose(m.nu)
    report["p-square"] = all(sq3.mat(n) == sq3b.mat(n) for n in range(hi + 1))

    for nm, f in (("alpha", m.alpha), ("mu", m.mu), ("nu", m.nu), ("beta", m.beta)):
        okq, _ = is_quasi_iso_through(f, through, check_chain_map=False)
        report[f"{nm}-quasi-iso"] = okq

    ok = all(v is True for v in report.values())
    return ok, report


@dataclass
class NormalPairCertificate:
    """Zigzag of elementary equivalences from θ(g) to τ(f)."""

    f_label: str
    g_label: str
    theta: ExtendedBundle
    tau: ExtendedBundle
    arrows: list = field(default_factory=list)  # (direction, morphism); "fwd" points toward tau
    notes: list = field(default_factory=list)

    def columns(self):
        """The chain of bundles the zigzag passes through."""
        cols = [self.theta]
        for direction, m in self.arrows:
            cols.append(m.target if direction == "fwd" else m.source)
        return cols


def verify_normal_pair(cert: NormalPairCertificate, through: int):
    """Endpoints plus every arrow; (ok, per-arrow reports)."""
    reports = {}
    cur = cert.theta
    for idx, (direction, m) in enumerate(cert.arrows):
        here, there = (m.source, m.target) if direction == "fwd" else (m.target, m.source)
        if here is not cur:
            raise EndpointMismatch(f"arrow {idx} does not continue the zigzag")
        ok, rep = verify_elementary_equivalence(m, through)
        reports[f"arrow{idx}:{m.label}"] = {"ok": ok, "detail": rep}
        cur = there
    if cur is not cert.tau:
        raise EndpointMismatch("zigzag does not end at tau(f)")
    ok_all = all(r["ok"] for r in reports.values())
    return ok_all, reports


# ---------------------------------------------------------------------
# The truncated Nomura-Puppe windows.
# ---------------------------------------------------------------------

def truncated_np(f: ChainMap, A: ChainAlgebra, A2: ChainAlgebra, N: int,
                 BarA: ChainCoalgebra | None = None,
                 BarA2: ChainCoalgebra | None = None,
                 quotient: BorelQuotient | None = None) -> ExtendedBundle:
    """τ(f) = (A' -> A'//A -> Bar A -> Bar A')."""
    from .hopf import cofree_comodule_over
    from .twisting import comodule_via_map

    BarA = BarA if BarA is not None else bar(A, N)
    BarA2 = BarA2 if BarA2 is not None else bar(A2, N)
    q = quotient if quotient is not None else borel_quotient(f, A, A2, N, BarA)
    bf = bar_map(f, BarA, BarA2)
    comod = comodule_via_map(BarA2, BarA, bf, side="left")
    return ExtendedBundle(
        monoid=A2,
        module=q.bundle.module,
        comodule=comod,
        comonoid=BarA2,
        j=q.pi,
        d=q.delta,
        p=bf,
        label=f"tau({f and 'f'}:{A.name}->{A2.name})",
    )


def truncated_dual_np(g: ChainMap, C2: ChainCoalgebra, C: ChainCoalgebra, N: int,
                      OmegaC2: ChainAlgebra | None = None,
                      OmegaC: ChainAlgebra | None = None,
                      kernel: BorelKernel | None = None) -> ExtendedBundle:
    """θ(g) = (Ω C' -> Ω C -> C\\C' -> C')."""
    from .twisting import module_via_map

    OmegaC2 = OmegaC2 if OmegaC2 is not None else cobar(C2, N)
    OmegaC = OmegaC if OmegaC is not None else cobar(C, N)
    k = kernel if kernel is not None else borel_kernel(g, C2, C, N, OmegaC)
    og = cobar_map(g, OmegaC2, OmegaC)
    module = module_via_map(OmegaC2, OmegaC, og, side="right")
    return ExtendedBundle(
        monoid=OmegaC2,
        module=module,
        comodule=k.bundle.comodule,
        comonoid=C2,
        j=og,
        d=k.del_map,
        p=k.iota,
        label=f"theta(g:{C2.name}->{C.name})",
    )


def left_np_window(h: ChainMap, B: ChainAlgebra, B2: ChainAlgebra, N: int,
                   BarB: ChainCoalgebra | None = None,
                   quotient: BorelQuotient | None = None) -> ExtendedBundle:
    """The shifted window (B -> B' -> B'//B -> Bar B) of the NP sequence of h."""
    BarB = BarB if BarB is not None else bar(B, N)
    q = quotient if quotient is not None else borel_quotient(h, B, B2, N, BarB)
    from .twisting import module_via_map

    module = module_via_map(B, B2, h, side="right")
    return ExtendedBundle(
        monoid=B,
        module=module,
        comodule=q.bundle.comodule,
        comonoid=BarB,
        j=h,
        d=q.pi,
        p=q.delta,
        label=f"W_L({B.name}->{B2.name})",
    )


# ---------------------------------------------------------------------
# Closed-form bridges.  Pair decompositions come from the realized
# bundles (never from parsing names: word names may contain ⊗).
# ---------------------------------------------------------------------

def _tensor_map_on_pairs(src_total: ChainComplex, src_pairs, dst: ChainComplex,
                         right_map: ChainMap, keep_left=lambda name: name) -> ChainMap:
    """name = (left ⊗ right) -> Σ keep_left(left) ⊗ right_map(right)."""
    out = ChainMap(src_total, dst)
    for name, ((dl, lname), (dr, rname)) in src_pairs.items():
        n = dl + dr
        for r2, v in right_map.apply(dr, rname).items():
            out.set_entry(n, name, tensor_name(keep_left(lname), r2), v)
    return out


def bridge_counit_ladder(theta: ExtendedBundle, wl: ExtendedBundle,
                         theta_pairs, vB: ChainMap, vB2: ChainMap,
                         BarB: ChainCoalgebra) -> ExtendedBundleMorphism:
    """θ(Bar h) -> W_L(h) for h: B -> B', components (v_B, v_{B'}, 1⊗v_{B'}, id).

    theta_pairs is the pair table of the realized kernel total
    Bar(B) ⊗ Cobar(Bar B')."""
    gamma = _tensor_map_on_pairs(theta.N, theta_pairs, wl.N, vB2)
    return ExtendedBundleMorphism(theta, wl, vB, vB2, gamma,
                                  ChainMap.identity(BarB.complex),
                                  label="counit-ladder")


def shifted_theta_window(f: ChainMap, A: ChainAlgebra, A2: ChainAlgebra, N: int,
                         BarA: ChainCoalgebra, BarA2: ChainCoalgebra,
                         OmegaBarA2: ChainAlgebra):
    """θ_R(Bar f) = (Ω Bar A' -> Bar A'\\Bar A -> Bar A -> Bar A') as an
    extended bundle, plus the kernel realization."""
    from .twisting import comodule_via_map

    bf = bar_map(f, BarA, BarA2)
    kernel = borel_kernel(bf, BarA, BarA2, N, OmegaBarA2)
    comod = comodule_via_map(BarA2, BarA, bf, side="left")
    window = ExtendedBundle(
        monoid=OmegaBarA2,
        module=kernel.bundle.module,
        comodule=comod,
        comonoid=BarA2,
        j=kernel.del_map,
        d=kernel.iota,
        p=bf,
        label=f"theta_R(Bar f:{A.name}->{A2.name})",
    )
    return window, kernel


def bridge_shifted_theta_to_tau(window: ExtendedBundle, kernel: BorelKernel,
                                tau: ExtendedBundle, vA2: ChainMap,
                                BarA: ChainCoalgebra, BarA2: ChainCoalgebra) -> ExtendedBundleMorphism:
    """θ_R(Bar f) -> τ(f): components (v_{A'}, 1⊗v_{A'}, id, id); both squares
    close strictly in the realization (the ladder comparison)."""
    gamma = _tensor_map_on_pairs(window.N, kernel.bundle.pairs, tau.M, vA2)
    return ExtendedBundleMorphism(window, tau, vA2, gamma,
                                  ChainMap.identity(BarA.complex),
                                  ChainMap.identity(BarA2.complex),
                                  label="shifted-theta-to-tau")


# ---------------------------------------------------------------------
# Certificate builders.
# ---------------------------------------------------------------------

def rigid_normality_certificate(f: ChainMap, A: ChainAlgebra, A2: ChainAlgebra,
                                quotient_algebra: ChainAlgebra, pi_tilde: ChainMap,
                                N: int, context: dict | None = None):
    """The rigid route with normality structure g = Bar(π_f).

    Verified hypotheses (HypothesisFailed otherwise): the supplied
    multiplication is a chain algebra, π_f is an algebra map for it,
    π̃ is a quasi-isomorphism and its left square π̃∘π_{π_f} = δ_f
    commutes.  The companion square Bar(f)∘π̃ = δ_{π_f} is checked and
    reported; it cannot hold strictly in this realization whenever Bar(f)
    is faithful (composite obstruction, see the ledger), so the final
    arrow of the emitted zigzag fails verification honestly there.
    """
    ctx = context or {}
    BarA = ctx.get("BarA") or bar(A, N + 1)
    BarA2 = ctx.get("BarA2") or bar(A2, N + 1)
    q = ctx.get("quotient") or borel_quotient(f, A, A2, N, BarA)
    Q = quotient_algebra

    ok, witnesses = verify_algebra(Q)
    if not ok:
        raise HypothesisFailed("algebra-structure", witnesses[:3])
    pi_f = q.pi
    if not is_algebra_map(pi_f, A2, Q):
        raise HypothesisFailed("algebra-map", "pi_f is not multiplicative for the supplied product")

    tau = truncated_np(f, A, A2, N, BarA, BarA2, q)
    q2 = ctx.get("quotient2") or borel_quotient(pi_f, A2, Q, N, BarA2)
    wl = left_np_window(pi_f, A2, Q, N, BarA2, q2)

    OmegaBarA2 = ctx.get("OmegaBarA2") or cobar(BarA2, N)
    BarQ = ctx.get("BarQ") or bar(Q, N + 1)
    OmegaBarQ = cobar(BarQ, N)
    bpi = bar_map(pi_f, BarA2, BarQ)
    kernel = borel_kernel(bpi, BarA2, BarQ, N, OmegaBarQ)
    theta = truncated_dual_np(bpi, BarA2, BarQ, N, OmegaBarA2, OmegaBarQ, kernel)
    vA2 = counit_map(A2, N, BarA2, OmegaBarA2)
    vQ = counit_map(Q, N, BarQ, OmegaBarQ)
    arrow1 = bridge_counit_ladder(theta, wl, kernel.bundle.pairs, vA2, vQ, BarA2)

    okq, _ = is_quasi_iso_through(pi_tilde, N - 1)
    if not okq:
        raise HypothesisFailed("pi-tilde-quasi-iso")
    left_ok = all(
        pi_tilde.compose(q2.pi).mat(n) == q.delta.mat(n) for n in range(N + 1)
    )
    if not left_ok:
        raise HypothesisFailed("left-square", "pi_tilde ∘ π_{π_f} ≠ δ_f")
    right_ok = all(
        tau.p.compose(pi_tilde).mat(n) == q2.delta.mat(n) for n in range(N + 1)
    )

    arrow2 = ExtendedBundleMorphism(
        wl, tau,
        ChainMap.identity(A2.complex),
        ChainMap.identity(q.bundle.total),
        pi_tilde,
        ChainMap.identity(BarA2.complex),
        label="rigid-projection",
    )
    cert = NormalPairCertificate(
        f_label=f"f:{A.name}->{A2.name}",
        g_label=f"Bar(pi_f):{BarA2.name}->{BarQ.name}",
        theta=theta,
        tau=tau,
        arrows=[("fwd", arrow1), ("fwd", arrow2)],
        notes=[
            "right square Bar(f)∘π̃ = δ_(π_f): "
            + ("holds" if right_ok else "fails strictly (see ledger)"),
        ],
    )
    return cert


def shuffle_quotient_algebra(A: ChainAlgebra, A2: ChainAlgebra, N: int,
                             BarA: ChainCoalgebra, q: BorelQuotient,
                             corrupt_sign: bool = False) -> ChainAlgebra:
    """(w⊗a)·(w'⊗a') = (-1)^{|a||w'|} (w·w')⊗aa' on A'//A, with w·w' the
    shuffle product on Bar(A); requires graded-commutative inputs."""
    from .barcobar import is_graded_commutative

    if not (is_graded_commutative(A) and is_graded_commutative(A2)):
        raise NotCommutative("abelian route needs graded-commutative algebras")
    S = shuffle_product_bar(A, N)
    R = A.ring
    total = q.bundle.total
    pairs = q.bundle.pairs
    unit = tensor_name(BarA.coaug, A2.unit)
    Q = ChainAlgebra(total, unit, name=f"{A2.name}//{A.name}")

    def product(da, aname, db, bname):
        (dw, w), (dx, x) = pairs[aname]
        (dw2, w2), (dx2, x2) = pairs[bname]
        out: dict[str, object] = {}
        sgn = R.of(-1) if (dx * dw2) % 2 else R.one
        if corrupt_sign:
            sgn = R.one
        for wname, v in S.product(dw, w, dw2, w2).items():
            for xname, u in A2.product(dx, x, dx2, x2).items():
                key = tensor_name(wname, xname)
                out[key] = R.add(out.get(key, R.zero), R.mul(sgn, R.mul(v, u)))
        return {k: v for k, v in out.items() if not R.is_zero(v)}

    Q.product_fn = product
    return Q


def natural_quotient_projection(q: BorelQuotient, q2: BorelQuotient,
                                BarA: ChainCoalgebra, N: int) -> ChainMap:
    """(A'//A)//A' -> Bar A: (v ⊗ (w⊗a')) -> ε(v)·ε(a')·w in the realized
    coordinates (the proof's 'obvious projection')."""
    total = q2.bundle.total
    out = ChainMap(total, BarA.complex)
    for name, ((dv, v), (dq, qname)) in q2.bundle.pairs.items():
        if dv != 0:
            continue
        (dw, w), (da, a2) = q.bundle.pairs[qname]
        if da == 0:
            out.set_entry(dv + dq, name, w, 1)
    return out


def abelian_normality(f: ChainMap, A: ChainAlgebra, A2: ChainAlgebra, N: int,
                      corrupt_sign: bool = False):
    """Commutative algebras: shuffle multiplication on the Borel quotient
    plus the natural projection, fed to the rigid certificate builder."""
    BarA = bar(A, N + 1)
    BarA2 = bar(A2, N + 1)
    q = borel_quotient(f, A, A2, N, BarA)
    Q = shuffle_quotient_algebra(A, A2, N, BarA, q, corrupt_sign=corrupt_sign)
    ok, witnesses = verify_algebra(Q)
    if not ok:
        raise HypothesisFailed("algebra-structure", witnesses[:3])
    q2 = borel_quotient(q.pi, A2, Q, N, BarA2)
    pi_tilde = natural_quotient_projection(q, q2, BarA, N)
    return rigid_normality_certificate(
        f, A, A2, Q, pi_tilde, N,
        context={"BarA": BarA, "BarA2": BarA2, "quotient": q, "quotient2": q2},
    )


def unit_algebra_structure_on_quotient(q: BorelQuotient, A2: ChainAlgebra,
                                       trivial: ChainAlgebra) -> ChainAlgebra:
    """For f = η: k -> A the quotient A//k = Bar(k)⊗A is A itself; transport
    the multiplication along the pair names ([]⊗a)."""
    R = A2.ring
    total = q.bundle.total
    pairs = q.bundle.pairs
    unit = None
    for name, ((dv, v), (da, a)) in pairs.items():
        if dv == 0 and da == 0:
            unit = name
    Q = ChainAlgebra(total, unit, name=f"{A2.name}//k")

    def product(da_, aname, db_, bname):
        (_, _), (dx, x) = pairs[aname]
        (_, _), (dy, y) = pairs[bname]
        out = {}
        for r, v in A2.product(dx, x, dy, y).items():
            out[tensor_name(q.bar_source.coaug, r)] = v
        return out

    Q.product_fn = product
    return Q


def chcx_unit_certificate(A: ChainAlgebra, N: int, ring=None):
    """The extreme case f = η: k -> A (always h-normal).  Routed through the
    rigid builder with the quotient A//k carrying A's own multiplication."""
    from .fixtures import trivial_algebra

    k = trivial_algebra(A.ring, A.truncation)
    eta = ChainMap(k.complex, A.complex)
    eta.set_entry(0, "1", A.unit, 1)
    Bark = bar(k, N + 1)
    q = borel_quotient(eta, k, A, N, Bark)
    Q = unit_algebra_structure_on_quotient(q, A, k)
    BarA = bar(A, N + 1)
    q2 = borel_quotient(q.pi, A, Q, N, BarA)
    # π̃: (A//k)//A -> Bar(k) = k: the total augmentation
    pi_tilde = ChainMap(q2.bundle.total, Bark.complex)
    for name, ((dv, v), (dq, qname)) in q2.bundle.pairs.items():
        if dv == 0 and dq == 0:
            pi_tilde.set_entry(0, name, Bark.coaug, 1)
    return rigid_normality_certificate(
        eta, k, A, Q, pi_tilde, N,
        context={"BarA": Bark, "BarA2": BarA, "quotient": q, "quotient2": q2},
    )


def chcx_identity_certificate(A: ChainAlgebra, N: int):
    """The extreme case f = id_A for commutative A (h-normal, structure the
    counit up to the equivalence Bar(EA) ~ k): the abelian route."""
    return abelian_normality(ChainMap.identity(A.complex), A, A, N)


# ---------------------------------------------------------------------
# Dual side: conormality hypotheses (the simplicial engine's chain mirror).
# ---------------------------------------------------------------------

def rigid_conormality_certificate(g: ChainMap, C2: ChainCoalgebra, C: ChainCoalgebra,
                                  kernel_coalgebra: ChainCoalgebra, iota_tilde: ChainMap,
                                  N: int, context: dict | None = None):
    """Dual hypotheses for h-conormality of g with structure Cobar(ι_g).

    Verifies: the supplied comultiplication on C\\C' is a chain coalgebra,
    ι_g is a coalgebra map for it, ι̃ is a quasi-isomorphism, and the
    strict square ι_{ι_g}∘ι̃ = ∂_g.  Emits the B1-bridge zigzag stub from
    θ(g); the remaining dual rigid arrow carries the mirrored strict-square
    obstruction (ledger), so the emitted certificate is partial and says so.
    """
    from .hopf import verify_coalgebra

    ctx = context or {}
    ok, witnesses = verify_coalgebra(kernel_coalgebra)
    if not ok:
        raise HypothesisFailed("coalgebra-structure", witnesses[:3])
    OmegaC2 = ctx.get("OmegaC2") or cobar(C2, N)
    OmegaC = ctx.get("OmegaC") or cobar(C, N)
    kernel = ctx.get("kernel") or borel_kernel(g, C2, C, N, OmegaC)
    if not is_coalgebra_map(kernel.iota, kernel_coalgebra, C2):
        raise HypothesisFailed("coalgebra-map", "iota_g is not comultiplicative")
    okq, _ = is_quasi_iso_through(iota_tilde, N - 1)
    if not okq:
        raise HypothesisFailed("iota-tilde-quasi-iso")
    theta = truncated_dual_np(g, C2, C, N, OmegaC2, OmegaC, kernel)

    # strict square: ι_{ι_g} ∘ ι̃ = ∂_g (the half that does hold on the
    # simplicial side); here ι̃: ΩC -> C'\\(C\\C')
    K = kernel_coalgebra
    OmegaK_needed = iota_tilde.target
    kernel2 = ctx.get("kernel2")
    if kernel2 is None:
        OmegaC2_b = OmegaC2
        kernel2 = borel_kernel(kernel.iota, K, C2, N, OmegaC2_b)
    right_ok = all(
        kernel2.iota.compose(iota_tilde).mat(n) == kernel.del_map.mat(n)
        for n in range(N + 1)
    )
    if not right_ok:
        raise HypothesisFailed("iota-square", "ι_{ι_g} ∘ ι̃ ≠ ∂_g")

    # B1 bridge: θ(g) -> W_L(Ωg) with components (id, id, u⊗1, u)
    og = cobar_map(g, OmegaC2, OmegaC)
    BarOmegaC2 = ctx.get("BarOmegaC2") or bar(OmegaC2, N)
    q = borel_quotient(og, OmegaC2, OmegaC, N, BarOmegaC2)
    wl = left_np_window(og, OmegaC2, OmegaC, N, BarOmegaC2, q)
    u = unit_map(C2, N, OmegaC2, BarOmegaC2)
    gamma = ChainMap(theta.N, wl.N)
    for name, ((dc, c2), (dw, w)) in kernel.bundle.pairs.items():
        for b, v in u.apply(dc, c2).items():
            gamma.set_entry(dc + dw, name, tensor_name(b, w), v)
    arrow1 = ExtendedBundleMorphism(
        theta, wl,
        ChainMap.identity(OmegaC2.complex),
        ChainMap.identity(OmegaC.complex),
        gamma, u, label="unit-ladder",
    )
    cert = NormalPairCertificate(
        f_label=f"Cobar(iota_g): partial", g_label=f"g:{C2.name}->{C.name}",
        theta=theta, tau=wl,  # partial: ends at the shifted window
        arrows=[("fwd", arrow1)],
        notes=["partial dual certificate: the remaining rigid arrow is "
               "obstructed strictly (dual of the normal-side ledger entry)"],
    )
    return cert


# ---------------------------------------------------------------------
# Trivial extensions.
# ---------------------------------------------------------------------

def permutation_chain_iso(X: ChainComplex, Y: ChainComplex, rename):
    """Basis bijection check: rename: (n, name) -> Y-name must be a
    degreewise bijection commuting with the differentials on the nose.
    Returns (ok, failure)."""
    phi = ChainMap(X, Y)
    for n in range(min(X.truncation, Y.truncation) + 1):
        if X.basis.dim(n) != Y.basis.dim(n):
            return False, {"reason": "dimension", "degree": n}
        seen = set()
        for name in X.basis.names(n):
            target = rename(n, name)
            if target is None or target in seen:
                return False, {"reason": "not-bijective", "degree": n, "name": name}
            seen.add(target)
            phi.set_entry(n, name, target, 1)
    ok, deg = phi.is_chain_map()
    if not ok:
        return False, {"reason": "differential-mismatch", "degree": deg}
    return True, None


def trivial_extension_check(A: ChainAlgebra, B: ChainAlgebra,
                            C: ChainCoalgebra, D: ChainCoalgebra, N: int):
    """Machine-checkable content of the trivial-extension statements.

    Normal side (A⊗η: A -> A⊗B): the Borel quotient (A⊗B)//A collapses to
    EA⊗B by an exact basis bijection, its homology is that of B (the middle
    weak equivalence), and the word-interleaving comparison map
    Bar A ⊗ Bar B -> Bar(A⊗B) is a chain quasi-isomorphism.  Conormal side
    (ε⊗D: C⊗D -> D) dually with D\\(C⊗D) ≅ C⊗PD and
    Cobar(C⊗D) -> Cobar C ⊗ Cobar D.  Returns (ok, report); HypothesisFailed
    when a collapse bijection cannot be built.
    """
    from .barcobar import milgram_bar_map, milgram_cobar_map
    from .complexes import homology, tensor_complex
    from .hopf import tensor_algebra_product, tensor_coalgebra_product

    report = {}

    # --- normal side -------------------------------------------------
    AB = tensor_algebra_product(A, B, through=N + 1)
    f = ChainMap(A.complex, AB.complex)
    for n in range(min(A.truncation, N + 1) + 1):
        for a in A.basis(n):
            f.set_entry(n, a, tensor_name(a, B.unit), 1)
    BarA = bar(A, N + 1)
    q = borel_quotient(f, A, AB, N, BarA)
    zetaA = twisted_bundle(BarA, A, couniversal_cochain(BarA, A), N)
    EAB = tensor_complex(zetaA.total, B.complex, N)

    ab_pairs = {}
    for n in range(AB.truncation + 1):
        for p in range(n + 1):
            for a in A.basis(p):
                for b in B.basis(n - p):
                    ab_pairs[tensor_name(a, b)] = ((p, a), (n - p, b))

    def rename_quotient(n, name):
        (dw, w), (dab, ab) = q.bundle.pairs[name]
        (da, a), (db, b) = ab_pairs[ab]
        return tensor_name(tensor_name(w, a), b)

    ok_bij, fail = permutation_chain_iso(q.bundle.total, EAB, rename_quotient)
    if not ok_bij:
        raise HypothesisFailed("quotient-collapse", fail)
    report["quotient-collapse-bijection"] = True
    report["quotient-middle-equivalence"] = (
        homology(q.bundle.total, N - 1) == homology(B.complex, N - 1)
    )

    BarB = bar(B, N + 1)
    BarAB = bar(AB, N)
    TB = tensor_complex(BarA.complex, BarB.complex, N)
    nabla = milgram_bar_map(A, B, N, BarA, BarB, BarAB, TB)
    okc, _ = nabla.is_chain_map()
    report["milgram-bar-chain-map"] = okc
    okq, _ = is_quasi_iso_through(nabla, N - 1, check_chain_map=False)
    report["milgram-bar-quasi-iso"] = okq
    report["bar-rank-hypothesis"] = homology(TB, N - 1) == homology(BarAB.complex, N - 1)

    # --- conormal side -----------------------------------------------
    CD = tensor_coalgebra_product(C, D, through=N + 1)
    cd_pairs = {}
    for n in range(CD.truncation + 1):
        for p in range(n + 1):
            for c in C.basis(p):
                for d in D.basis(n - p):
                    cd_pairs[tensor_name(c, d)] = ((p, c), (n - p, d))
    g = ChainMap(CD.complex, D.complex)
    for name, ((dc, c), (dd, d)) in cd_pairs.items():
        if dc == 0 and dc + dd <= CD.truncation:
            g.set_entry(dd, name, d, 1)
    OmegaD = cobar(D, N)
    k2 = borel_kernel(g, CD, D, N, OmegaD)
    xiD = twisted_bundle(D, OmegaD, universal_cochain(D, OmegaD), N)
    CPD = tensor_complex(C.complex, xiD.total, N)

    def rename_kernel(n, name):
        (dcd, cd), (dw, w) = k2.bundle.pairs[name]
        (dc, c), (dd, d) = cd_pairs[cd]
        return tensor_name(c, tensor_name(d, w))

    ok_bij2, fail2 = permutation_chain_iso(k2.bundle.total, CPD, rename_kernel)
    if not ok_bij2:
        raise HypothesisFailed("kernel-collapse", fail2)
    report["kernel-collapse-bijection"] = True
    report["kernel-middle-equivalence"] = (
        homology(k2.bundle.total, N - 1) == homology(C.complex, N - 1)
    )

    OmegaC = cobar(C, N)
    OmegaCD = cobar(CD, N)
    TO = tensor_complex(OmegaC.complex, OmegaD.complex, N)
    qmap = milgram_cobar_map(C, D, N, OmegaCD, OmegaC, OmegaD, TO)
    okc2, _ = qmap.is_chain_map()
    report["milgram-cobar-chain-map"] = okc2
    okq2, _ = is_quasi_iso_through(qmap, N - 1, check_chain_map=False)
    report["milgram-cobar-quasi-iso"] = okq2
    report["cobar-rank-hypothesis"] = homology(TO, N - 1) == homology(OmegaCD.complex, N - 1)

    ok = all(v is True for v in report.values())
    return ok, report
