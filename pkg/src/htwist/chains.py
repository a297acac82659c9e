"""Normalized chains of finite simplicial sets with the Alexander-Whitney
coalgebra structure, and the Pontryagin chain algebra of a levelwise-finite
simplicial group via Eilenberg-Zilber shuffles.

The AW and EZ formulas are the classical ones; their axioms (coassociativity,
counits, associativity, the derivation property) are machine-verified on the
fixtures rather than trusted.  Chains of symbolic (free-group) levels are
refused: the cited chain-level comparison with the cobar construction is out
of scope here.
"""

from __future__ import annotations

from itertools import combinations

from .complexes import ChainComplex, GradedBasis
from .hopf import ChainAlgebra, ChainCoalgebra
from .rings import Ring
from .simplicial import NotFinite, SimplicialGroup, SimplicialSet


def _nondegenerate_levels(X: SimplicialSet, N: int):
    """Nondegenerate elements per level (complement of degeneracy images)."""
    nd: dict[int, list] = {}
    for n in range(N + 1):
        elems = X.elements(n)
        if elems is None:
            raise NotFinite(f"{X.name} level {n}")
        if n == 0:
            nd[n] = list(elems)
            continue
        below = X.elements(n - 1)
        degenerate = set()
        for y in below:
            for i in range(n):
                degenerate.add(X.degeneracy(n - 1, i, y))
        nd[n] = [x for x in elems if x not in degenerate]
    return nd


def _iterated_front(X: SimplicialSet, n: int, x, p: int):
    """Front p-face: d_{p+1} d_{p+2} ... d_n applied to x (last faces)."""
    out = x
    for k in range(n, p, -1):
        out = X.face(k, k, out)
    return out


def _iterated_back(X: SimplicialSet, n: int, x, q: int):
    """Back q-face: d_0^{n-q} applied to x."""
    out = x
    for k in range(n, q, -1):
        out = X.face(k, 0, out)
    return out


def normalized_chains(X: SimplicialSet, ring: Ring, N: int) -> ChainCoalgebra:
    """C_*X with the Alexander-Whitney diagonal.

    The result always carries a valid complex.  It is a 1-connected
    coaugmented coalgebra exactly when X is 1-reduced; the flag
    ``one_connected`` records this, and downstream coalgebra operations
    refuse inputs where it is False.
    """
    nd = _nondegenerate_levels(X, N)
    names = {x: f"<{x}>" for lvl in nd.values() for x in lvl}
    basis = GradedBasis(N)
    for n in range(N + 1):
        for x in nd[n]:
            basis.add(n, names[x])
    Z = ChainComplex(ring, basis)
    ndsets = {n: set(nd[n]) for n in nd}
    for n in range(1, N + 1):
        for x in nd[n]:
            for i in range(n + 1):
                y = X.face(n, i, x)
                if y in ndsets[n - 1]:
                    Z.set_d_entry(n, names[x], names[y], (-1) ** i)

    reduced = X.is_reduced()
    coaug = names[nd[0][0]] if reduced else names[nd[0][0]]
    C = ChainCoalgebra(Z, coaug, name=f"C({X.name})")
    C.one_connected = reduced and not nd[1]
    for n in range(1, N + 1):
        for x in nd[n]:
            terms = []
            for p in range(1, n):
                f = _iterated_front(X, n, x, p)
                b = _iterated_back(X, n, x, n - p)
                if f in ndsets[p] and b in ndsets[n - p]:
                    terms.append(((p, names[f]), (n - p, names[b]), 1))
            C.set_coproduct_reduced(n, names[x], terms)
    C.simplex_names = names
    return C


def aw_full_coproduct(C: ChainCoalgebra, X: SimplicialSet, n: int, x_name: str):
    """Full AW diagonal including the degree-0 ends with the honest vertex
    classes (used by the axiom checks for non-reduced X)."""
    return C.coproduct(n, x_name)


def verify_aw_axioms(X: SimplicialSet, ring: Ring, N: int):
    """Coassociativity and counit of the AW diagonal, exhaustively; valid
    for any finite X (reduced or not), using the honest total counit."""
    nd = _nondegenerate_levels(X, N)
    names = {x: f"<{x}>" for lvl in nd.values() for x in lvl}
    ndsets = {n: set(nd[n]) for n in nd}

    def diagonal(n, x):
        out = []
        for p in range(0, n + 1):
            f = _iterated_front(X, n, x, p)
            b = _iterated_back(X, n, x, n - p)
            if f in ndsets[p] and b in ndsets[n - p]:
                out.append(((p, f), (n - p, b), 1))
        return out

    for n in range(N + 1):
        for x in nd[n]:
            terms = diagonal(n, x)
            # counit: (ε⊗1)Δ = id = (1⊗ε)Δ with ε = 1 on every vertex
            left = {}
            right = {}
            for (p, f), (q, b), c in terms:
                if p == 0:
                    left[(q, b)] = left.get((q, b), 0) + c
                if q == 0:
                    right[(p, f)] = right.get((p, f), 0) + c
            if left != {(n, x): 1} or right != {(n, x): 1}:
                return False, {"axiom": "counit", "element": x}
            lhs = {}
            rhs = {}
            for (p, f), (q, b), c in terms:
                for (p1, f1), (p2, f2), c2 in diagonal(p, f):
                    key = ((p1, f1), (p2, f2), (q, b))
                    lhs[key] = lhs.get(key, 0) + c * c2
                for (q1, b1), (q2, b2), c2 in diagonal(q, b):
                    key = ((p, f), (q1, b1), (q2, b2))
                    rhs[key] = rhs.get(key, 0) + c * c2
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                return False, {"axiom": "coassociativity", "element": x}
    return True, None


def chains_map(g, X: SimplicialSet, CX: ChainCoalgebra, Y: SimplicialSet, CY: ChainCoalgebra):
    """C_*(g) for a simplicial map g given as a callable (n, x) -> y;
    degenerate images die."""
    from .complexes import ChainMap

    f = ChainMap(CX.complex, CY.complex)
    inv_x = {v: k for k, v in CX.simplex_names.items()}
    for n in range(CX.truncation + 1):
        for name in CX.basis(n):
            x = inv_x[name]
            y = g(n, x)
            yname = CY.simplex_names.get(y)
            if yname is not None and yname in CY.complex.basis._index.get(n, {}):
                f.set_entry(n, name, yname, 1)
    return f


# ---------------------------------------------------------------------
# Pontryagin product via Eilenberg-Zilber shuffles.
# ---------------------------------------------------------------------

def _shuffles(p: int, q: int):
    """(p,q)-shuffles as (mu, nu, sign): mu ∪ nu = {0..p+q-1}, |mu| = p."""
    out = []
    universe = list(range(p + q))
    for mu in combinations(universe, p):
        nu = tuple(k for k in universe if k not in mu)
        sign = (-1) ** sum(m - i for i, m in enumerate(mu))
        out.append((mu, nu, sign))
    return out


def pontryagin_product_table(G: SimplicialGroup, ring: Ring, C: ChainCoalgebra, N: int):
    """Structure constants of C_*(mult) ∘ EZ on nondegenerate simplices.

    EZ(x⊗y) = Σ ± (s_ν x)·(s_μ y) over (p,q)-shuffles, multiplied levelwise
    in G and normalized."""
    inv = {v: k for k, v in C.simplex_names.items()}
    nd_names = {n: set(C.basis(n)) for n in range(N + 1)}
    table: dict = {}
    for p in range(N + 1):
        for xn in C.basis(p):
            for q in range(N + 1 - p):
                for yn in C.basis(q):
                    x, y = inv[xn], inv[yn]
                    combo: dict[str, object] = {}
                    for mu, nu, sign in _shuffles(p, q):
                        # degeneracy words applied ascending (lowest level first)
                        sx = x
                        lvl = p
                        for j in sorted(nu):
                            sx = G.degeneracy(lvl, j, sx)
                            lvl += 1
                        sy = y
                        lvl = q
                        for j in sorted(mu):
                            sy = G.degeneracy(lvl, j, sy)
                            lvl += 1
                        z = G.mult(p + q, sx, sy)
                        zn = C.simplex_names.get(z)
                        if zn is not None and zn in nd_names.get(p + q, ()):
                            combo[zn] = combo.get(zn, ring.zero) + ring.of(sign)
                    combo = {k: v for k, v in combo.items() if not ring.is_zero(v)}
                    if combo and not (p == 0 and x == G.neutral(0)) \
                       and not (q == 0 and y == G.neutral(0)):
                        table[((p, xn), (q, yn))] = combo
    return table


def chains_of_simplicial_group(G: SimplicialGroup, ring: Ring, N: int):
    """(C_*G, product table, report): the Pontryagin chain algebra.

    When G is reduced (single vertex e) the result wraps into a connected
    ChainAlgebra; otherwise the connectivity failure is reported and the
    raw table returned for the direct axiom checks.
    """
    C = normalized_chains(G, ring, N)
    table = pontryagin_product_table(G, ring, C, N)
    reduced = len(G.elements(0)) == 1
    report = {"connected": reduced}
    algebra = None
    if reduced:
        unit = C.simplex_names[G.neutral(0)]
        algebra = ChainAlgebra(C.complex, unit, name=f"C({G.name})")
        for key, combo in table.items():
            (p, xn), (q, yn) = key
            algebra.set_product(p, xn, q, yn, combo)
    return C, table, algebra, report


def verify_pontryagin_axioms(G: SimplicialGroup, ring: Ring, N: int):
    """Unit, associativity and the Leibniz rule for the shuffle product,
    exhaustively through degree N, without assuming connectivity."""
    C, table, _, report = chains_of_simplicial_group(G, ring, N)
    unit = C.simplex_names[G.neutral(0)]
    R = ring

    def prod(p, xn, q, yn):
        if p == 0 and xn == unit:
            return {yn: R.one}
        if q == 0 and yn == unit:
            return {xn: R.one}
        return table.get(((p, xn), (q, yn)), {})

    def prod_combo(p, cx, q, cy):
        out: dict[str, object] = {}
        for xn, vx in cx.items():
            for yn, vy in cy.items():
                for zn, vz in prod(p, xn, q, yn).items():
                    out[zn] = R.add(out.get(zn, R.zero), R.mul(R.mul(vx, vy), vz))
        return {k: v for k, v in out.items() if not R.is_zero(v)}

    problems = []
    X = C.complex
    for p in range(N + 1):
        for q in range(N + 1 - p):
            for r in range(N + 1 - p - q):
                for a in C.basis(p):
                    for b in C.basis(q):
                        for c in C.basis(r):
                            one = prod_combo(p + q, prod(p, a, q, b), r, {c: R.one})
                            two = prod_combo(p, {a: R.one}, q + r, prod(q, b, r, c))
                            if one != two:
                                problems.append({"axiom": "associativity", "triple": (a, b, c)})
    for p in range(N + 1):
        for q in range(N + 1 - p):
            if p + q == 0:
                continue
            for a in C.basis(p):
                for b in C.basis(q):
                    lhs: dict[str, object] = {}
                    for zn, v in prod(p, a, q, b).items():
                        for z2, w in X.d_of(p + q, zn).items():
                            lhs[z2] = R.add(lhs.get(z2, R.zero), R.mul(v, w))
                    lhs = {k: v for k, v in lhs.items() if not R.is_zero(v)}
                    rhs: dict[str, object] = {}
                    for r2, v in prod_combo(p - 1, X.d_of(p, a), q, {b: R.one}).items():
                        rhs[r2] = R.add(rhs.get(r2, R.zero), v)
                    sgn = R.of(-1) if p % 2 else R.one
                    for r2, v in prod_combo(p, {a: R.one}, q - 1, X.d_of(q, b)).items():
                        rhs[r2] = R.add(rhs.get(r2, R.zero), R.mul(sgn, v))
                    rhs = {k: v for k, v in rhs.items() if not R.is_zero(v)}
                    if lhs != rhs:
                        problems.append({"axiom": "Leibniz", "pair": (a, b)})
    report["problems"] = problems
    return (not problems), report


def acyclicity_of_universal_bundle(G: SimplicialGroup, ring: Ring, N: int):
    """H(C_*(W̄G ×_ν G)) through N-1: the contractibility certificate."""
    from .complexes import homology
    from .simplicial import universal_bundle

    tcp, W, nu = universal_bundle(G, N)
    C = normalized_chains(tcp, ring, N)
    H = homology(C.complex, N - 1)
    acyclic = H.by_degree.get(0) == (1, []) and all(
        H.by_degree.get(n) == (0, []) for n in range(1, N)
    )
    return acyclic, H
