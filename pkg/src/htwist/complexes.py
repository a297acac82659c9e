"""Chain complexes of finitely generated free modules, chain maps, and the
Smith-normal-form homology / quasi-isomorphism oracle.

A complex carries an explicit truncation degree N: basis and differential
data exist for degrees 0..N, and homology is reported only through N-1 so
that boundaries coming from degree N are always included.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rings import Ring, ZZ, QQ
from .sparse import (
    SparseMatrix,
    invariant_factors,
    is_surjective_onto_cokernel_zero,
    kernel_basis,
    rank,
    solve,
)


class TruncationTooLow(Exception):
    pass


class NotAChainMap(Exception):
    pass


class RingMismatch(Exception):
    pass


class NegativeDegree(Exception):
    pass


class GradedBasis:
    """Ordered named basis elements per degree, 0..truncation."""

    def __init__(self, truncation: int, by_degree: dict[int, list[str]] | None = None):
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        self.truncation = truncation
        self.by_degree: dict[int, list[str]] = {}
        self._index: dict[int, dict[str, int]] = {}
        if by_degree:
            for n, names in by_degree.items():
                for name in names:
                    self.add(n, name)

    def add(self, degree: int, name: str):
        if not (0 <= degree <= self.truncation):
            raise ValueError(f"degree {degree} outside 0..{self.truncation}")
        names = self.by_degree.setdefault(degree, [])
        idx = self._index.setdefault(degree, {})
        if name in idx:
            raise ValueError(f"duplicate basis name {name!r} in degree {degree}")
        idx[name] = len(names)
        names.append(name)

    def names(self, degree: int) -> list[str]:
        return self.by_degree.get(degree, [])

    def dim(self, degree: int) -> int:
        return len(self.by_degree.get(degree, ()))

    def index(self, degree: int, name: str) -> int:
        return self._index[degree][name]

    def degrees(self):
        return sorted(self.by_degree)

    def total_dim(self) -> int:
        return sum(len(v) for v in self.by_degree.values())


@dataclass
class HomologySummary:
    """Per-degree free rank plus torsion coefficients (empty over a field)."""

    by_degree: dict[int, tuple[int, list[int]]] = field(default_factory=dict)

    def rank(self, n: int) -> int:
        return self.by_degree.get(n, (0, []))[0]

    def torsion(self, n: int) -> list[int]:
        return self.by_degree.get(n, (0, []))[1]

    def __eq__(self, other):
        degs = set(self.by_degree) | set(other.by_degree)
        return all(
            self.by_degree.get(n, (0, [])) == other.by_degree.get(n, (0, []))
            for n in degs
        )

    def pretty(self) -> str:
        parts = []
        for n in sorted(self.by_degree):
            r, tors = self.by_degree[n]
            terms = []
            if r:
                terms.append(f"free^{r}" if r > 1 else "free")
            terms += [f"Z/{t}" for t in tors]
            parts.append(f"H_{n} = " + (" + ".join(terms) if terms else "0"))
        return "; ".join(parts)


class ChainComplex:
    """Nonnegatively graded complex, differential of degree -1, truncated at N."""

    def __init__(self, ring: Ring, basis: GradedBasis, diff: dict[int, SparseMatrix] | None = None):
        self.ring = ring
        self.basis = basis
        self.diff: dict[int, SparseMatrix] = {}
        if diff:
            for n, m in diff.items():
                self.diff[n] = m

    @property
    def truncation(self) -> int:
        return self.basis.truncation

    def dmat(self, n: int) -> SparseMatrix:
        """Differential C_n -> C_{n-1} as a matrix (zero when absent)."""
        if n in self.diff:
            return self.diff[n]
        rows = self.basis.dim(n - 1) if n >= 1 else 0
        return SparseMatrix(self.ring, rows, self.basis.dim(n))

    def set_d_entry(self, src_degree: int, src: str, dst: str, coeff):
        """Add coeff * dst to d(src)."""
        n = src_degree
        if n not in self.diff:
            self.diff[n] = SparseMatrix(self.ring, self.basis.dim(n - 1), self.basis.dim(n))
        i = self.basis.index(n - 1, dst)
        j = self.basis.index(n, src)
        self.diff[n].add_to(i, j, self.ring.of(coeff))

    def d_of(self, degree: int, name: str) -> dict[str, object]:
        """d of a basis element as {name_in_degree-1: coeff}."""
        m = self.dmat(degree)
        j = self.basis.index(degree, name)
        out = {}
        for (i, jj), v in m.entries.items():
            if jj == j:
                out[self.basis.names(degree - 1)[i]] = v
        return out

    def element_column(self, degree: int, combo: dict[str, object]) -> SparseMatrix:
        col = SparseMatrix(self.ring, self.basis.dim(degree), 1)
        for name, c in combo.items():
            col.add_to(self.basis.index(degree, name), 0, self.ring.of(c))
        return col


def verify_differential(X: ChainComplex):
    """Check d∘d = 0 below the truncation; returns (ok, witness)."""
    for n in range(2, X.truncation + 1):
        prod = X.dmat(n - 1) @ X.dmat(n)
        if not prod.is_zero():
            (i, j2), _ = next(iter(sorted(prod.entries.items())))
            return False, {
                "degree": n,
                "element": X.basis.names(n)[j2],
                "hits": X.basis.names(n - 2)[i],
            }
    return True, None


def homology(X: ChainComplex, through: int) -> HomologySummary:
    """H_n = ker d_n / im d_{n+1} for n <= through, via SNF over Z."""
    if through >= X.truncation and not (X.truncation == 0 and through == 0):
        raise TruncationTooLow(
            f"homology through {through} needs differentials up to degree "
            f"{through + 1}, but truncation is {X.truncation}"
        )
    summary = HomologySummary()
    for n in range(through + 1):
        dn = X.dmat(n)
        dn1 = X.dmat(n + 1)
        if X.ring.is_field:
            h = X.basis.dim(n) - rank(dn) - rank(dn1)
            summary.by_degree[n] = (h, [])
        else:
            K = kernel_basis(dn)
            W = solve(K, dn1)
            assert W is not None, "boundaries must lie in the saturated kernel"
            facs = invariant_factors(W)
            torsion = [f for f in facs if f > 1]
            summary.by_degree[n] = (K.ncols - len(facs), torsion)
    return summary


class ChainMap:
    """Degree-0 map of complexes given by per-degree matrices."""

    def __init__(self, source: ChainComplex, target: ChainComplex,
                 components: dict[int, SparseMatrix] | None = None):
        if source.ring != target.ring:
            raise RingMismatch(f"{source.ring} vs {target.ring}")
        self.source = source
        self.target = target
        self.components: dict[int, SparseMatrix] = dict(components or {})

    def mat(self, n: int) -> SparseMatrix:
        if n in self.components:
            return self.components[n]
        return SparseMatrix(self.source.ring, self.target.basis.dim(n), self.source.basis.dim(n))

    def set_entry(self, degree: int, src: str, dst: str, coeff):
        if degree not in self.components:
            self.components[degree] = SparseMatrix(
                self.source.ring, self.target.basis.dim(degree), self.source.basis.dim(degree)
            )
        i = self.target.basis.index(degree, dst)
        j = self.source.basis.index(degree, src)
        self.components[degree].add_to(i, j, self.source.ring.of(coeff))

    def apply(self, degree: int, name: str) -> dict[str, object]:
        m = self.mat(degree)
        j = self.source.basis.index(degree, name)
        out = {}
        for (i, jj), v in m.entries.items():
            if jj == j:
                out[self.target.basis.names(degree)[i]] = v
        return out

    def is_chain_map(self, through: int | None = None):
        hi = min(self.source.truncation, self.target.truncation)
        if through is not None:
            hi = min(hi, through + 1)
        for n in range(1, hi + 1):
            lhs = self.mat(n - 1) @ self.source.dmat(n)
            rhs = self.target.dmat(n) @ self.mat(n)
            if lhs != rhs:
                return False, n
        return True, None

    def compose(self, other: "ChainMap") -> "ChainMap":
        """self ∘ other."""
        assert other.target is self.source or other.target.basis is self.source.basis
        hi = min(self.source.truncation, other.source.truncation)
        comps = {n: self.mat(n) @ other.mat(n) for n in range(hi + 1)}
        return ChainMap(other.source, self.target, comps)

    @staticmethod
    def identity(X: ChainComplex) -> "ChainMap":
        comps = {n: SparseMatrix.identity(X.ring, X.basis.dim(n)) for n in X.basis.degrees()}
        return ChainMap(X, X, comps)


def is_quasi_iso_through(f: ChainMap, through: int, check_chain_map: bool = True):
    """Induced iso on H_n for n <= through?  Returns (ok, per-degree report).

    Over Z both free rank and the full torsion list are compared; over a
    field ranks only.  Isomorphy is certified as: equal invariants plus
    surjectivity of the induced map (f.g. modules are Hopfian).
    """
    if check_chain_map:
        ok, bad = f.is_chain_map(through)
        if not ok:
            raise NotAChainMap(f"does not commute with d at degree {bad}")
    X, Y = f.source, f.target
    report = {}
    all_ok = True
    for n in range(through + 1):
        hx = homology_in_degree(X, n)
        hy = homology_in_degree(Y, n)
        same = hx == hy
        surj = _induced_surjective(f, n)
        report[n] = {"source": hx, "target": hy, "match": same, "surjective": surj}
        all_ok = all_ok and same and surj
    return all_ok, report


def homology_in_degree(X: ChainComplex, n: int):
    if n + 1 > X.truncation:
        raise TruncationTooLow(f"degree {n} needs d_{n + 1}")
    dn, dn1 = X.dmat(n), X.dmat(n + 1)
    if X.ring.is_field:
        return (X.basis.dim(n) - rank(dn) - rank(dn1), [])
    K = kernel_basis(dn)
    W = solve(K, dn1)
    facs = invariant_factors(W)
    return (K.ncols - len(facs), [t for t in facs if t > 1])


def _induced_surjective(f: ChainMap, n: int) -> bool:
    X, Y = f.source, f.target
    KX = kernel_basis(X.dmat(n))
    KY = kernel_basis(Y.dmat(n))
    fK = f.mat(n) @ KX
    W = solve(KY, fK)
    if W is None:  # cycles not carried to cycles: not even well defined
        return False
    RY = solve(KY, Y.dmat(n + 1))
    assert RY is not None
    if KY.ncols == 0:
        return True
    return is_surjective_onto_cokernel_zero(SparseMatrix.hstack([W, RY]))


def induced_zero_on_reduced_homology(f: ChainMap, through: int) -> bool:
    """True iff H_n(f) = 0 for 1 <= n <= through and the sources are
    connected in degree 0 (so reduced H_0 vanishes)."""
    X, Y = f.source, f.target
    r0, t0 = homology_in_degree(X, 0)
    if r0 > 1 or t0:
        return False
    for n in range(1, through + 1):
        KX = kernel_basis(X.dmat(n))
        fK = f.mat(n) @ KX
        if fK.is_zero():
            continue
        if solve(Y.dmat(n + 1), fK) is None:
            return False
    return True


# ---------------------------------------------------------------------
# Constructions on complexes.
# ---------------------------------------------------------------------

def tensor_name(a: str, b: str) -> str:
    return f"{a}⊗{b}"


def tensor_complex(X: ChainComplex, Y: ChainComplex, through: int | None = None) -> ChainComplex:
    """X ⊗ Y with the Koszul differential d(x⊗y) = dx⊗y + (-1)^|x| x⊗dy."""
    if X.ring != Y.ring:
        raise RingMismatch(f"{X.ring} vs {Y.ring}")
    N = X.truncation + Y.truncation
    if through is not None:
        N = min(N, through)
    basis = GradedBasis(N)
    for n in range(N + 1):
        for p in range(n + 1):
            for a in X.basis.names(p):
                for b in Y.basis.names(n - p):
                    basis.add(n, tensor_name(a, b))
    Z = ChainComplex(X.ring, basis)
    sign = lambda p: X.ring.of(-1) if p % 2 else X.ring.one
    for n in range(1, N + 1):
        for p in range(n + 1):
            q = n - p
            for a in X.basis.names(p):
                for b in Y.basis.names(q):
                    src = tensor_name(a, b)
                    for a2, c in X.d_of(p, a).items():
                        Z.set_d_entry(n, src, tensor_name(a2, b), c)
                    for b2, c in Y.d_of(q, b).items():
                        Z.set_d_entry(n, src, tensor_name(a, b2), X.ring.mul(sign(p), c))
    return Z


def ground_complex(ring: Ring, truncation: int = 0, name: str = "1") -> ChainComplex:
    basis = GradedBasis(truncation)
    basis.add(0, name)
    return ChainComplex(ring, basis)


def suspend(X: ChainComplex, shift: int) -> ChainComplex:
    """Shift degrees by ±1, marking names; d(sx) = -s(dx)."""
    if shift not in (1, -1):
        raise ValueError("shift must be +1 or -1")
    mark = "s" if shift == 1 else "s-1"
    if shift == -1 and X.basis.dim(0) > 0:
        raise NegativeDegree("cannot desuspend a complex with degree-0 basis")
    basis = GradedBasis(X.truncation + shift if shift == 1 else X.truncation - 1)
    for n in X.basis.degrees():
        for a in X.basis.names(n):
            basis.add(n + shift, f"{mark}({a})")
    Z = ChainComplex(X.ring, basis)
    for n in X.basis.degrees():
        for a in X.basis.names(n):
            for a2, c in X.d_of(n, a).items():
                Z.set_d_entry(n + shift, f"{mark}({a})", f"{mark}({a2})", X.ring.neg(c))
    return Z


def cone_on_identity(X: ChainComplex) -> ChainComplex:
    """Mapping cone of id_X: contractible; handy as an acyclic fixture."""
    N = X.truncation + 1
    basis = GradedBasis(N)
    for n in X.basis.degrees():
        for a in X.basis.names(n):
            basis.add(n, f"c0({a})")
            if n + 1 <= N:
                basis.add(n + 1, f"c1({a})")
    Z = ChainComplex(X.ring, basis)
    for n in X.basis.degrees():
        for a in X.basis.names(n):
            for a2, c in X.d_of(n, a).items():
                Z.set_d_entry(n, f"c0({a})", f"c0({a2})", c)
                Z.set_d_entry(n + 1, f"c1({a})", f"c1({a2})", X.ring.neg(c))
            Z.set_d_entry(n + 1, f"c1({a})", f"c0({a})", 1)
    return Z


def direct_sum(X: ChainComplex, Y: ChainComplex) -> ChainComplex:
    if X.ring != Y.ring:
        raise RingMismatch(f"{X.ring} vs {Y.ring}")
    N = min(X.truncation, Y.truncation)
    basis = GradedBasis(N)
    for n in range(N + 1):
        for a in X.basis.names(n):
            basis.add(n, f"L({a})")
        for b in Y.basis.names(n):
            basis.add(n, f"R({b})")
    Z = ChainComplex(X.ring, basis)
    for n in range(1, N + 1):
        for a in X.basis.names(n):
            for a2, c in X.d_of(n, a).items():
                Z.set_d_entry(n, f"L({a})", f"L({a2})", c)
        for b in Y.basis.names(n):
            for b2, c in Y.d_of(n, b).items():
                Z.set_d_entry(n, f"R({b})", f"R({b2})", c)
    return Z


def relabel(X: ChainComplex, renamer) -> ChainComplex:
    """Same complex with renamed basis elements (basis bijection)."""
    basis = GradedBasis(X.truncation)
    for n in X.basis.degrees():
        for a in X.basis.names(n):
            basis.add(n, renamer(n, a))
    Z = ChainComplex(X.ring, basis)
    for n, m in X.diff.items():
        Z.diff[n] = m.copy()
    return Z
