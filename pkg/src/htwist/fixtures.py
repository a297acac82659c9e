"""Standard small algebras and coalgebras used across the test corpus and
the CLI examples.  Every function builds a fresh object."""

from __future__ import annotations

from .complexes import ChainComplex, GradedBasis
from .hopf import ChainAlgebra, ChainCoalgebra, tensor_algebra_product, tensor_coalgebra_product
from .rings import QQ, Ring


def exterior(ring: Ring = QQ, N: int = 8, gen: str = "x", deg: int = 1) -> ChainAlgebra:
    """Exterior algebra on one generator of odd degree; x^2 = 0, d = 0."""
    assert deg % 2 == 1
    basis = GradedBasis(N, {0: ["1"], deg: [gen]})
    A = ChainAlgebra(ChainComplex(ring, basis), "1", name=f"Λ({gen}{deg})")
    A.set_product(deg, gen, deg, gen, {})
    return A


def truncated_polynomial(ring: Ring = QQ, N: int = 8, gen: str = "x") -> ChainAlgebra:
    """k[x]/(x^3) with |x| = 2, d = 0."""
    x2 = f"{gen}^2"
    basis = GradedBasis(N, {0: ["1"], 2: [gen], 4: [x2]})
    A = ChainAlgebra(ChainComplex(ring, basis), "1", name=f"{ring}[{gen}2]/({gen}^3)")
    A.set_product(2, gen, 2, gen, {x2: 1})
    A.set_product(2, gen, 4, x2, {})
    A.set_product(4, x2, 2, gen, {})
    A.set_product(4, x2, 4, x2, {})
    return A


def acyclic_algebra(ring: Ring = QQ, N: int = 8) -> ChainAlgebra:
    """Commutative acyclic algebra E = <y2, z3 : dz = y>, positive products 0."""
    basis = GradedBasis(N, {0: ["1"], 2: ["y"], 3: ["z"]})
    X = ChainComplex(ring, basis)
    X.set_d_entry(3, "z", "y", 1)
    A = ChainAlgebra(X, "1", name="E")
    for (p, a) in ((2, "y"), (3, "z")):
        for (q, b) in ((2, "y"), (3, "z")):
            A.set_product(p, a, q, b, {})
    return A


def noncommutative_algebra(ring: Ring = QQ, N: int = 6) -> ChainAlgebra:
    """Two degree-1 generators with xy != 0 = yx: a noncommutativity probe."""
    basis = GradedBasis(N, {0: ["1"], 1: ["x", "y"], 2: ["xy"]})
    A = ChainAlgebra(ChainComplex(ring, basis), "1", name="NC")
    A.set_product(1, "x", 1, "y", {"xy": 1})
    for (p, a), (q, b) in [
        ((1, "x"), (1, "x")), ((1, "y"), (1, "y")), ((1, "y"), (1, "x")),
        ((1, "x"), (2, "xy")), ((2, "xy"), (1, "x")),
        ((1, "y"), (2, "xy")), ((2, "xy"), (1, "y")),
        ((2, "xy"), (2, "xy")),
    ]:
        A.set_product(p, a, q, b, {})
    return A


def sphere_coalgebra(ring: Ring = QQ, N: int = 8, dim: int = 2) -> ChainCoalgebra:
    """H_*(S^dim): one primitive generator in degree dim >= 2, d = 0."""
    assert dim >= 2
    gen = f"c{dim}"
    basis = GradedBasis(N, {0: ["1"], dim: [gen]})
    C = ChainCoalgebra(ChainComplex(ring, basis), "1", name=f"H(S{dim})")
    C.set_coproduct_reduced(dim, gen, [])
    return C


def dual_truncated_polynomial(ring: Ring = QQ, N: int = 8) -> ChainCoalgebra:
    """Linear dual of k[x2]/(x^3): divided-power pattern Δ̄γ2 = γ1⊗γ1."""
    basis = GradedBasis(N, {0: ["1"], 2: ["g1"], 4: ["g2"]})
    C = ChainCoalgebra(ChainComplex(ring, basis), "1", name="(k[x2]/(x^3))^")
    C.set_coproduct_reduced(2, "g1", [])
    C.set_coproduct_reduced(4, "g2", [((2, "g1"), (2, "g1"), 1)])
    return C


def coacyclic_coalgebra(ring: Ring = QQ, N: int = 8) -> ChainCoalgebra:
    """1-connected coacyclic coalgebra F = <u2, v3 : dv = u>, primitives."""
    basis = GradedBasis(N, {0: ["1"], 2: ["u"], 3: ["v"]})
    X = ChainComplex(ring, basis)
    X.set_d_entry(3, "v", "u", 1)
    C = ChainCoalgebra(X, "1", name="F")
    C.set_coproduct_reduced(2, "u", [])
    C.set_coproduct_reduced(3, "v", [])
    return C


def exterior_pair(ring: Ring = QQ, N: int = 8) -> ChainAlgebra:
    """Λ(x1) ⊗ Λ(y1)."""
    return tensor_algebra_product(exterior(ring, N, "x"), exterior(ring, N, "y"), through=N)


def algebra_corpus(ring: Ring = QQ, N: int = 8):
    """Six standing algebra fixtures (acceptance criterion 1)."""
    return [
        exterior(ring, N, "x"),
        truncated_polynomial(ring, N),
        exterior_pair(ring, N),
        acyclic_algebra(ring, N),
        tensor_algebra_product(exterior(ring, N, "x"), acyclic_algebra(ring, N), through=N),
        noncommutative_algebra(ring, min(N, 6)),
    ]


def coalgebra_corpus(ring: Ring = QQ, N: int = 8):
    """Four standing coalgebra fixtures (acceptance criterion 1)."""
    return [
        sphere_coalgebra(ring, N, 2),
        sphere_coalgebra(ring, N, 3),
        dual_truncated_polynomial(ring, N),
        tensor_coalgebra_product(sphere_coalgebra(ring, N, 2), coacyclic_coalgebra(ring, N), through=N),
    ]


def trivial_algebra(ring: Ring = QQ, N: int = 8) -> ChainAlgebra:
    basis = GradedBasis(N, {0: ["1"]})
    return ChainAlgebra(ChainComplex(ring, basis), "1", name="k")


def trivial_coalgebra(ring: Ring = QQ, N: int = 8) -> ChainCoalgebra:
    basis = GradedBasis(N, {0: ["1"]})
    return ChainCoalgebra(ChainComplex(ring, basis), "1", name="k")


def unit_algebra_map(A: ChainAlgebra, ring: Ring = None):
    """η: k -> A as a ChainMap, together with the trivial algebra."""
    from .complexes import ChainMap

    k = trivial_algebra(A.ring, A.truncation)
    f = ChainMap(k.complex, A.complex)
    f.set_entry(0, "1", A.unit, 1)
    return f, k


def augmentation_algebra_map(A: ChainAlgebra):
    """ε: A -> k as a ChainMap, together with the trivial algebra."""
    from .complexes import ChainMap

    k = trivial_algebra(A.ring, A.truncation)
    f = ChainMap(A.complex, k.complex)
    f.set_entry(0, A.unit, "1", 1)
    return f, k


def acyclic_extension_inclusion(A: ChainAlgebra, N: int):
    """Quasi-isomorphism of algebras A -> A ⊗ E with E acyclic."""
    from .complexes import ChainMap
    from .hopf import tensor_algebra_product

    E = acyclic_algebra(A.ring, N)
    AE = tensor_algebra_product(A, E, through=N)
    f = ChainMap(A.complex, AE.complex)
    for n in range(min(A.truncation, N) + 1):
        for a in A.basis(n):
            f.set_entry(n, a, f"{a}⊗1", 1)
    return f, AE


def coacyclic_collapse(C: ChainCoalgebra, N: int):
    """Quasi-isomorphism of coalgebras C ⊗ F -> C with F coacyclic."""
    from .complexes import ChainMap
    from .hopf import tensor_coalgebra_product

    F = coacyclic_coalgebra(C.ring, N)
    CF = tensor_coalgebra_product(C, F, through=N)
    g = ChainMap(CF.complex, C.complex)
    for n in range(CF.truncation + 1):
        for name in CF.complex.basis.names(n):
            c, fpart = name.split("⊗", 1)
            if fpart == F.coaug:
                g.set_entry(n, name, c, 1)
    return g, CF
