"""The cobar and bar constructions with explicit Koszul-rule differentials,
their adjunction unit/counit, and the shuffle product on the bar construction
of a commutative algebra.

Words are tuples of (degree, name) letters drawn from the positive part of
the underlying (co)algebra.  A bar letter s(a) has marked degree |a|+1, a
cobar letter s-1(c) has marked degree |c|-1.  All signs below are produced
mechanically by the Koszul rule on marked degrees; the d^2 = 0, derivation
and coderivation checks in the test suite pin the convention down.
"""

from __future__ import annotations

from .complexes import ChainComplex, ChainMap, GradedBasis, tensor_name
from .hopf import ChainAlgebra, ChainCoalgebra, Key, NotConnected, NotOneConnected, _sign


class NotCommutative(Exception):
    pass


Word = tuple[Key, ...]  # letters as (underlying degree, underlying name)

EMPTY_NAME = "[]"


def bar_letter_degree(key: Key) -> int:
    return key[0] + 1


def cobar_letter_degree(key: Key) -> int:
    return key[0] - 1


def bar_word_name(word: Word) -> str:
    return EMPTY_NAME if not word else "|".join(f"s({n})" for (_, n) in word)


def cobar_word_name(word: Word) -> str:
    return EMPTY_NAME if not word else "|".join(f"s-1({n})" for (_, n) in word)


def _enumerate_words(letter_pool: list[tuple[Key, int]], N: int) -> dict[int, list[Word]]:
    """All words of total marked degree <= N over the pool, by degree.

    Ordering inside a degree is (length, letter degrees, letter names):
    deterministic matrices everywhere downstream.
    """
    by_degree: dict[int, list[Word]] = {0: [()]}
    frontier: list[tuple[Word, int]] = [((), 0)]
    while frontier:
        new_frontier = []
        for word, deg in frontier:
            for key, ldeg in letter_pool:
                d2 = deg + ldeg
                if d2 <= N:
                    w2 = word + (key,)
                    by_degree.setdefault(d2, []).append(w2)
                    new_frontier.append((w2, d2))
        frontier = new_frontier
    for n in by_degree:
        by_degree[n].sort(key=lambda w: (len(w), tuple(k[0] for k in w), tuple(k[1] for k in w)))
    return by_degree


class WordIndex:
    """Bookkeeping shared by bar and cobar outputs."""

    def __init__(self, words_by_degree: dict[int, list[Word]], namer):
        self.words_by_degree = words_by_degree
        self.name_of: dict[Word, str] = {}
        self.letters_of: dict[str, Word] = {}
        self.degree_of: dict[Word, int] = {}
        for n, words in words_by_degree.items():
            for w in words:
                name = namer(w)
                self.name_of[w] = name
                self.letters_of[name] = w
                self.degree_of[w] = n


# ---------------------------------------------------------------------
# Bar construction.
# ---------------------------------------------------------------------

def bar(A: ChainAlgebra, N: int) -> ChainCoalgebra:
    """Cofree coalgebra on s(A_{>0}) words with the bar differential.

    d(s a1|...|s an) = Σ_j -(-1)^{e_j} (internal d on letter j)
                     + Σ_j (-1)^{e_{j+1}} (merge letters j, j+1),
    where e_j is the total marked degree of the letters before j.
    """
    if not A.is_connected():
        raise NotConnected(f"bar needs a connected algebra, degree 0 = {A.basis(0)}")
    R = A.ring
    pool = []
    for n in range(1, N + 1):
        for a in A.basis(n):
            ldeg = n + 1
            if ldeg <= N:
                pool.append(((n, a), ldeg))
    words = _enumerate_words(pool, N)
    index = WordIndex(words, bar_word_name)

    basis = GradedBasis(N)
    for n in sorted(words):
        for w in words[n]:
            basis.add(n, index.name_of[w])
    X = ChainComplex(R, basis)

    for n in sorted(words):
        if n == 0:
            continue
        for w in words[n]:
            src = index.name_of[w]
            e = 0
            for j, (dj, aj) in enumerate(w):
                sgn_internal = R.neg(_sign(R, e))
                for a2, c in A.complex.d_of(dj, aj).items():
                    if dj - 1 < 1:
                        continue  # augmentation axiom kills the degree-0 part
                    w2 = w[:j] + ((dj - 1, a2),) + w[j + 1:]
                    X.set_d_entry(n, src, index.name_of[w2], R.mul(sgn_internal, c))
                if j + 1 < len(w):
                    dk, ak = w[j + 1]
                    sgn_mult = _sign(R, e + dj + 1)
                    for prod, c in A.product(dj, aj, dk, ak).items():
                        w2 = w[:j] + ((dj + dk, prod),) + w[j + 2:]
                        X.set_d_entry(n, src, index.name_of[w2], R.mul(sgn_mult, c))
                e += dj + 1

    C = ChainCoalgebra(X, EMPTY_NAME, name=f"Bar({A.name})")
    for n in sorted(words):
        if n == 0:
            continue
        for w in words[n]:
            terms = []
            for i in range(1, len(w)):
                left, right = w[:i], w[i:]
                dl = sum(k[0] + 1 for k in left)
                terms.append(((dl, index.name_of[left]), (n - dl, index.name_of[right]), R.one))
            C.set_coproduct_reduced(n, index.name_of[w], terms)

    C.kind = "bar"
    C.source_algebra = A
    C.words = index
    return C


# ---------------------------------------------------------------------
# Cobar construction.
# ---------------------------------------------------------------------

def cobar(C: ChainCoalgebra, N: int) -> ChainAlgebra:
    """Free algebra on s-1(C_{>0}) words with the cobar differential.

    d(s-1 c1|...|s-1 cn) = Σ_j -(-1)^{e_j} (internal d on letter j)
                         + Σ_j (-1)^{e_j} Σ (-1)^{|c'|} (split letter j by Δ̄),
    Δ̄c_j = Σ c'⊗c''.  Product is concatenation (computed, not tabulated).
    """
    if not C.is_one_connected():
        raise NotOneConnected(
            f"cobar needs a 1-connected coalgebra, degrees 0/1 = {C.basis(0)}/{C.basis(1)}"
        )
    R = C.ring
    pool = []
    for n in range(2, C.truncation + 1):
        for c in C.basis(n):
            ldeg = n - 1
            if ldeg <= N:
                pool.append(((n, c), ldeg))
    words = _enumerate_words(pool, N)
    index = WordIndex(words, cobar_word_name)

    basis = GradedBasis(N)
    for n in sorted(words):
        for w in words[n]:
            basis.add(n, index.name_of[w])
    X = ChainComplex(R, basis)

    for n in sorted(words):
        if n == 0:
            continue
        for w in words[n]:
            src = index.name_of[w]
            e = 0
            for j, (dj, cj) in enumerate(w):
                sgn_internal = R.neg(_sign(R, e))
                for c2, coeff in C.complex.d_of(dj, cj).items():
                    if dj - 1 < 2:
                        continue  # 1-connected: no letters from degrees < 2
                    w2 = w[:j] + ((dj - 1, c2),) + w[j + 1:]
                    X.set_d_entry(n, src, index.name_of[w2], R.mul(sgn_internal, coeff))
                sgn_outer = _sign(R, e)
                for (d1, c1), (d2, c2), coeff in C.reduced_coproduct(dj, cj):
                    w2 = w[:j] + ((d1, c1), (d2, c2)) + w[j + 1:]
                    sgn = R.mul(sgn_outer, _sign(R, d1))
                    X.set_d_entry(n, src, index.name_of[w2], R.mul(sgn, coeff))
                e += dj - 1

    def concat(da, a, db, b):
        if da + db > N:
            return {}
        wa = index.letters_of[a]
        wb = index.letters_of[b]
        return {index.name_of[wa + wb]: R.one}

    A = ChainAlgebra(X, EMPTY_NAME, name=f"Cobar({C.name})", product_fn=concat)
    A.kind = "cobar"
    A.source_coalgebra = C
    A.words = index
    return A


# ---------------------------------------------------------------------
# Shuffles and the commutative bar multiplication.
# ---------------------------------------------------------------------

def shuffles_with_signs(ring, u: Word, v: Word, degree):
    """All (|u|,|v|)-shuffles of the letters with Koszul signs.

    ``degree(letter)`` gives the marked degree used by the sign rule: moving
    a letter of v past a letter of u costs (-1)^{deg*deg}.
    """
    out = []

    def rec(uu, vv, acc, sign):
        if not uu and not vv:
            out.append((tuple(acc), sign))
            return
        if uu:
            rec(uu[1:], vv, acc + [uu[0]], sign)
        if vv:
            passed = sum(degree(k) for k in uu)
            s2 = ring.mul(sign, _sign(ring, degree(vv[0]) * passed))
            rec(uu, vv[1:], acc + [vv[0]], s2)

    rec(list(u), list(v), [], ring.one)
    return out


def is_graded_commutative(A: ChainAlgebra) -> bool:
    R = A.ring
    N = A.truncation
    for p in range(1, N + 1):
        for q in range(1, N + 1 - p):
            for a in A.basis(p):
                for b in A.basis(q):
                    ab = A.product(p, a, q, b)
                    ba = A.product(q, b, p, a)
                    sgn = _sign(R, p * q)
                    keys = set(ab) | set(ba)
                    for k in keys:
                        if not R.is_zero(R.sub(ab.get(k, R.zero), R.mul(sgn, ba.get(k, R.zero)))):
                            return False
    return True


def shuffle_product_bar(A: ChainAlgebra, N: int) -> ChainAlgebra:
    """The commutative multiplication Bμ∘∇ on Bar(A) for commutative A.

    Words multiply by shuffling their letters with Koszul signs on the
    marked degrees.  Returns a ChainAlgebra on the bar complex (the bar
    coalgebra keeps living alongside it).
    """
    if not is_graded_commutative(A):
        raise NotCommutative(f"{A.name or 'algebra'} is not graded-commutative")
    B = bar(A, N)
    R = B.ring
    index = B.words

    def product(da, a, db, b):
        if da + db > N:
            return {}
        wa, wb = index.letters_of[a], index.letters_of[b]
        out: dict[str, object] = {}
        for w, sgn in shuffles_with_signs(R, wa, wb, bar_letter_degree):
            name = index.name_of[w]
            out[name] = R.add(out.get(name, R.zero), sgn)
        return {k: v for k, v in out.items() if not R.is_zero(v)}

    S = ChainAlgebra(B.complex, EMPTY_NAME, name=f"Bar({A.name})-shuffle", product_fn=product)
    S.kind = "bar-shuffle"
    S.source_algebra = A
    S.words = index
    S.bar_coalgebra = B
    return S


# ---------------------------------------------------------------------
# Functoriality: Bar(f) and Cobar(g), letterwise (degree-0, no signs).
# ---------------------------------------------------------------------

def bar_map(f: ChainMap, BarA: ChainCoalgebra, BarA2: ChainCoalgebra) -> ChainMap:
    """Bar(f) for an algebra map f: A -> A'."""
    R = BarA.ring
    out = ChainMap(BarA.complex, BarA2.complex)
    for n in range(BarA.truncation + 1):
        for name in BarA.basis(n):
            word = BarA.words.letters_of[name]
            images = [((), R.one)]
            for (d, a) in word:
                val = f.apply(d, a)
                images = [
                    (w + ((d, b),), R.mul(s, v))
                    for (w, s) in images for b, v in val.items()
                ]
                if not images:
                    break
            for w, s in images:
                target = BarA2.words.name_of.get(w)
                if target is not None:
                    out.set_entry(n, name, target, s)
    return out


def cobar_map(g: ChainMap, OmegaC: ChainAlgebra, OmegaC2: ChainAlgebra) -> ChainMap:
    """Cobar(g) for a coalgebra map g: C -> C'."""
    R = OmegaC.ring
    out = ChainMap(OmegaC.complex, OmegaC2.complex)
    for n in range(OmegaC.truncation + 1):
        for name in OmegaC.basis(n):
            word = OmegaC.words.letters_of[name]
            images = [((), R.one)]
            for (d, c) in word:
                val = {k: v for k, v in g.apply(d, c).items()}
                images = [
                    (w + ((d, c2),), R.mul(s, v))
                    for (w, s) in images for c2, v in val.items()
                ]
                if not images:
                    break
            for w, s in images:
                target = OmegaC2.words.name_of.get(w)
                if target is not None:
                    out.set_entry(n, name, target, s)
    return out


def is_algebra_map(f: ChainMap, A: ChainAlgebra, B: ChainAlgebra, through: int | None = None) -> bool:
    """f(unit) = unit and f(a·a') = f(a)·f(a') on all basis pairs."""
    R = A.ring
    N = min(A.truncation, B.truncation)
    if through is not None:
        N = min(N, through)
    if f.apply(0, A.unit) != {B.unit: R.one}:
        return False
    for p in range(1, N + 1):
        for q in range(1, N + 1 - p):
            for a in A.basis(p):
                for a2 in A.basis(q):
                    lhs: dict[str, object] = {}
                    for r, v in A.product(p, a, q, a2).items():
                        for b, w in f.apply(p + q, r).items():
                            lhs[b] = R.add(lhs.get(b, R.zero), R.mul(v, w))
                    rhs = B.mul_combo(p, f.apply(p, a), q, f.apply(q, a2))
                    keys = set(lhs) | set(rhs)
                    if any(not R.is_zero(R.sub(lhs.get(k, R.zero), rhs.get(k, R.zero))) for k in keys):
                        return False
    return True


def is_coalgebra_map(f: ChainMap, C: ChainCoalgebra, D: ChainCoalgebra, through: int | None = None) -> bool:
    """Δ_D ∘ f = (f⊗f) ∘ Δ_C on every basis element, plus counit compat."""
    R = C.ring
    N = min(C.truncation, D.truncation)
    if through is not None:
        N = min(N, through)
    for n in range(N + 1):
        for c in C.basis(n):
            img = f.apply(n, c)
            eps_lhs = sum_counit = R.zero
            for d1, v in img.items():
                sum_counit = R.add(sum_counit, R.mul(v, D.counit(n, d1)))
            if not R.is_zero(R.sub(sum_counit, C.counit(n, c))):
                return False
            lhs: dict = {}
            for dname, v in img.items():
                for k1, k2, w in D.coproduct(n, dname):
                    lhs[(k1, k2)] = R.add(lhs.get((k1, k2), R.zero), R.mul(v, w))
            rhs: dict = {}
            for (d1, c1), (d2, c2), v in C.coproduct(n, c):
                for e1, w1 in f.apply(d1, c1).items():
                    for e2, w2 in f.apply(d2, c2).items():
                        key = ((d1, e1), (d2, e2))
                        rhs[key] = R.add(rhs.get(key, R.zero), R.mul(v, R.mul(w1, w2)))
            keys = set(lhs) | set(rhs)
            if any(not R.is_zero(R.sub(lhs.get(k, R.zero), rhs.get(k, R.zero))) for k in keys):
                return False
    return True


# ---------------------------------------------------------------------
# alpha_t / beta_t and the adjunction unit and counit.
# ---------------------------------------------------------------------

def alpha_t(t, Omega: ChainAlgebra, N: int) -> ChainMap:
    """Multiplicative extension ΩC -> A of a twisting cochain t: C -> A.

    ``Omega`` must be cobar(t.source, N); letters map by s-1(c) -> t(c).
    """
    A = t.target
    f = ChainMap(Omega.complex, A.complex)
    index = Omega.words
    for n in range(N + 1):
        for name in Omega.basis(n):
            word = index.letters_of[name]
            combo = {A.unit: A.ring.one}
            deg = 0
            ok = True
            for (dc, c) in word:
                val = t.value(dc, c)
                if not val:
                    ok = False
                    break
                combo = A.mul_combo(deg, combo, dc - 1, val)
                deg += dc - 1
                if not combo:
                    ok = False
                    break
            if ok:
                for r, v in combo.items():
                    f.set_entry(n, name, r, v)
    return f


def beta_t(t, Bar: ChainCoalgebra, N: int) -> ChainMap:
    """Adjoint coalgebra map C -> Bar(A) of a twisting cochain t: C -> A.

    The length-k component applies (s t)^{⊗k} to the iterated reduced
    coproduct; the couniversal cochain picks out exactly length-one words,
    so t = t_Bar ∘ beta_t holds on the nose.
    """
    C = t.source
    A = t.target
    R = C.ring
    index = Bar.words
    f = ChainMap(C.complex, Bar.complex)
    for n in range(N + 1):
        for c in C.basis(n):
            if n == 0:
                f.set_entry(0, c, EMPTY_NAME, R.one)
                continue
            # iterated reduced coproducts, refined right-comb style
            results: dict[str, object] = {}
            frontier = [(((n, c),), R.one)]
            while frontier:
                # map every splitting through t letterwise
                new_frontier = []
                for keys, coeff in frontier:
                    # letterwise t-image of this splitting
                    words = [((), coeff)]
                    for (dc, cc) in keys:
                        val = t.value(dc, cc)
                        words = [
                            (w + ((dc - 1, aname),), R.mul(s, av))
                            for (w, s) in words
                            for aname, av in val.items()
                        ] if val else []
                        if not words:
                            break
                    for w, s in words:
                        name = index.name_of.get(w)
                        if name is not None:
                            results[name] = R.add(results.get(name, R.zero), s)
                    # refine the last factor once more via reduced coproduct
                    last = keys[-1]
                    for (d1, c1), (d2, c2), v in C.reduced_coproduct(*last):
                        new_frontier.append((keys[:-1] + ((d1, c1), (d2, c2)), R.mul(coeff, v)))
                frontier = new_frontier
            for name, v in results.items():
                if not R.is_zero(v):
                    f.set_entry(n, c, name, v)
    return f


def unit_map(C: ChainCoalgebra, N: int, Omega: ChainAlgebra | None = None,
             BarOmega: ChainCoalgebra | None = None) -> ChainMap:
    """η_C : C -> Bar(Cobar(C)), the adjunction unit (a coalgebra map)."""
    from .twisting import universal_cochain

    Omega = Omega if Omega is not None else cobar(C, N)
    BarOmega = BarOmega if BarOmega is not None else bar(Omega, N)
    t = universal_cochain(C, Omega)
    return beta_t(t, BarOmega, N)


def counit_map(A: ChainAlgebra, N: int, Bar: ChainCoalgebra | None = None,
               OmegaBar: ChainAlgebra | None = None) -> ChainMap:
    """v_A : Cobar(Bar(A)) -> A, the adjunction counit (an algebra map)."""
    from .twisting import couniversal_cochain

    Bar = Bar if Bar is not None else bar(A, N)
    OmegaBar = OmegaBar if OmegaBar is not None else cobar(Bar, N)
    t = couniversal_cochain(Bar, A)
    return alpha_t(t, OmegaBar, N)


# ---------------------------------------------------------------------
# Milgram comparison maps (used by the trivial-extension machinery).
# ---------------------------------------------------------------------

def milgram_bar_map(A: ChainAlgebra, B: ChainAlgebra, N: int,
                    BarA: ChainCoalgebra, BarB: ChainCoalgebra,
                    BarAB: ChainCoalgebra, tensor_bar: ChainComplex) -> ChainMap:
    """∇: Bar(A) ⊗ Bar(B) -> Bar(A⊗B), interleaving words by shuffles.

    ``tensor_bar`` is tensor_complex(BarA.complex, BarB.complex); BarAB is
    bar(tensor_algebra_product(A, B)).  Letters go to s(a⊗1) and s(1⊗b).
    """
    R = A.ring
    f = ChainMap(tensor_bar, BarAB.complex)
    for n in range(tensor_bar.truncation + 1):
        for name in tensor_bar.basis.names(n):
            la, lb = name.split("⊗", 1)
            wa = BarA.words.letters_of[la]
            wb = BarB.words.letters_of[lb]
            wa2 = tuple((d, tensor_name(a, B.unit)) for (d, a) in wa)
            wb2 = tuple((d, tensor_name(A.unit, b)) for (d, b) in wb)
            for w, sgn in shuffles_with_signs(R, wa2, wb2, bar_letter_degree):
                target = BarAB.words.name_of.get(w)
                if target is not None:
                    f.set_entry(n, name, target, sgn)
    return f


def milgram_cobar_map(C: ChainCoalgebra, D: ChainCoalgebra, N: int,
                      OmegaCD: ChainAlgebra, OmegaC: ChainAlgebra, OmegaD: ChainAlgebra,
                      tensor_cobar: ChainComplex) -> ChainMap:
    """q: Cobar(C⊗D) -> Cobar(C) ⊗ Cobar(D), the multiplicative comparison.

    Generators s-1(c⊗1) -> s-1(c)⊗[], s-1(1⊗d) -> []⊗s-1(d), mixed
    generators die; extended multiplicatively with Koszul signs.
    """
    R = C.ring
    f = ChainMap(OmegaCD.complex, tensor_cobar)

    def letter_image(dc, name):
        # name is "c⊗d" in the tensor coalgebra
        c, d = name.split("⊗", 1)
        out = []
        if d == D.coaug:
            out.append((((dc, c),), (), R.one))
        if c == C.coaug:
            out.append(((), ((dc, d),), R.one))
        return out

    for n in range(N + 1):
        for name in OmegaCD.basis(n):
            word = OmegaCD.words.letters_of[name]
            # multiply letter images in Cobar(C) ⊗ Cobar(D)
            terms = [((), (), R.one)]
            for (dc, cname) in word:
                imgs = letter_image(dc, cname)
                new_terms = []
                for (wa, wb, s) in terms:
                    for (ua, ub, v) in imgs:
                        # Koszul: (wa⊗wb)·(ua⊗ub) = ±(wa ua)⊗(wb ub)
                        dwb = sum(k[0] - 1 for k in wb)
                        dua = sum(k[0] - 1 for k in ua)
                        sgn = _sign(R, dwb * dua)
                        new_terms.append((wa + ua, wb + ub, R.mul(R.mul(s, v), sgn)))
                terms = new_terms
                if not terms:
                    break
            for (wa, wb, s) in terms:
                na = OmegaC.words.name_of.get(wa)
                nb = OmegaD.words.name_of.get(wb)
                if na is not None and nb is not None:
                    f.set_entry(n, name, tensor_name(na, nb), s)
    return f
