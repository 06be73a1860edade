"""Chain complexes, dg algebras/coalgebras, homology with sections,
simplicial chains with the Alexander-Whitney diagonal, and dual cochain
algebras with cup product.

Everything is indexed cohomologically (differentials raise degree by 1);
chain-type data such as simplicial chains lives in non-positive degrees
via the re-indexing C^{-n} = C_n.
"""

from itertools import combinations

from .errors import CertificationError, PreconditionError
from .graded import GradedMap, GradedModule, tensor_module
from .linalg import (Echelon, Matrix, kernel_basis, quotient_with_section,
                     solve_linear, vec_axpy, vec_scale)


class ChainComplex:
    """Graded module with a degree +1 differential; d^2 = 0 is certified
    at construction."""

    def __init__(self, module, d, check=True):
        if d.degree != 1:
            raise PreconditionError("differential must have degree +1")
        self.module = module
        self.d = d
        self.field = d.field
        if check and not d.compose(d).is_zero():
            raise CertificationError("d^2 != 0")

    @classmethod
    def with_zero_differential(cls, module, field):
        return cls(module, GradedMap.zero(module, module, 1, field), check=False)

    @property
    def support(self):
        return self.module.support

    def __repr__(self):
        return "ChainComplex(%r)" % (self.module,)


class DgAlgebra:
    """Dg algebra presented by structure constants.

    mul maps a pair of basis elements to a combination; missing pairs are
    zero.  Associativity, the degree-0 condition and the Leibniz rule are
    certified exactly on all basis words at construction.
    """

    def __init__(self, complex_, mul, unit=None, check=True):
        self.complex = complex_
        self.module = complex_.module
        self.d = complex_.d
        self.field = complex_.field
        self.mul = {k: dict(v) for k, v in mul.items() if v}
        self.unit = unit
        if check:
            self._certify()

    def product_el(self, a, b):
        return self.mul.get((a, b), {})

    def product(self, u, v):
        """Bilinear extension to combinations (no Koszul signs: scalars
        simply multiply)."""
        out = {}
        for a, ca in u.items():
            for b, cb in v.items():
                c = ca * cb
                if c:
                    vec_axpy(out, c, self.product_el(a, b))
        return out

    def _certify(self):
        basis = self.module.basis()
        for (a, b), val in self.mul.items():
            want = a[0] + b[0]
            for el in val:
                if el[0] != want:
                    raise CertificationError(
                        "product of degrees %d,%d hit degree %d" % (a[0], b[0], el[0]))
        for a in basis:
            for b in basis:
                ab = self.product_el(a, b)
                # Leibniz: d(ab) = da.b + (-1)^{|a|} a.db
                lhs = self.d.apply(ab)
                rhs = self.product(self.d.apply_el(a), {b: self.field.one})
                sgn = -self.field.one if a[0] % 2 else self.field.one
                vec_axpy(rhs, sgn, self.product({a: self.field.one}, self.d.apply_el(b)))
                if lhs != rhs:
                    raise CertificationError(
                        "Leibniz fails on %s,%s" % (self.module.name(a), self.module.name(b)))
                for c in basis:
                    left = self.product(ab, {c: self.field.one})
                    right = self.product({a: self.field.one}, self.product_el(b, c))
                    if left != right:
                        raise CertificationError(
                            "associativity fails on %s,%s,%s"
                            % tuple(self.module.name(x) for x in (a, b, c)))
        if self.unit is not None:
            e = self.unit
            if e[0] != 0:
                raise CertificationError("unit not in degree 0")
            if self.d.apply_el(e):
                raise CertificationError("unit is not a cycle")
            for a in basis:
                if self.product_el(e, a) != {a: self.field.one} or \
                   self.product_el(a, e) != {a: self.field.one}:
                    raise CertificationError("unit axiom fails on %s" % (self.module.name(a),))

    def is_commutative(self):
        for a in self.module.basis():
            for b in self.module.basis():
                sgn = -self.field.one if (a[0] % 2 and b[0] % 2) else self.field.one
                if self.product_el(a, b) != vec_scale(sgn, self.product_el(b, a)):
                    return False
        return True

    def __repr__(self):
        return "DgAlgebra(%r, unit=%r)" % (self.module, self.unit)


class DgCoalgebra:
    """Dg coalgebra presented by structure constants.

    comul maps a basis element to {(b, c): coeff}.  Coassociativity and
    the co-Leibniz rule are certified at construction.  An optional
    group-like coaugmentation element supports reduced diagonals.
    """

    def __init__(self, complex_, comul, group_like=None, check=True):
        self.complex = complex_
        self.module = complex_.module
        self.d = complex_.d
        self.field = complex_.field
        self.comul = {k: dict(v) for k, v in comul.items() if v}
        self.group_like = group_like
        if check:
            self._certify()

    def coproduct_el(self, a):
        return self.comul.get(a, {})

    def reduced_coproduct_el(self, a):
        """Diagonal minus the coaugmentation terms a(x)g and g(x)a."""
        g = self.group_like
        if g is None:
            raise PreconditionError("no coaugmentation (group-like element) given")
        if a == g:
            return {}
        out = dict(self.coproduct_el(a))
        vec_axpy(out, -self.field.one, {(a, g): self.field.one})
        vec_axpy(out, -self.field.one, {(g, a): self.field.one})
        return out

    def _certify(self):
        one = self.field.one
        for a, val in self.comul.items():
            for (b, c) in val:
                if b[0] + c[0] != a[0]:
                    raise CertificationError("coproduct term of wrong degree")
        for a in self.module.basis():
            left = {}
            right = {}
            for (b, c), x in self.coproduct_el(a).items():
                for (u, v), y in self.coproduct_el(b).items():
                    vec_axpy(left, x * y, {(u, v, c): one})
                for (u, v), y in self.coproduct_el(c).items():
                    vec_axpy(right, x * y, {(b, u, v): one})
            if left != right:
                raise CertificationError("coassociativity fails on %s" % (self.module.name(a),))
            # co-Leibniz: Delta d = (d (x) 1 + 1 (x) d) Delta
            lhs = {}
            for el, x in self.d.apply_el(a).items():
                vec_axpy(lhs, x, self.coproduct_el(el))
            rhs = {}
            for (b, c), x in self.coproduct_el(a).items():
                for el, y in self.d.apply_el(b).items():
                    vec_axpy(rhs, x * y, {(el, c): one})
                sgn = -one if b[0] % 2 else one
                for el, y in self.d.apply_el(c).items():
                    vec_axpy(rhs, sgn * x * y, {(b, el): one})
            if lhs != rhs:
                raise CertificationError("co-Leibniz fails on %s" % (self.module.name(a),))
        if self.group_like is not None:
            g = self.group_like
            if self.coproduct_el(g) != {(g, g): one}:
                raise CertificationError("coaugmentation element is not group-like")
            if self.d.apply_el(g):
                raise CertificationError("coaugmentation element is not a cycle")

    def __repr__(self):
        return "DgCoalgebra(%r)" % (self.module,)


# ---------------------------------------------------------------- homology

class HomologyData:
    """Homology of a complex with a cycle-choosing section.

    module: graded module of homology classes (names h<degree>_<i>)
    f1:     section H -> C (each class goes to its chosen representative)
    classify: C -> H, kills boundaries, classify o f1 = id; only values on
      cycles are meaningful.
    quotients: per-degree QuotientData.
    """

    def __init__(self, complex_, prefer_high=False, names=None):
        C = complex_
        self.complex = C
        field = C.field
        self.quotients = {}
        degrees = {}
        for deg in C.module.support:
            amb = C.module.dim(deg)
            cycles = kernel_basis(C.d.block(deg))
            prev = C.d.blocks.get(deg - 1)
            boundaries = []
            if prev is not None:
                boundaries = [c for c in prev.columns() if c]
            q = quotient_with_section(cycles, boundaries, amb, field, prefer_high)
            if q.dim == 0:
                continue
            self.quotients[deg] = q
            if names and deg in names:
                degrees[deg] = tuple(names[deg])
                if len(names[deg]) != q.dim:
                    raise PreconditionError("homology name count mismatch in degree %d" % deg)
            else:
                degrees[deg] = tuple("h%d_%d" % (deg, i) for i in range(q.dim))
        self.module = GradedModule(degrees)
        blocks = {}
        cblocks = {}
        for deg, q in self.quotients.items():
            sec = Matrix.from_columns(C.module.dim(deg), q.quotient_basis, field)
            blocks[deg] = sec
            cblocks[deg] = q.classify
        self.f1 = GradedMap(self.module, C.module, 0, blocks, field)
        self.classify = GradedMap(C.module, self.module, 0, cblocks, field)
        if not C.d.compose(self.f1).is_zero():
            raise CertificationError("section image not made of cycles")
        ident = GradedMap.identity(self.module, field)
        if self.classify.compose(self.f1) != ident:
            raise CertificationError("classify o section != id")

    def dim(self, deg):
        return self.module.dim(deg)

    def class_of(self, combo):
        """Homology class of a cycle (combination in the complex)."""
        return self.classify.apply(combo)


def homology(C, prefer_high=False, names=None):
    return HomologyData(C, prefer_high=prefer_high, names=names)


def check_chain_homotopy(f, g, D, source, target):
    """True iff f - g = d' o D + D o d on the given complexes
    (f, g of degree 0, D of degree -1)."""
    if D.degree != -1 or f.degree != 0 or g.degree != 0:
        raise PreconditionError("degrees must be f,g: 0 and D: -1")
    lhs = f - g
    rhs = target.d.compose(D) + D.compose(source.d)
    return lhs == rhs


# ---------------------------------------------------------------- tensors

class TensorIndexer:
    """Index bookkeeping for tensor_module(A, B)."""

    def __init__(self, A, B, sep="⊗"):
        self.A = A
        self.B = B
        self.module = tensor_module(A, B, sep)
        self.pair_index = {}
        self.index_pair = {}
        counts = {}
        for p in A.support:
            for q in B.support:
                n = p + q
                for i in range(A.dim(p)):
                    for j in range(B.dim(q)):
                        k = counts.get(n, 0)
                        counts[n] = k + 1
                        self.pair_index[((p, i), (q, j))] = (n, k)
                        self.index_pair[(n, k)] = ((p, i), (q, j))

    def el(self, a, b):
        return self.pair_index[(a, b)]

    def pair(self, el):
        return self.index_pair[el]

    def combine(self, u, v, sign_fn=None):
        """Tensor of two combinations; sign_fn(a, b) may scale each term."""
        out = {}
        for a, ca in u.items():
            for b, cb in v.items():
                c = ca * cb
                if sign_fn is not None:
                    c = c * sign_fn(a, b)
                if c:
                    key = self.el(a, b)
                    y = out.get(key)
                    y = c if y is None else y + c
                    if y:
                        out[key] = y
                    elif key in out:
                        del out[key]
        return out


def tensor_complex(A, B):
    """Tensor product complex: d(a(x)b) = da(x)b + (-1)^{|a|} a(x)db."""
    field = A.field
    idx = TensorIndexer(A.module, B.module)
    one = field.one
    values = {}
    for (a, b), el in idx.pair_index.items():
        out = {}
        for x, c in A.d.apply_el(a).items():
            vec_axpy(out, c, {idx.el(x, b): one})
        sgn = -one if a[0] % 2 else one
        for y, c in B.d.apply_el(b).items():
            vec_axpy(out, sgn * c, {idx.el(a, y): one})
        values[el] = out
    d = GradedMap.from_values(idx.module, idx.module, 1, values, field)
    cx = ChainComplex(idx.module, d)
    cx.indexer = idx
    return cx


def hom_complex(C, Cp):
    """Complex of graded maps C -> C' with D(f) = d' o f + (-1)^{|f|} f o d."""
    field = C.field
    degrees = {}
    key_index = {}
    for n in range(min(Cp.support, default=0) - max(C.support, default=0) - 1,
                   max(Cp.support, default=0) - min(C.support, default=0) + 2):
        names = []
        for d in C.support:
            for i, sn in enumerate(C.module.degrees[d]):
                for j, tn in enumerate(Cp.module.degrees.get(d + n, ())):
                    key_index[(n, (d, i), (d + n, j))] = (n, len(names))
                    names.append("%s=>%s" % (sn, tn))
        if names:
            degrees[n] = tuple(names)
    module = GradedModule(degrees)
    one = field.one
    values = {}
    for (n, a, b), el in key_index.items():
        out = {}
        for bt, c in Cp.d.apply_el(b).items():
            vec_axpy(out, c, {key_index[(n + 1, a, bt)]: one})
        sgn = -one if n % 2 else one
        # (f o d) on basis: sum over x with a appearing in dx
        for x in C.module.basis(a[0] - 1):
            c = C.d.apply_el(x).get(a)
            if c:
                vec_axpy(out, sgn * c, {key_index[(n + 1, x, b)]: one})
        values[el] = out
    d = GradedMap.from_values(module, module, 1, values, field)
    cx = ChainComplex(module, d)
    cx.key_index = key_index
    return cx


# ------------------------------------------------------------- simplicial

class SimplicialComplex:
    """Finite abstract simplicial complex, closed under faces."""

    def __init__(self, vertices, simplices):
        self.vertices = list(vertices)
        order = {v: k for k, v in enumerate(self.vertices)}
        if len(order) != len(self.vertices):
            raise PreconditionError("duplicate vertices")
        closed = set()
        for s in simplices:
            s = tuple(sorted(s, key=order.__getitem__))
            if len(set(s)) != len(s):
                raise PreconditionError("simplex with repeated vertex: %r" % (s,))
            for v in s:
                if v not in order:
                    raise PreconditionError("unknown vertex %r" % (v,))
            for k in range(1, len(s) + 1):
                for face in combinations(s, k):
                    closed.add(face)
        for v in self.vertices:
            closed.add((v,))
        self.simplices = closed

    def simplices_of_dim(self, n):
        return sorted(s for s in self.simplices if len(s) == n + 1)

    @property
    def dimension(self):
        return max(len(s) for s in self.simplices) - 1


def _simplex_name(s):
    return "|".join(str(v) for v in s)


def simplicial_chain_coalgebra(V, field):
    """Simplicial chains as a dg coalgebra, re-indexed cohomologically
    (an n-simplex sits in degree -n); the diagonal is Alexander-Whitney."""
    degrees = {}
    index = {}
    for n in range(V.dimension + 1):
        simps = V.simplices_of_dim(n)
        if simps:
            degrees[-n] = tuple(_simplex_name(s) for s in simps)
            for i, s in enumerate(simps):
                index[s] = (-n, i)
    module = GradedModule(degrees)
    one = field.one
    values = {}
    for s, el in index.items():
        out = {}
        if len(s) > 1:
            sgn = one
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                vec_axpy(out, sgn, {index[face]: one})
                sgn = -sgn
        values[el] = out
    d = GradedMap.from_values(module, module, 1, values, field)
    comul = {}
    for s, el in index.items():
        terms = {}
        for k in range(len(s)):
            front = s[:k + 1]
            back = s[k:]
            vec_axpy(terms, one, {(index[front], index[back]): one})
        comul[el] = terms
    coalg = DgCoalgebra(ChainComplex(module, d), comul)
    coalg.simplex_index = index
    return coalg


def cochain_algebra(C, field):
    """Dual cochain algebra of a finite dg coalgebra: delta(f) = f o d and
    cup product dual to the diagonal."""
    module = GradedModule({-d: names for d, names in C.module.degrees.items()})
    one = field.one
    dual = lambda el: (-el[0], el[1])
    values = {}
    for a in C.module.basis():
        out = {}
        for x in C.module.basis(a[0] - 1):
            c = C.d.apply_el(x).get(a)
            if c:
                vec_axpy(out, c, {dual(x): one})
        values[dual(a)] = out
    d = GradedMap.from_values(module, module, 1, values, field)
    mul = {}
    for c in C.module.basis():
        for (a, b), x in C.coproduct_el(c).items():
            key = (dual(a), dual(b))
            tab = mul.setdefault(key, {})
            vec_axpy(tab, x, {dual(c): one})
    return DgAlgebra(ChainComplex(module, d), mul)


# ------------------------------------------------------- induced structure

def find_unit(A):
    """Two-sided unit of a dg algebra as a degree-0 combination, or None."""
    deg0 = A.module.basis(0)
    if not deg0:
        return None
    basis = A.module.basis()
    # unknowns u_i; equations: sum_i u_i (e_i . x) = x and sum_i u_i (x . e_i) = x
    rows = {}
    rhs = {}
    eqs = {}

    def eq_index(key):
        if key not in eqs:
            eqs[key] = len(eqs)
        return eqs[key]

    entries = {}
    for j, e in enumerate(deg0):
        for x in basis:
            for el, c in A.product_el(e, x).items():
                entries[(eq_index(("L", x, el)), j)] = entries.get((eq_index(("L", x, el)), j), A.field.zero) + c
            for el, c in A.product_el(x, e).items():
                entries[(eq_index(("R", x, el)), j)] = entries.get((eq_index(("R", x, el)), j), A.field.zero) + c
    b = {}
    for x in basis:
        b[eq_index(("L", x, x))] = A.field.one
        b[eq_index(("R", x, x))] = A.field.one
    M = Matrix(len(eqs), len(deg0), entries, A.field)
    sol = solve_linear(M, b)
    if sol is None:
        return None
    return {deg0[j]: c for j, c in sol.items() if c}


def with_unit_basis(A, unit_combo=None, unit_name="1"):
    """Change the degree-0 basis of a dg algebra so the unit is a basis
    element.  Returns an equivalent DgAlgebra whose unit field is set."""
    if unit_combo is None:
        unit_combo = find_unit(A)
    if not unit_combo:
        raise PreconditionError("algebra has no unit")
    field = A.field
    n0 = A.module.dim(0)
    # new basis: unit first, then standard elements completing it
    ech = Echelon()
    ucol = {el[1]: c for el, c in unit_combo.items()}
    ech.insert(ucol)
    new_cols = [ucol]
    names = [unit_name]
    old_names = A.module.degrees[0]
    for i in range(n0):
        rem, _ = ech.reduce({i: field.one})
        if rem:
            ech.insert(rem)
            new_cols.append({i: field.one})
            names.append(old_names[i])
    T = Matrix.from_columns(n0, new_cols, field)     # new -> old coordinates
    # invert T
    inv_cols = []
    for j in range(n0):
        col = solve_linear(T, {j: field.one})
        inv_cols.append(col)
    S = Matrix.from_columns(n0, inv_cols, field)     # old -> new

    degrees = dict(A.module.degrees)
    degrees[0] = tuple(names)
    module = GradedModule(degrees)

    def to_old(el):
        """Combination in old coordinates for a new basis element."""
        d, i = el
        if d != 0:
            return {el: field.one}
        return {(0, r): c for r, c in T.column(i).items()}

    def to_new(combo):
        out = {}
        for el, c in combo.items():
            if el[0] != 0:
                vec_axpy(out, c, {el: field.one})
            else:
                vec_axpy(out, c, {(0, r): x for r, x in S.column(el[1]).items()})
        return out

    values = {}
    for el in module.basis():
        values[el] = to_new(A.d.apply(to_old(el)))
    d = GradedMap.from_values(module, module, 1, values, field)
    mul = {}
    for a in module.basis():
        for b in module.basis():
            prod = to_new(A.product(to_old(a), to_old(b)))
            if prod:
                mul[(a, b)] = prod
    return DgAlgebra(ChainComplex(module, d), mul, unit=(0, 0))


def homology_algebra(A, prefer_high=False, names=None):
    """Homology of a dg algebra as a dg algebra with zero differential.

    Products are computed through the cycle-choosing section; if A has a
    unit whose class is nonzero, the result's degree-0 basis is adjusted
    so the unit class is the basis element named "1"."""
    H = homology(A.complex, prefer_high=prefer_high, names=names)
    field = A.field
    mul = {}
    for a in H.module.basis():
        ra = H.f1.apply_el(a)
        for b in H.module.basis():
            prod = A.product(ra, H.f1.apply_el(b))
            cls = H.class_of(prod)
            if cls:
                mul[(a, b)] = cls
    HA = DgAlgebra(ChainComplex.with_zero_differential(H.module, field), mul)
    if A.unit is not None:
        ucls = H.class_of({A.unit: field.one})
        if ucls:
            HA = with_unit_basis(HA, ucls)
    HA.homology_data = H
    return HA


def homology_coalgebra(C, prefer_high=False, names=None):
    """Homology of a dg coalgebra as a coalgebra with zero differential
    (coefficients over a field, so the Kunneth map identifies
    H(C(x)C) = H(C)(x)H(C))."""
    H = homology(C.complex, prefer_high=prefer_high, names=names)
    field = C.field
    # Kunneth: express the class of Delta(rep) in H(C(x)C) in the basis
    # of classes of (section a)(x)(section b) -- over a field this is an
    # isomorphism, so the linear solve below always succeeds.
    T = tensor_complex(C.complex, C.complex)
    HT = homology(T)
    pair_cols = {}   # degree -> (list of (a,b), Matrix of their HT-classes)
    for n in set(a[0] for a in H.module.basis()):
        pairs = [(a, b) for a in H.module.basis() for b in H.module.basis()
                 if a[0] + b[0] == n]
        flat = {el: k for k, el in enumerate(HT.module.basis())}
        cols = []
        for (a, b) in pairs:
            w = T.indexer.combine(H.f1.apply_el(a), H.f1.apply_el(b))
            cls = HT.class_of(w)
            cols.append({flat[el]: c for el, c in cls.items()})
        pair_cols[n] = (pairs, Matrix.from_columns(len(flat), cols, field), flat)
    comul = {}
    for a in H.module.basis():
        rep = H.f1.apply_el(a)
        drep = {}
        for el, c in rep.items():
            for (u, v), x in C.coproduct_el(el).items():
                key = T.indexer.el(u, v)
                y = drep.get(key)
                y = c * x if y is None else y + c * x
                if y:
                    drep[key] = y
                elif key in drep:
                    del drep[key]
        cls = HT.class_of(drep)
        pairs, M, flat = pair_cols[a[0]]
        sol = solve_linear(M, {flat[el]: c for el, c in cls.items()})
        if sol is None:
            raise CertificationError("Kunneth expression failed")
        terms = {}
        for k, c in sol.items():
            if c:
                terms[pairs[k]] = c
        comul[a] = terms
    g = None
    if C.group_like is not None:
        gcls = H.class_of({C.group_like: field.one})
        if len(gcls) == 1:
            (el, c), = gcls.items()
            if c == field.one:
                g = el
    HC = DgCoalgebra(ChainComplex.with_zero_differential(H.module, field), comul,
                     group_like=g)
    HC.homology_data = H
    return HC
