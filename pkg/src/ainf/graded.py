"""Graded modules, graded maps and the Koszul sign convention.

Basis elements are pairs (degree, index); linear combinations reuse the
sparse-dict vector helpers from linalg (keys are basis elements).  The
grading is cohomological throughout: differentials have degree +1,
suspension sA puts a degree-d element in degree d-1.
"""

from .linalg import DimensionMismatch, Matrix, vec_axpy


class GradedModule:
    """Finite map degree -> ordered tuple of basis names."""

    def __init__(self, degrees):
        self.degrees = {d: tuple(names) for d, names in degrees.items() if names}
        for d, names in self.degrees.items():
            if len(set(names)) != len(names):
                raise ValueError("duplicate basis names in degree %d" % d)
        self._by_name = {}
        for d, names in self.degrees.items():
            for i, n in enumerate(names):
                if n in self._by_name:
                    raise ValueError("basis name %r appears in two degrees" % n)
                self._by_name[n] = (d, i)

    def dim(self, d):
        return len(self.degrees.get(d, ()))

    @property
    def support(self):
        return sorted(self.degrees)

    def total_dim(self):
        return sum(len(v) for v in self.degrees.values())

    def basis(self, d=None):
        if d is not None:
            return [(d, i) for i in range(self.dim(d))]
        return [(d, i) for d in self.support for i in range(self.dim(d))]

    def name(self, el):
        d, i = el
        return self.degrees[d][i]

    def element(self, name):
        """Basis element (degree, index) with the given name."""
        return self._by_name[name]

    def is_zero(self):
        return not self.degrees

    def shift(self, k):
        """Degrees re-indexed: an element of degree d lands in degree d+k."""
        return GradedModule({d + k: names for d, names in self.degrees.items()})

    def restrict(self, keep):
        """Submodule spanned by the basis elements for which keep(el) is true."""
        out = {}
        for d, names in self.degrees.items():
            kept = [n for i, n in enumerate(names) if keep((d, i))]
            if kept:
                out[d] = tuple(kept)
        return GradedModule(out)

    def __eq__(self, other):
        return isinstance(other, GradedModule) and self.degrees == other.degrees

    def __repr__(self):
        return "GradedModule(%s)" % {d: len(v) for d, v in sorted(self.degrees.items())}


def tensor_module(A, B, sep="⊗"):
    """Tensor product; degree-n basis = pairs (a_p, b_q), p ascending."""
    out = {}
    for p in A.support:
        for q in B.support:
            n = p + q
            pairs = ["%s%s%s" % (a, sep, b) for a in A.degrees[p] for b in B.degrees[q]]
            out.setdefault(n, []).extend(pairs)
    return GradedModule({d: tuple(v) for d, v in out.items()})


class TensorWord:
    """Formal word of basis elements with an exact coefficient.

    factors: tuple of (name, degree) pairs; the total degree is the sum of
    the factor degrees (consumers apply any shift bookkeeping themselves).
    """

    __slots__ = ("factors", "coefficient")

    def __init__(self, factors, coefficient):
        self.factors = tuple(factors)
        self.coefficient = coefficient

    @property
    def degree(self):
        return sum(d for _, d in self.factors)

    def __eq__(self, other):
        return (isinstance(other, TensorWord) and self.factors == other.factors
                and self.coefficient == other.coefficient)

    def __repr__(self):
        return "TensorWord(%r, %r)" % (self.factors, self.coefficient)


def koszul_permutation_sign(degrees, perm):
    """Sign of permuting homogeneous factors.

    perm[k] = source position of the factor landing at target slot k.
    Each transposed pair of odd-degree factors contributes a -1.
    """
    if sorted(perm) != list(range(len(degrees))):
        raise ValueError("malformed permutation %r" % (perm,))
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b] and degrees[perm[a]] % 2 and degrees[perm[b]] % 2:
                sign = -sign
    return sign


def koszul_sign(left_degrees, right_degrees, interleaving):
    """Koszul sign of an interleaving of two blocks of graded factors.

    interleaving[k] = position in the concatenation left+right of the
    factor landing at slot k; the relative order within each block must
    be preserved.
    """
    m = len(left_degrees)
    degrees = list(left_degrees) + list(right_degrees)
    perm = list(interleaving)
    lefts = [p for p in perm if p < m]
    rights = [p for p in perm if p >= m]
    if lefts != sorted(lefts) or rights != sorted(rights):
        raise ValueError("interleaving does not preserve block order")
    return koszul_permutation_sign(degrees, perm)


class GradedMap:
    """Degree-k map given by per-degree matrix blocks source_d -> target_{d+k}."""

    def __init__(self, source, target, degree, blocks, field):
        self.source = source
        self.target = target
        self.degree = degree
        self.field = field
        self.blocks = {}
        for d, M in blocks.items():
            if M.rows != target.dim(d + degree) or M.cols != source.dim(d):
                raise DimensionMismatch(
                    "block at degree %d is %dx%d, expected %dx%d"
                    % (d, M.rows, M.cols, target.dim(d + degree), source.dim(d)))
            if not M.is_zero():
                self.blocks[d] = M

    @classmethod
    def zero(cls, source, target, degree, field):
        return cls(source, target, degree, {}, field)

    @classmethod
    def identity(cls, module, field):
        blocks = {d: Matrix.identity(module.dim(d), field) for d in module.support}
        return cls(module, module, 0, blocks, field)

    @classmethod
    def from_values(cls, source, target, degree, values, field):
        """values: map basis element (d, i) -> combination on target basis."""
        blocks = {}
        for d in source.support:
            entries = {}
            for i in range(source.dim(d)):
                for (dt, it), x in values.get((d, i), {}).items():
                    if dt != d + degree:
                        raise DimensionMismatch(
                            "value of (%d,%d) has degree %d, expected %d"
                            % (d, i, dt, d + degree))
                    if x:
                        entries[(it, i)] = x
            blocks[d] = Matrix(target.dim(d + degree), source.dim(d), entries, field)
        return cls(source, target, degree, blocks, field)

    def block(self, d):
        M = self.blocks.get(d)
        if M is None:
            M = Matrix.zero(self.target.dim(d + self.degree), self.source.dim(d), self.field)
        return M

    def apply_el(self, el):
        d, i = el
        M = self.blocks.get(d)
        if M is None:
            return {}
        return {(d + self.degree, it): x for it, x in M.column(i).items()}

    def apply(self, combo):
        out = {}
        for el, c in combo.items():
            vec_axpy(out, c, self.apply_el(el))
        return out

    def compose(self, other):
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise DimensionMismatch("composition source/target mismatch")
        k = other.degree
        blocks = {}
        for d in other.source.support:
            A = self.blocks.get(d + k)
            B = other.blocks.get(d)
            if A is not None and B is not None:
                blocks[d] = A * B
        return GradedMap(other.source, self.target, self.degree + k, blocks, self.field)

    def __add__(self, other):
        if self.degree != other.degree:
            raise DimensionMismatch("adding maps of different degree")
        blocks = {}
        for d in set(self.blocks) | set(other.blocks):
            blocks[d] = self.block(d) + other.block(d)
        return GradedMap(self.source, self.target, self.degree, blocks, self.field)

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def scale(self, c):
        return GradedMap(self.source, self.target, self.degree,
                         {d: M.scale(c) for d, M in self.blocks.items()}, self.field)

    def is_zero(self):
        return all(M.is_zero() for M in self.blocks.values())

    def __eq__(self, other):
        if not isinstance(other, GradedMap) or self.degree != other.degree:
            return False
        for d in set(self.blocks) | set(other.blocks):
            if self.block(d) != other.block(d):
                return False
        return True

    def __repr__(self):
        return "GradedMap(degree=%d, blocks=%s)" % (self.degree, sorted(self.blocks))
