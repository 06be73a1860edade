"""Sparse exact linear algebra over Q and F_p.

Vectors are dicts {index: scalar} with no stored zeros.  All elimination
uses deterministic pivoting (lowest free index by default) so downstream
constructions are reproducible run-to-run.
"""


class DimensionMismatch(ValueError):
    pass


# ---------------------------------------------------------------- vectors

def vec_add(u, v):
    w = dict(u)
    for i, x in v.items():
        y = w.get(i)
        y = x if y is None else y + x
        if y:
            w[i] = y
        elif i in w:
            del w[i]
    return w


def vec_sub(u, v):
    w = dict(u)
    for i, x in v.items():
        y = w.get(i)
        y = -x if y is None else y - x
        if y:
            w[i] = y
        elif i in w:
            del w[i]
    return w


def vec_scale(c, v):
    if not c:
        return {}
    return {i: c * x for i, x in v.items()}


def vec_axpy(w, c, v):
    """In-place w += c*v; returns w."""
    if not c:
        return w
    for i, x in v.items():
        y = w.get(i)
        y = c * x if y is None else y + c * x
        if y:
            w[i] = y
        elif i in w:
            del w[i]
    return w


# ---------------------------------------------------------------- matrices

class Matrix:
    """Sparse matrix: entries maps (row, col) -> nonzero scalar."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, rows, cols, entries, field):
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries = {k: v for k, v in entries.items() if v}
        for (i, j) in self.entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionMismatch("entry (%d,%d) outside %dx%d" % (i, j, rows, cols))

    @classmethod
    def zero(cls, rows, cols, field):
        return cls(rows, cols, {}, field)

    @classmethod
    def identity(cls, n, field):
        one = field.one
        return cls(n, n, {(i, i): one for i in range(n)}, field)

    @classmethod
    def from_columns(cls, rows, columns, field):
        entries = {}
        for j, col in enumerate(columns):
            for i, x in col.items():
                if x:
                    entries[(i, j)] = x
        return cls(rows, len(columns), entries, field)

    def column(self, j):
        return {i: x for (i, jj), x in self.entries.items() if jj == j}

    def columns(self):
        cols = [{} for _ in range(self.cols)]
        for (i, j), x in self.entries.items():
            cols[j][i] = x
        return cols

    def apply(self, vec):
        """Matrix times sparse column vector."""
        out = {}
        for (i, j), x in self.entries.items():
            c = vec.get(j)
            if c:
                y = out.get(i)
                y = x * c if y is None else y + x * c
                if y:
                    out[i] = y
                elif i in out:
                    del out[i]
        return out

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch("%dx%d times %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        by_row = {}
        for (i, j), x in other.entries.items():
            by_row.setdefault(i, []).append((j, x))
        entries = {}
        for (i, k), x in self.entries.items():
            for j, y in by_row.get(k, ()):
                key = (i, j)
                z = entries.get(key)
                z = x * y if z is None else z + x * y
                if z:
                    entries[key] = z
                elif key in entries:
                    del entries[key]
        return Matrix(self.rows, other.cols, entries, self.field)

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("shape mismatch in matrix sum")
        entries = dict(self.entries)
        for k, v in other.entries.items():
            w = entries.get(k)
            w = v if w is None else w + v
            if w:
                entries[k] = w
            elif k in entries:
                del entries[k]
        return Matrix(self.rows, self.cols, entries, self.field)

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def scale(self, c):
        return Matrix(self.rows, self.cols, {k: c * v for k, v in self.entries.items()}, self.field)

    def transpose(self):
        return Matrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}, self.field)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self):
        return "Matrix(%dx%d, %d entries)" % (self.rows, self.cols, len(self.entries))


# ---------------------------------------------------------------- echelon

def _pivot_index(vec, prefer_high):
    return max(vec) if prefer_high else min(vec)


class Echelon:
    """Incremental fully-reduced echelon basis with class bookkeeping.

    Invariant: every stored row has coefficient 1 at its pivot and no
    entries at other pivots, so reduction is a single pass and canonical.
    Each row carries a "tag" vector (its class in whatever bookkeeping
    space the caller uses); reduce() reports the tag absorbed from the
    eliminated part.
    """

    def __init__(self, prefer_high=False):
        self.rows = {}   # pivot index -> row vector
        self.tags = {}   # pivot index -> tag vector
        self.prefer_high = prefer_high

    def reduce(self, vec):
        """Return (remainder, absorbed_tag) with vec = remainder + sum."""
        v = dict(vec)
        acc = {}
        for p in [i for i in v if i in self.rows]:
            c = v.get(p)
            if c:
                vec_axpy(v, -c, self.rows[p])
                vec_axpy(acc, c, self.tags[p])
        return v, acc

    def insert_reduced(self, rem, tag):
        """Store an already-reduced nonzero vector whose class is tag."""
        p = _pivot_index(rem, self.prefer_high)
        c = rem[p]
        row = {i: x / c for i, x in rem.items()}
        rtag = {i: x / c for i, x in tag.items()}
        for q, r in self.rows.items():
            cc = r.get(p)
            if cc:
                vec_axpy(r, -cc, row)
                self.tags[q] = vec_sub(self.tags[q], vec_scale(cc, rtag))
        self.rows[p] = row
        self.tags[p] = rtag
        return p

    def insert(self, vec, tag=None):
        """Reduce and insert; returns (pivot or None, absorbed_tag)."""
        rem, acc = self.reduce(vec)
        if not rem:
            return None, acc
        rtag = vec_sub(tag or {}, acc)
        return self.insert_reduced(rem, rtag), acc

    def __len__(self):
        return len(self.rows)


def _row_list(M):
    rows = {}
    for (i, j), x in M.entries.items():
        rows.setdefault(i, {})[j] = x
    return rows


def solve_linear(M, b):
    """Solve M x = b exactly; returns a sparse solution vector or None.

    Deterministic: pivots by lowest index, free variables set to zero.
    """
    for i in b:
        if not (0 <= i < M.rows):
            raise DimensionMismatch("rhs index %d outside %d rows" % (i, M.rows))
    one = M.field.one
    ech = Echelon()
    for j, col in enumerate(M.columns()):
        ech.insert(col, {j: one})
    rem, acc = ech.reduce(b)
    if rem:
        return None
    return acc


def kernel_basis(M):
    """Basis of the null space, deterministic (RREF, free vars in index order)."""
    ech = Echelon()
    rows = _row_list(M)
    for i in sorted(rows):
        ech.insert(rows[i])
    pivots = set(ech.rows)
    basis = []
    one = M.field.one
    for j in range(M.cols):
        if j in pivots:
            continue
        v = {j: one}
        for p, row in ech.rows.items():
            c = row.get(j)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def rank(M):
    ech = Echelon()
    rows = _row_list(M)
    for i in sorted(rows):
        ech.insert(rows[i])
    return len(ech)


class QuotientData:
    """Presentation of span(cycles)/span(boundaries) with a chosen section.

    project: Matrix with one column per input cycle -> quotient coordinates.
    section: quotient coordinates -> ambient representatives.
    classify: ambient -> quotient; agrees with project on the cycle span
      and kills an arbitrary complement (used to read off classes of
      vectors already known to be cycles).
    """

    def __init__(self, ambient, cycle_basis, boundary_basis, quotient_basis,
                 project, section, classify):
        self.ambient = ambient
        self.cycle_basis = cycle_basis
        self.boundary_basis = boundary_basis
        self.quotient_basis = quotient_basis
        self.project = project
        self.section = section
        self.classify = classify

    @property
    def dim(self):
        return len(self.quotient_basis)


def quotient_with_section(cycles, boundaries, ambient, field, prefer_high=False):
    """Quotient of span(cycles) by span(boundaries) with an exact section.

    Raises DimensionMismatch if the boundaries are not inside the cycle
    span.  Representatives are the echelon-reduced remainders of the input
    cycles taken in order.
    """
    span_check = Echelon(prefer_high)
    for c in cycles:
        span_check.insert(c)
    for b in boundaries:
        rem, _ = span_check.reduce(b)
        if rem:
            raise DimensionMismatch("boundary outside cycle span")

    one = field.one
    ech = Echelon(prefer_high)
    for b in boundaries:
        ech.insert(b, tag={})
    reps = []
    proj_cols = []
    for c in cycles:
        rem, acc = ech.reduce(c)
        if rem:
            j = len(reps)
            cpiv = rem[_pivot_index(rem, prefer_high)]
            ech.insert_reduced(rem, {j: cpiv})
            reps.append({i: x / cpiv for i, x in rem.items()})
            proj_cols.append(vec_axpy(acc, cpiv, {j: one}))
        else:
            proj_cols.append(acc)
    qdim = len(reps)
    cls_cols = []
    for i in range(ambient):
        rem, acc = ech.reduce({i: one})
        if rem:
            ech.insert_reduced(rem, {})
        cls_cols.append(acc)
    project = Matrix.from_columns(qdim, proj_cols, field)
    classify = Matrix.from_columns(qdim, cls_cols, field)
    section = Matrix.from_columns(ambient, reps, field)
    return QuotientData(ambient, list(cycles), list(boundaries), reps,
                        project, section, classify)
