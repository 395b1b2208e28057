"""Deterministic exact linear algebra over Q and Q(zeta_N).

Everything downstream (axiom checks, coinvariants, Galois maps) reduces to
row reduction, kernels, affine solves and quotient presentations computed
here.  Matrices are dense row-major lists of exact scalars; multiplication
skips zero entries, so sparse structure still pays off.  All normal forms
are canonical (RREF with first-nonzero pivoting), which makes subspace
equality a plain entrywise comparison.

Kronecker convention, fixed once for the whole package:
    kron(A, B) acts on pure tensors by (i tensor j) -> i*dimB + j,
i.e. the second factor varies fastest.
"""

from .fields import QQ


class ShapeMismatch(ValueError):
    pass


class NoSolution(Exception):
    """Signal: the affine system is infeasible.  Not a fault."""


class Mat:
    __slots__ = ("rows", "cols", "data", "field")

    def __init__(self, rows, cols, data, field=QQ):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeMismatch("bad matrix data shape")
        self.rows = rows
        self.cols = cols
        self.data = data
        self.field = field

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, rows, cols, field=QQ):
        z = field.zero
        return cls(rows, cols, [[z] * cols for _ in range(rows)], field)

    @classmethod
    def identity(cls, n, field=QQ):
        M = cls.zero(n, n, field)
        for i in range(n):
            M.data[i][i] = field.one
        return M

    @classmethod
    def from_rows(cls, rows_list, field=QQ):
        r = len(rows_list)
        c = len(rows_list[0]) if r else 0
        return cls(r, c, [list(row) for row in rows_list], field)

    @classmethod
    def from_cols(cls, cols_list, ambient_dim, field=QQ):
        M = cls.zero(ambient_dim, len(cols_list), field)
        for j, col in enumerate(cols_list):
            for i, v in enumerate(col):
                M.data[i][j] = v
        return M

    @classmethod
    def column(cls, vec, field=QQ):
        return cls(len(vec), 1, [[v] for v in vec], field)

    # -- basic ops --------------------------------------------------------

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def copy(self):
        return Mat(self.rows, self.cols, [list(r) for r in self.data], self.field)

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def transpose(self):
        return Mat(self.cols, self.rows,
                   [[self.data[i][j] for i in range(self.rows)]
                    for j in range(self.cols)], self.field)

    def __add__(self, other):
        self._same_shape(other)
        return Mat(self.rows, self.cols,
                   [[a + b for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.data, other.data)], self.field)

    def __sub__(self, other):
        self._same_shape(other)
        return Mat(self.rows, self.cols,
                   [[a - b for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.data, other.data)], self.field)

    def __neg__(self):
        return Mat(self.rows, self.cols,
                   [[-a for a in r] for r in self.data], self.field)

    def scale(self, c):
        return Mat(self.rows, self.cols,
                   [[c * a for a in r] for r in self.data], self.field)

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeMismatch("%dx%d vs %dx%d"
                                % (self.rows, self.cols, other.rows, other.cols))

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatch("cannot multiply %dx%d by %dx%d"
                                % (self.rows, self.cols, other.rows, other.cols))
        out = Mat.zero(self.rows, other.cols, self.field)
        for i in range(self.rows):
            ri = self.data[i]
            oi = out.data[i]
            for k in range(self.cols):
                a = ri[k]
                if a:
                    rk = other.data[k]
                    for j in range(other.cols):
                        b = rk[j]
                        if b:
                            oi[j] = oi[j] + a * b
        return out

    def matvec(self, vec):
        if len(vec) != self.cols:
            raise ShapeMismatch("matvec length mismatch")
        out = [self.field.zero] * self.rows
        for i in range(self.rows):
            ri = self.data[i]
            acc = self.field.zero
            for k, v in enumerate(vec):
                if v and ri[k]:
                    acc = acc + ri[k] * v
            out[i] = acc
        return out

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) \
            and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols,
                     tuple(tuple(r) for r in self.data)))

    def is_zero(self):
        return all(not v for r in self.data for v in r)

    def __repr__(self):
        return "Mat(%dx%d)" % (self.rows, self.cols)


def kron(A, B):
    """Kronecker product with (i tensor j) -> i*B.rows + j on row indices
    and (k tensor l) -> k*B.cols + l on column indices."""
    out = Mat.zero(A.rows * B.rows, A.cols * B.cols, A.field)
    for i in range(A.rows):
        for k in range(A.cols):
            a = A.data[i][k]
            if not a:
                continue
            for j in range(B.rows):
                rb = B.data[j]
                ro = out.data[i * B.rows + j]
                base = k * B.cols
                for l in range(B.cols):
                    if rb[l]:
                        ro[base + l] = a * rb[l]
    return out


def rref(M):
    """Reduced row echelon form with the leftmost-first-nonzero pivot rule.
    Returns (R, pivot column list)."""
    R = [list(r) for r in M.data]
    rows, cols = M.rows, M.cols
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if R[i][c]:
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        piv = R[r][c]
        R[r] = [v / piv for v in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return Mat(rows, cols, R, M.field), pivots


def rank(M):
    return len(rref(M)[1])


def _echelon_dict(vectors, field):
    """Canonical RREF of a spanning set of dict-vectors {col: value}.
    Returns {pivot_col: reduced dict row}, fully back-substituted; same
    result as dense rref on the stacked matrix, faster on sparse input."""
    rows = {}  # pivot column -> dict col -> value
    for vec in vectors:
        v = {c: x for c, x in vec.items() if x}
        while v:
            p = min(v)
            if p in rows:
                f = v[p]
                for c, x in rows[p].items():
                    nv = v.get(c, field.zero) - f * x
                    if nv:
                        v[c] = nv
                    elif c in v:
                        del v[c]
            else:
                piv = v[p]
                row = {c: x / piv for c, x in v.items()}
                # reduce the new row against existing pivots to its right
                for q in sorted(rows):
                    if q in row:
                        f = row[q]
                        for c, x in rows[q].items():
                            nv = row.get(c, field.zero) - f * x
                            if nv:
                                row[c] = nv
                            elif c in row:
                                del row[c]
                # eliminate the new pivot from previously inserted rows
                for q, other in rows.items():
                    if p in other:
                        f = other[p]
                        for c, x in row.items():
                            nv = other.get(c, field.zero) - f * x
                            if nv:
                                other[c] = nv
                            elif c in other:
                                del other[c]
                rows[p] = row
                break
    return rows, sorted(rows)


def _echelon_rows(vectors, ncols, field):
    """Canonical RREF rows (dense, nonzero only) of a spanning set of
    vectors given as lists or dicts."""
    dicts = []
    for vec in vectors:
        if isinstance(vec, dict):
            dicts.append(vec)
        else:
            dicts.append({c: x for c, x in enumerate(vec) if x})
    rows, pivots = _echelon_dict(dicts, field)
    out = []
    for p in pivots:
        r = [field.zero] * ncols
        for c, x in rows[p].items():
            r[c] = x
        out.append(r)
    return out, pivots


class Subspace:
    """A subspace of k^n with a canonical (RREF-row) basis, so equality of
    subspaces is plain equality of basis matrices."""

    __slots__ = ("ambient_dim", "basis_rows", "pivots", "field")

    def __init__(self, ambient_dim, basis_rows, pivots, field):
        self.ambient_dim = ambient_dim
        self.basis_rows = basis_rows
        self.pivots = pivots
        self.field = field

    @classmethod
    def from_spanning(cls, ambient_dim, vectors, field=QQ):
        rows, pivots = _echelon_rows(vectors, ambient_dim, field)
        return cls(ambient_dim, rows, pivots, field)

    @classmethod
    def zero(cls, ambient_dim, field=QQ):
        return cls(ambient_dim, [], [], field)

    @property
    def dim(self):
        return len(self.basis_rows)

    @property
    def basis(self):
        """Basis vectors as the columns of a matrix (canonical order)."""
        return Mat.from_cols(self.basis_rows, self.ambient_dim, self.field)

    def contains(self, vec):
        v = list(vec)
        for row, p in zip(self.basis_rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def contains_all(self, vectors):
        return all(self.contains(v) for v in vectors)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.basis_rows == other.basis_rows)

    def __le__(self, other):
        return other.contains_all(self.basis_rows)

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.ambient_dim)


def kernel(M):
    """Null space of M with canonical basis."""
    R, pivots = rref(M)
    field = M.field
    free = [c for c in range(M.cols) if c not in pivots]
    vecs = []
    for f in free:
        v = [field.zero] * M.cols
        v[f] = field.one
        for r, p in enumerate(pivots):
            if R.data[r][f]:
                v[p] = -R.data[r][f]
        vecs.append(v)
    return Subspace.from_spanning(M.cols, vecs, field)


def image(M):
    """Column space of M with canonical basis."""
    return Subspace.from_spanning(
        M.rows, [M.col(j) for j in range(M.cols)], M.field)


def solve_affine(constraint, rhs):
    """Solve constraint * x = rhs.  Returns (particular solution, kernel
    Subspace) or raises NoSolution."""
    if len(rhs) != constraint.rows:
        raise ShapeMismatch("rhs length mismatch")
    field = constraint.field
    aug = Mat(constraint.rows, constraint.cols + 1,
              [list(r) + [b] for r, b in zip(constraint.data, rhs)], field)
    R, pivots = rref(aug)
    if constraint.cols in pivots:
        raise NoSolution()
    x = [field.zero] * constraint.cols
    for r, p in enumerate(pivots):
        x[p] = R.data[r][constraint.cols]
    return x, kernel(constraint)


def is_invertible(M):
    return M.rows == M.cols and rank(M) == M.rows


def inverse(M):
    """Exact inverse of a square matrix; raises NoSolution if singular."""
    if M.rows != M.cols:
        raise ShapeMismatch("inverse of non-square matrix")
    n = M.rows
    field = M.field
    aug = Mat(n, 2 * n,
              [list(M.data[i]) + [field.one if j == i else field.zero
                                  for j in range(n)]
               for i in range(n)], field)
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise NoSolution("matrix is singular")
    return Mat(n, n, [r[n:] for r in R.data], field)


def solve_affine_sparse(constraint_rows, rhs, ncols, field=QQ, want_kernel=False):
    """Sparse variant of solve_affine.  constraint_rows is a list of dicts
    {col: value}; rhs a dense list of the same length.  Unknowns occupy
    columns 0..ncols-1; the right-hand side is treated as column ncols.
    Returns (particular, kernel_vectors_or_None) or raises NoSolution."""
    aug = []
    for row, b in zip(constraint_rows, rhs):
        r = dict(row)
        if b:
            r[ncols] = b
        if r:
            aug.append(r)
    rows, pivots = _echelon_dict(aug, field)
    if ncols in rows:
        raise NoSolution()
    x = [field.zero] * ncols
    for p, row in rows.items():
        x[p] = row.get(ncols, field.zero)
    kern = None
    if want_kernel:
        pivset = set(rows)
        kern = []
        for f in range(ncols):
            if f in pivset:
                continue
            v = [field.zero] * ncols
            v[f] = field.one
            for p, row in rows.items():
                if f in row:
                    v[p] = -row[f]
            kern.append(v)
    return x, kern


class QuotientPresentation:
    """Presentation of k^n / span(relations): a projection onto the
    non-pivot coordinates and a section embedding them back."""

    __slots__ = ("ambient_dim", "relations", "proj", "section", "dim", "field")

    def __init__(self, ambient_dim, relations, proj, section, field):
        self.ambient_dim = ambient_dim
        self.relations = relations
        self.proj = proj
        self.section = section
        self.dim = proj.rows
        self.field = field


def quotient_by(ambient_dim, relation_vectors, field=QQ):
    """Quotient of k^ambient_dim by the span of the relation vectors.
    proj sends a vector to its coordinates at the non-pivot columns after
    reduction by the canonical relation rows; section embeds those back as
    the canonical representatives."""
    rel = Subspace.from_spanning(ambient_dim, relation_vectors, field)
    pivset = set(rel.pivots)
    nonpiv = [c for c in range(ambient_dim) if c not in pivset]
    q = len(nonpiv)
    proj = Mat.zero(q, ambient_dim, field)
    for qi, c in enumerate(nonpiv):
        proj.data[qi][c] = field.one
    for row, p in zip(rel.basis_rows, rel.pivots):
        # e_p = -sum over non-pivot coords of the relation row
        for qi, c in enumerate(nonpiv):
            if row[c]:
                proj.data[qi][p] = -row[c]
    section = Mat.zero(ambient_dim, q, field)
    for qi, c in enumerate(nonpiv):
        section.data[c][qi] = field.one
    return QuotientPresentation(ambient_dim, rel, proj, section, field)

def mat_to_json(M):
    """Sparse matrix form: omitted entries are zero."""
    entries = []
    for i in range(M.rows):
        for j in range(M.cols):
            v = M.data[i][j]
            if v:
                entries.append({"r": i, "c": j, "v": M.field.format(v)})
    return {"rows": M.rows, "cols": M.cols, "entries": entries}


def mat_from_json(doc, field=QQ):
    M = Mat.zero(int(doc["rows"]), int(doc["cols"]), field)
    for e in doc["entries"]:
        M.data[int(e["r"])][int(e["c"])] = field.parse(e["v"])
    return M
