"""Finite-dimensional unital associative algebras by structure constants.

An FDAlgebra stores mul[i][j] = coordinate vector of e_i * e_j.  All the
predicates used downstream live here: validation, centers, radicals
(Dickson trace form, characteristic 0), module projectivity via an affine
splitting solve, central idempotent splitting over split fields, and the
Wedderburn block shape.
"""

from fractions import Fraction

from .fields import QQ, parse_field, field_to_json
from .linalg import (Mat, Subspace, kernel, rank, solve_affine_sparse,
                     NoSolution, ShapeMismatch)
from .reports import ViolationReport


class NotAGroup(ValueError):
    pass


class NotSplit(Exception):
    pass


class NotSemisimple(Exception):
    pass


class Inconclusive(Exception):
    pass


class FDAlgebra:
    def __init__(self, dim, mul, unit, field=QQ, name=None):
        self.dim = dim
        self.mul = mul          # mul[i][j] = list of scalars, length dim
        self.unit = list(unit)  # coordinates of 1
        self.field = field
        self.name = name

    # -- element arithmetic ----------------------------------------------

    def zero_vec(self):
        return [self.field.zero] * self.dim

    def basis_vec(self, i):
        v = self.zero_vec()
        v[i] = self.field.one
        return v

    def mul_vec(self, x, y):
        out = self.zero_vec()
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                c = a * b
                for k, s in enumerate(self.mul[i][j]):
                    if s:
                        out[k] = out[k] + c * s
        return out

    def left_mult_matrix(self, x):
        M = Mat.zero(self.dim, self.dim, self.field)
        for j in range(self.dim):
            col = self.mul_vec(x, self.basis_vec(j))
            for i, v in enumerate(col):
                M.data[i][j] = v
        return M

    def right_mult_matrix(self, x):
        M = Mat.zero(self.dim, self.dim, self.field)
        for j in range(self.dim):
            col = self.mul_vec(self.basis_vec(j), x)
            for i, v in enumerate(col):
                M.data[i][j] = v
        return M

    def mul_matrix(self):
        """Multiplication as a matrix A tensor A -> A (kron convention)."""
        M = Mat.zero(self.dim, self.dim * self.dim, self.field)
        for i in range(self.dim):
            for j in range(self.dim):
                for k, s in enumerate(self.mul[i][j]):
                    if s:
                        M.data[k][i * self.dim + j] = s
        return M

    def unit_matrix(self):
        """The unit map k -> A as a dim x 1 matrix."""
        return Mat.column(self.unit, self.field)

    def is_commutative(self):
        return self.noncommutative_witness() is None

    def noncommutative_witness(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.mul[i][j] != self.mul[j][i]:
                    return (i, j)
        return None

    def power_vec(self, x, n):
        out = list(self.unit)
        for _ in range(n):
            out = self.mul_vec(out, x)
        return out

    # -- serialization ----------------------------------------------------

    def to_json(self):
        triples = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in enumerate(self.mul[i][j]):
                    if c:
                        triples.append({"i": i, "j": j, "k": k,
                                        "c": self.field.format(c)})
        return {"field": field_to_json(self.field),
                "dim": self.dim,
                "unit": [self.field.format(c) for c in self.unit],
                "mul": triples}

    @classmethod
    def from_json(cls, doc):
        field = parse_field(doc["field"])
        dim = int(doc["dim"])
        mul = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for t in doc["mul"]:
            mul[int(t["i"])][int(t["j"])][int(t["k"])] = field.parse(t["c"])
        unit = [field.parse(c) for c in doc["unit"]]
        return cls(dim, mul, unit, field)

    def __repr__(self):
        return "FDAlgebra(dim %d%s)" % (
            self.dim, ", %s" % self.name if self.name else "")


def validate_algebra(A):
    """Check associativity on all basis triples and the two-sided unit law."""
    rep = ViolationReport()
    for i in range(A.dim):
        ei = A.basis_vec(i)
        u = A.mul_vec(A.unit, ei)
        rep.require(u == ei, "unit", (i,), note="1*e_%d != e_%d" % (i, i))
        u = A.mul_vec(ei, A.unit)
        rep.require(u == ei, "unit", (i,), note="e_%d*1 != e_%d" % (i, i))
    for i in range(A.dim):
        for j in range(A.dim):
            ij = A.mul[i][j]
            for k in range(A.dim):
                lhs = A.mul_vec(ij, A.basis_vec(k))
                rhs = A.mul_vec(A.basis_vec(i), A.mul[j][k])
                rep.require(lhs == rhs, "associativity", (i, j, k))
    return rep


# ---------------------------------------------------------------------------
# constructors


def check_group_table(table):
    """Return (identity index, inverse list) or raise NotAGroup."""
    n = len(table)
    for row in table:
        if len(row) != n or any(not 0 <= x < n for x in row):
            raise NotAGroup("table is not n x n over range(n)")
    e = None
    for i in range(n):
        if all(table[i][j] == j and table[j][i] == j for j in range(n)):
            e = i
            break
    if e is None:
        raise NotAGroup("no identity element")
    inv = [None] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == e and table[j][i] == e:
                inv[i] = j
        if inv[i] is None:
            raise NotAGroup("element %d has no inverse" % i)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise NotAGroup("associativity fails at (%d,%d,%d)"
                                    % (i, j, k))
    return e, inv


def group_algebra(table, field=QQ, name=None):
    e, _ = check_group_table(table)
    n = len(table)
    mul = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mul[i][j][table[i][j]] = field.one
    unit = [field.zero] * n
    unit[e] = field.one
    return FDAlgebra(n, mul, unit, field, name=name or "k[G]")


def monoid_algebra(table, identity, field=QQ, name=None):
    """Like group_algebra but only requires a unital associative table."""
    n = len(table)
    mul = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mul[i][j][table[i][j]] = field.one
    unit = [field.zero] * n
    unit[identity] = field.one
    A = FDAlgebra(n, mul, unit, field, name=name or "k[M]")
    if not validate_algebra(A).ok:
        raise ValueError("table is not a unital monoid")
    return A


def matrix_algebra(n, field=QQ):
    """Full matrix algebra with basis e_{ab}, index a*n + b."""
    d = n * n
    mul = [[[field.zero] * d for _ in range(d)] for _ in range(d)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b == c:
                        mul[a * n + b][c * n + e][a * n + e] = field.one
    unit = [field.zero] * d
    for a in range(n):
        unit[a * n + a] = field.one
    return FDAlgebra(d, mul, unit, field, name="M_%d" % n)


def product_field_algebra(n, field=QQ):
    """k^n with coordinatewise product (functions on an n-point set)."""
    mul = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        mul[i][i][i] = field.one
    unit = [field.one] * n
    return FDAlgebra(n, mul, unit, field, name="k^%d" % n)


def opposite(A):
    mul = [[A.mul[j][i] for j in range(A.dim)] for i in range(A.dim)]
    return FDAlgebra(A.dim, mul, A.unit, A.field,
                     name=(A.name or "A") + "^op")


def enveloping(A):
    """A tensor A^op, basis index i*dim + j (kron convention)."""
    return tensor_algebra(A, opposite(A), name=(A.name or "A") + "^e")


def tensor_algebra(A, B, name=None):
    d = A.dim * B.dim
    field = A.field
    mul = [[None] * d for _ in range(d)]
    for i1 in range(A.dim):
        for j1 in range(B.dim):
            r = i1 * B.dim + j1
            for i2 in range(A.dim):
                ai = A.mul[i1][i2]
                for j2 in range(B.dim):
                    bj = B.mul[j1][j2]
                    v = [field.zero] * d
                    for k1, a in enumerate(ai):
                        if a:
                            for k2, b in enumerate(bj):
                                if b:
                                    v[k1 * B.dim + k2] = a * b
                    mul[r][i2 * B.dim + j2] = v
    unit = [field.zero] * d
    for k1, a in enumerate(A.unit):
        if a:
            for k2, b in enumerate(B.unit):
                if b:
                    unit[k1 * B.dim + k2] = a * b
    return FDAlgebra(d, mul, unit, field, name=name)


def subalgebra_on_rows(A, basis_rows):
    """The subalgebra of A spanned by reduced basis rows (distinct pivots),
    as an FDAlgebra together with the inclusion matrix.  Coordinates are
    read off at the pivots; raises ValueError if the span is not closed
    under multiplication or misses the unit."""
    field = A.field
    m = len(basis_rows)
    pivots = [next(i for i, c in enumerate(row) if c) for row in basis_rows]

    def coords(vec):
        out = [vec[p] / basis_rows[k][pivots[k]] for k, p in enumerate(pivots)]
        rec = [field.zero] * A.dim
        for k, c in enumerate(out):
            if c:
                for i, x in enumerate(basis_rows[k]):
                    if x:
                        rec[i] = rec[i] + c * x
        if rec != list(vec):
            raise ValueError("vector outside the subalgebra span")
        return out

    mul = [[None] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            prod = A.mul_vec(list(basis_rows[a]), list(basis_rows[b]))
            mul[a][b] = coords(prod)
    unit = coords(A.unit)
    sub = FDAlgebra(m, mul, unit, field, name="subalgebra")
    incl = Mat.from_cols([list(r) for r in basis_rows], A.dim, field)
    return sub, incl


def direct_product(A, B):
    d = A.dim + B.dim
    field = A.field
    mul = [[[field.zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in enumerate(A.mul[i][j]):
                mul[i][j][k] = c
    for i in range(B.dim):
        for j in range(B.dim):
            for k, c in enumerate(B.mul[i][j]):
                mul[A.dim + i][A.dim + j][A.dim + k] = c
    unit = list(A.unit) + list(B.unit)
    return FDAlgebra(d, mul, unit, field)


# ---------------------------------------------------------------------------
# morphisms and modules


def check_algebra_morphism(phi, A, B, tag="morphism"):
    """phi: Mat (dim B x dim A).  Checks phi(1) = 1 and multiplicativity."""
    rep = ViolationReport()
    rep.require(phi.matvec(A.unit) == B.unit, tag + ":unit")
    for i in range(A.dim):
        fi = phi.matvec(A.basis_vec(i))
        for j in range(A.dim):
            lhs = phi.matvec(A.mul[i][j])
            rhs = B.mul_vec(fi, phi.matvec(A.basis_vec(j)))
            rep.require(lhs == rhs, tag + ":multiplicative", (i, j))
    return rep


def check_algebra_antimorphism(phi, A, B, tag="antimorphism"):
    rep = ViolationReport()
    rep.require(phi.matvec(A.unit) == B.unit, tag + ":unit")
    for i in range(A.dim):
        fi = phi.matvec(A.basis_vec(i))
        for j in range(A.dim):
            lhs = phi.matvec(A.mul[i][j])
            rhs = B.mul_vec(phi.matvec(A.basis_vec(j)), fi)
            rep.require(lhs == rhs, tag + ":antimultiplicative", (i, j))
    return rep


class ModuleOverA:
    """A finite-dimensional left or right module, given by the action
    matrices of the algebra basis elements."""

    def __init__(self, algebra, dim, action, side="left"):
        self.algebra = algebra
        self.dim = dim
        self.action = action  # list of dim(A) matrices, dim x dim
        self.side = side

    def act_matrix(self, x):
        """Action matrix of an algebra element x (coordinate vector)."""
        M = Mat.zero(self.dim, self.dim, self.algebra.field)
        for i, c in enumerate(x):
            if c:
                M = M + self.action[i].scale(c)
        return M

    def validate(self):
        rep = ViolationReport()
        A = self.algebra
        one = self.act_matrix(A.unit)
        rep.require(one == Mat.identity(self.dim, A.field), "module:unital")
        for i in range(A.dim):
            for j in range(A.dim):
                prod = self.act_matrix(A.mul[i][j])
                if self.side == "left":
                    comp = self.action[i] * self.action[j]
                else:
                    comp = self.action[j] * self.action[i]
                rep.require(prod == comp, "module:action", (i, j))
        return rep


def regular_module(A, side="left"):
    if side == "left":
        action = [A.left_mult_matrix(A.basis_vec(i)) for i in range(A.dim)]
    else:
        action = [A.right_mult_matrix(A.basis_vec(i)) for i in range(A.dim)]
    return ModuleOverA(A, A.dim, action, side)


def is_projective(M):
    """Decide projectivity of a finite-dimensional module by solving for a
    module-map section of the free cover A^g -> M built on the module's
    basis as generators.  Returns (flag, section columns or None)."""
    A = M.algebra
    field = A.field
    g = M.dim
    nA = A.dim
    free_dim = g * nA      # A^g, coordinates (slot, algebra basis)
    # pi: A^g -> M,  (slot t, a) -> a . m_t  (or m_t . a on the right)
    pi = Mat.zero(M.dim, free_dim, field)
    for t in range(g):
        for a in range(nA):
            col = M.action[a].col(t) if M.side == "left" \
                else M.action[a].col(t)
            for i, v in enumerate(col):
                pi.data[i][t * nA + a] = v
    # unknown sigma: M -> A^g, entries s[(t*nA+a), m]; constraints:
    #   pi . sigma = id_M
    #   sigma(x . m) = x . sigma(m) for algebra basis x
    nunk = free_dim * M.dim

    def unk(r, c):
        return r * M.dim + c

    rows = []
    rhs = []
    for i in range(M.dim):
        for m in range(M.dim):
            row = {}
            for r in range(free_dim):
                if pi.data[i][r]:
                    row[unk(r, m)] = pi.data[i][r]
            rows.append(row)
            rhs.append(field.one if i == m else field.zero)
    # module-map condition per algebra basis element x:
    # for each target slot t, algebra coordinate b, source m:
    #   sum_m' sigma[(t,b), m'] X[m', m]  = sum_a sigma[(t,a), m] * (x-action
    #   on A in coordinate b), where on A^g the action is componentwise
    #   left mult (left modules) or right mult by x (right modules).
    for xi in range(nA):
        X = M.action[xi]
        actA = A.left_mult_matrix(A.basis_vec(xi)) if M.side == "left" \
            else A.right_mult_matrix(A.basis_vec(xi))
        for t in range(g):
            for b in range(nA):
                for m in range(M.dim):
                    row = {}
                    for mp in range(M.dim):
                        if X.data[mp][m]:
                            row[unk(t * nA + b, mp)] = \
                                row.get(unk(t * nA + b, mp), field.zero) \
                                + X.data[mp][m]
                    for a in range(nA):
                        if actA.data[b][a]:
                            key = unk(t * nA + a, m)
                            row[key] = row.get(key, field.zero) \
                                - actA.data[b][a]
                    row = {k: v for k, v in row.items() if v}
                    if row:
                        rows.append(row)
                        rhs.append(field.zero)
    try:
        x, _ = solve_affine_sparse(rows, rhs, nunk, field)
    except NoSolution:
        return False, None
    sigma = Mat.zero(free_dim, M.dim, field)
    for r in range(free_dim):
        for c in range(M.dim):
            sigma.data[r][c] = x[unk(r, c)]
    return True, sigma


# ---------------------------------------------------------------------------
# center, radical, idempotents, shape


def center(A):
    """Kernel of the stacked commutator maps x -> x e_i - e_i x."""
    rows = []
    for i in range(A.dim):
        L = A.left_mult_matrix(A.basis_vec(i))
        R = A.right_mult_matrix(A.basis_vec(i))
        C = R - L  # columns: e_j e_i - e_i e_j
        rows.extend(C.data)
    stacked = Mat(len(rows), A.dim, rows, A.field)
    return kernel(stacked)


def jacobson_radical(A):
    """Kernel of the regular trace form T_ij = tr(L_i L_j) (Dickson;
    valid in characteristic 0)."""
    L = [A.left_mult_matrix(A.basis_vec(i)) for i in range(A.dim)]
    T = Mat.zero(A.dim, A.dim, A.field)
    for i in range(A.dim):
        for j in range(A.dim):
            P = L[i] * L[j]
            tr = A.field.zero
            for k in range(A.dim):
                tr = tr + P.data[k][k]
            T.data[i][j] = tr
    return kernel(T)


def _poly_eval_alg(A, coeffs, w, e):
    """Evaluate sum coeffs[i] * w^i inside A, with e as the unit (so w^0=e)."""
    out = A.zero_vec()
    p = list(e)
    for c in coeffs:
        if c:
            for k in range(A.dim):
                if p[k]:
                    out[k] = out[k] + c * p[k]
        p = A.mul_vec(p, w)
    return out


def _candidate_roots(field, coeffs):
    """Candidate roots used by the central splitting: 0, rational roots by
    the rational root theorem when the polynomial is rational, and roots of
    unity of the ambient cyclotomic order (times rational candidates)."""
    cands = [field.zero]
    rationals = set()
    if field == QQ:
        # clear denominators, then apply the rational root theorem to the
        # integer polynomial (ignoring a trailing power of x)
        lcm = 1
        for c in coeffs:
            lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in coeffs]
        while ints and ints[0] == 0:
            ints.pop(0)
        if ints:
            a0, an = abs(ints[0]), abs(ints[-1])
            for p in _divisors(a0):
                for q in _divisors(an):
                    rationals.add(Fraction(p, q))
                    rationals.add(Fraction(-p, q))
        cands.extend(sorted(rationals))
    else:
        for r in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3,
                  Fraction(1, 3), Fraction(-1, 3)):
            rationals.add(Fraction(r))
        N = field.order
        for r in sorted(rationals):
            for k in range(N):
                cands.append(field.zeta(k) * field.from_rational(r))
        cands.extend(field.from_rational(r) for r in sorted(rationals))
    return cands


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    out = [d for d in range(1, abs(n) + 1) if n % d == 0]
    return out or [1]


def _poly_eval(coeffs, x, field):
    acc = field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _split_linear(coeffs, field):
    """Factor the monic polynomial into linear factors over the candidate
    root set.  Returns list of (root, multiplicity) or None if it does not
    split over the candidates."""
    work = list(coeffs)
    roots = []
    cands = _candidate_roots(field, coeffs)
    while len(work) > 1:
        found = None
        for lam in cands:
            if not _poly_eval(work, lam, field):
                found = lam
                break
        if found is None:
            return None
        # synthetic division of work by (x - lam)
        n = len(work) - 1
        q = [field.zero] * n
        q[n - 1] = work[n]
        for i in range(n - 2, -1, -1):
            q[i] = work[i + 1] + found * q[i + 1]
        work = q
        for r, m in roots:
            if r == found:
                roots.remove((r, m))
                roots.append((found, m + 1))
                break
        else:
            roots.append((found, 1))
    return roots


def minimal_polynomial(A, w, e, max_deg):
    """Monic minimal polynomial of w acting in the unital commutative
    algebra with unit e, by the first linear dependence among e, w, w^2..."""
    field = A.field
    powers = [list(e)]
    for d in range(1, max_deg + 2):
        powers.append(A.mul_vec(powers[-1], w))
        # look for dependence: sum c_i powers[i] = 0 with c_d = 1
        M = Mat.from_cols(powers[:-1], A.dim, field)
        try:
            sol, _ = solve_affine_sparse(
                [{j: M.data[i][j] for j in range(M.cols) if M.data[i][j]}
                 for i in range(A.dim)],
                [v for v in powers[-1]], M.cols, field)
        except NoSolution:
            continue
        coeffs = [-c for c in sol] + [field.one]
        return coeffs
    raise RuntimeError("no minimal polynomial found (not an algebra element?)")


def central_idempotents_split(A):
    """Complete list of primitive orthogonal central idempotents, when all
    needed minimal polynomials split into linear factors over the candidate
    roots; raises NotSplit otherwise."""
    field = A.field
    Z = center(A)
    components = [list(A.unit)]
    changed = True
    while changed:
        changed = False
        for e in list(components):
            for zrow in Z.basis_rows:
                w = A.mul_vec(e, list(zrow))
                coeffs = minimal_polynomial(A, w, e, A.dim)
                if len(coeffs) <= 2:
                    continue  # scalar action on this component
                roots = _split_linear(coeffs, field)
                if roots is None:
                    raise NotSplit("minimal polynomial does not split: %s"
                                   % (coeffs,))
                if len(roots) < 2:
                    continue
                # CRT idempotents for each distinct root
                new = []
                for lam, m in roots:
                    # q = prod over other roots of (x-mu)^mult
                    qpoly = [field.one]
                    for mu, mm in roots:
                        if mu == lam:
                            continue
                        for _ in range(mm):
                            qpoly = _poly_shift_mul(qpoly, mu, field)
                    # need inverse of q modulo (x-lam)^m: for m == 1 it is
                    # the scalar 1/q(lam); larger m via power series of
                    # 1/q around lam, truncated at degree m-1.
                    inv = _inverse_mod_power(qpoly, lam, m, field)
                    proj = _poly_mul_generic(qpoly, inv, field)
                    val = _poly_eval_alg(A, proj, w, e)
                    if any(val):
                        new.append(val)
                if len(new) >= 2:
                    components.remove(e)
                    components.extend(new)
                    changed = True
                    break
            if changed:
                break
    return components


def _poly_shift_mul(p, mu, field):
    """p(x) * (x - mu)."""
    out = [field.zero] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i + 1] = out[i + 1] + c
        out[i] = out[i] - mu * c
    return out


def _poly_mul_generic(a, b, field):
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


def _inverse_mod_power(q, lam, m, field):
    """Inverse of q(x) modulo (x - lam)^m, as a polynomial in x.
    Computed via the Taylor expansion of 1/q at lam."""
    # shift: Q(u) = q(lam + u); invert as a power series in u to order m-1;
    # then substitute u = x - lam.
    Q = _poly_taylor_shift(q, lam, field)
    inv = [field.zero] * m
    inv[0] = field.one / Q[0]
    for k in range(1, m):
        acc = field.zero
        for i in range(1, k + 1):
            if i < len(Q) and Q[i]:
                acc = acc + Q[i] * inv[k - i]
        inv[k] = -acc / Q[0]
    # substitute back u = x - lam
    out = [field.zero]
    upow = [field.one]
    for k in range(m):
        if inv[k]:
            term = [inv[k] * c for c in upow]
            out = _poly_add(out, term, field)
        upow = _poly_shift_mul(upow, lam, field)
    return out


def _poly_taylor_shift(p, lam, field):
    """Coefficients of p(lam + u) as a polynomial in u."""
    out = [field.zero] * len(p)
    # Horner: p(lam + u) built by repeated synthetic division
    work = list(p)
    for k in range(len(p)):
        # remainder of division by (u) after shifting = p^(k)(lam)/k!
        acc = field.zero
        for c in reversed(work):
            acc = acc * lam + c
        out[k] = acc
        # divide work by (x - lam): quotient
        n = len(work) - 1
        if n == 0:
            break
        q = [field.zero] * n
        q[n - 1] = work[n]
        for i in range(n - 2, -1, -1):
            q[i] = work[i + 1] + lam * q[i + 1]
        work = q
    return out


def _poly_add(a, b, field):
    out = [field.zero] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = out[i] + x
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return out


def wedderburn_shape(A):
    """Multiset (sorted tuple) of matrix block sizes of a semisimple A.
    Exact when the center splits; raises NotSemisimple or Inconclusive."""
    if jacobson_radical(A).dim != 0:
        raise NotSemisimple()
    Z = center(A)
    if Z.dim == 1:
        n = _isqrt_exact(A.dim)
        if n is None:
            raise Inconclusive("central simple block of non-square dim")
        return (n,)
    if A.is_commutative():
        return (1,) * A.dim
    try:
        idems = central_idempotents_split(A)
    except NotSplit as exc:
        raise Inconclusive(str(exc))
    shape = []
    for e in idems:
        Re = A.right_mult_matrix(e)
        block_dim = rank(Re)
        n = _isqrt_exact(block_dim)
        if n is None:
            raise Inconclusive("block of non-square dim %d" % block_dim)
        shape.append(n)
    return tuple(sorted(shape))


def _isqrt_exact(d):
    n = int(round(d ** 0.5))
    for c in (n - 1, n, n + 1):
        if c >= 0 and c * c == d:
            return c
    return None
