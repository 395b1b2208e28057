"""Instance constructors: finite groupoids and their two algebras, weak
Hopf algebras, smash products over noncommutative bases, coupled pairs from
characters, twisted group algebras, classical covering instances from free
group actions, and the brute-force automorphism computation.

Every constructor returns data that the checkers in hopfalgebroid / galois
accept verbatim; the test suite runs the full axiom suites on all of them.
"""

import itertools

from .fields import QQ, CyclotomicField
from .linalg import Mat, kron, inverse, solve_affine, NoSolution, image
from .algebra import (FDAlgebra, check_group_table, product_field_algebra,
                      opposite, central_idempotents_split, NotSplit,
                      subalgebra_on_rows)
from .hopfalgebroid import BialgebroidData, HopfAlgebroidData
from .reports import ViolationReport


class InvalidGroupoid(ValueError):
    pass


class NotAnAction(ValueError):
    pass


class NotFree(ValueError):
    pass


class NotACharacter(ValueError):
    pass


class NotCommutative(ValueError):
    pass


class SizeLimit(ValueError):
    pass


class WeakAxiomViolation(Exception):
    def __init__(self, report):
        self.report = report
        super().__init__("weak Hopf axioms fail: %s" % ", ".join(report.tags()))


# ---------------------------------------------------------------------------
# group tables

def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def trivial_table():
    return [[0]]


def direct_product_table(t1, t2):
    n1, n2 = len(t1), len(t2)

    def idx(a, b):
        return a * n2 + b
    out = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a in range(n1):
        for b in range(n2):
            for c in range(n1):
                for d in range(n2):
                    out[idx(a, b)][idx(c, d)] = idx(t1[a][c], t2[b][d])
    return out


def klein_table():
    return direct_product_table(cyclic_table(2), cyclic_table(2))


def s3_table():
    """Symmetric group on {0,1,2}; elements are the 6 permutation tuples in
    lexicographic order, product = composition (right factor first)."""
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            comp = tuple(p[q[i]] for i in range(3))
            row.append(index[comp])
        table.append(row)
    return table


def and_monoid_table():
    """The two-element multiplicative monoid {0, 1}; 1 is the identity, 0 is
    absorbing.  Not a group: 0 has no inverse."""
    return [[0, 0], [0, 1]]


# ---------------------------------------------------------------------------
# groupoids

class FiniteGroupoid:
    """Objects, morphisms with src/tgt, a partial composition table, units
    and inverses.  compose[(f, g)] = f o g, defined iff src(f) == tgt(g)
    (g is applied first)."""

    def __init__(self, objects, src, tgt, compose, units, inv):
        self.objects = list(objects)
        self.src = list(src)
        self.tgt = list(tgt)
        self.compose = dict(compose)
        self.units = list(units)
        self.inv = list(inv)

    @property
    def n_objects(self):
        return len(self.objects)

    @property
    def n_morphisms(self):
        return len(self.src)

    def validate(self):
        n = self.n_morphisms
        m = self.n_objects
        if len(self.tgt) != n or len(self.inv) != n or len(self.units) != m:
            raise InvalidGroupoid("inconsistent sizes")
        for f in range(n):
            if not (0 <= self.src[f] < m and 0 <= self.tgt[f] < m):
                raise InvalidGroupoid("src/tgt out of range")
        for x in range(m):
            u = self.units[x]
            if self.src[u] != x or self.tgt[u] != x:
                raise InvalidGroupoid("unit of object %r has wrong ends" % x)
        for f in range(n):
            for g in range(n):
                defined = (f, g) in self.compose
                composable = self.src[f] == self.tgt[g]
                if defined != composable:
                    raise InvalidGroupoid(
                        "composition domain wrong at (%d, %d)" % (f, g))
                if defined:
                    h = self.compose[(f, g)]
                    if self.src[h] != self.src[g] or self.tgt[h] != self.tgt[f]:
                        raise InvalidGroupoid(
                            "composite has wrong ends at (%d, %d)" % (f, g))
        for x in range(m):
            u = self.units[x]
            for f in range(n):
                if self.tgt[f] == x and self.compose[(u, f)] != f:
                    raise InvalidGroupoid("left unit law fails at %d" % f)
                if self.src[f] == x and self.compose[(f, u)] != f:
                    raise InvalidGroupoid("right unit law fails at %d" % f)
        for f in range(n):
            for g in range(n):
                if (f, g) not in self.compose:
                    continue
                for h in range(n):
                    if (g, h) not in self.compose:
                        continue
                    if self.compose[(self.compose[(f, g)], h)] != \
                            self.compose[(f, self.compose[(g, h)])]:
                        raise InvalidGroupoid(
                            "associativity fails at (%d,%d,%d)" % (f, g, h))
        for f in range(n):
            fi = self.inv[f]
            if self.src[fi] != self.tgt[f] or self.tgt[fi] != self.src[f]:
                raise InvalidGroupoid("inverse of %d has wrong ends" % f)
            if self.compose[(f, fi)] != self.units[self.tgt[f]]:
                raise InvalidGroupoid("f o inv(f) is not a unit at %d" % f)
            if self.compose[(fi, f)] != self.units[self.src[f]]:
                raise InvalidGroupoid("inv(f) o f is not a unit at %d" % f)
        return True

    def to_json(self):
        return {
            "objects": list(self.objects),
            "morphisms": [{"id": f, "src": self.src[f], "tgt": self.tgt[f]}
                          for f in range(self.n_morphisms)],
            "compose": [[f, g, h] for (f, g), h in sorted(self.compose.items())],
            "inv": [[f, self.inv[f]] for f in range(self.n_morphisms)],
            "units": list(self.units),
        }

    @classmethod
    def from_json(cls, doc):
        morphs = doc["morphisms"]
        src = [None] * len(morphs)
        tgt = [None] * len(morphs)
        for entry in morphs:
            src[entry["id"]] = entry["src"]
            tgt[entry["id"]] = entry["tgt"]
        compose = {(f, g): h for f, g, h in doc["compose"]}
        inv = [None] * len(morphs)
        for f, g in doc["inv"]:
            inv[f] = g
        return cls(doc["objects"], src, tgt, compose, doc["units"], inv)


def group_groupoid(table):
    """One-object groupoid with morphisms a group."""
    e, inv = check_group_table(table)
    n = len(table)
    compose = {(f, g): table[f][g] for f in range(n) for g in range(n)}
    return FiniteGroupoid([0], [0] * n, [0] * n, compose, [e], inv)


def discrete_groupoid(n):
    compose = {(x, x): x for x in range(n)}
    return FiniteGroupoid(list(range(n)), list(range(n)), list(range(n)),
                          compose, list(range(n)), list(range(n)))


def indiscrete_groupoid(n):
    """Exactly one morphism x -> y for every pair; morphism (x, y) has
    index y * n + x (source x, target y)."""
    def idx(x, y):
        return y * n + x
    src = [0] * (n * n)
    tgt = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            src[idx(x, y)] = x
            tgt[idx(x, y)] = y
    compose = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                compose[(idx(y, z), idx(x, y))] = idx(x, z)
    units = [idx(x, x) for x in range(n)]
    inv = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            inv[idx(x, y)] = idx(y, x)
    return FiniteGroupoid(list(range(n)), src, tgt, compose, units, inv)


def action_groupoid(table, act):
    """Objects = points, morphism (g, x): x -> g.x, composition
    (g, h.x) o (h, x) = (gh, x)."""
    gs = GSet(table, act)
    gs.validate()
    n = len(table)
    npts = gs.n_points

    def idx(g, x):
        return g * npts + x
    src = [0] * (n * npts)
    tgt = [0] * (n * npts)
    for g in range(n):
        for x in range(npts):
            src[idx(g, x)] = x
            tgt[idx(g, x)] = act[g][x]
    compose = {}
    for g in range(n):
        for h in range(n):
            for x in range(npts):
                compose[(idx(g, act[h][x]), idx(h, x))] = idx(table[g][h], x)
    e, inv_g = check_group_table(table)
    units = [idx(e, x) for x in range(npts)]
    inv = [0] * (n * npts)
    for g in range(n):
        for x in range(npts):
            inv[idx(g, x)] = idx(inv_g[g], act[g][x])
    return FiniteGroupoid(list(range(npts)), src, tgt, compose, units, inv)


def deck_groupoid(gset):
    """Finite shadow of the deck-transformation groupoid of a free action:
    objects = orbits, morphisms (o, g) all endomorphisms, composing through
    the group law.  Morphism (o, g) has index o * |G| + g."""
    gset.validate()
    if not gset.is_free():
        raise NotFree("action is not free")
    orbits = gset.orbits()
    n = len(gset.table)
    m = len(orbits)

    def idx(o, g):
        return o * n + g
    src = [0] * (m * n)
    tgt = [0] * (m * n)
    for o in range(m):
        for g in range(n):
            src[idx(o, g)] = o
            tgt[idx(o, g)] = o
    compose = {}
    for o in range(m):
        for g in range(n):
            for h in range(n):
                compose[(idx(o, g), idx(o, h))] = idx(o, gset.table[g][h])
    e, inv_g = check_group_table(gset.table)
    units = [idx(o, e) for o in range(m)]
    inv = [idx(o, inv_g[g]) for o in range(m) for g in range(n)]
    return FiniteGroupoid(list(range(m)), src, tgt, compose, units, inv)


# ---------------------------------------------------------------------------
# G-sets

class GSet:
    """A finite group acting on a finite set; act[g][y] = g.y."""

    def __init__(self, table, act):
        self.table = table
        self.act = act

    @property
    def n_points(self):
        return len(self.act[0]) if self.act else 0

    def validate(self):
        e, _ = check_group_table(self.table)
        n = len(self.table)
        npts = self.n_points
        if len(self.act) != n:
            raise NotAnAction("one permutation per group element required")
        for g in range(n):
            if sorted(self.act[g]) != list(range(npts)):
                raise NotAnAction("element %d does not act bijectively" % g)
        if self.act[e] != list(range(npts)):
            raise NotAnAction("identity does not act as identity")
        for g in range(n):
            for h in range(n):
                for y in range(npts):
                    if self.act[g][self.act[h][y]] != \
                            self.act[self.table[g][h]][y]:
                        raise NotAnAction(
                            "action fails at (%d, %d, %d)" % (g, h, y))
        return True

    def is_free(self):
        e, _ = check_group_table(self.table)
        for g in range(len(self.table)):
            if g == e:
                continue
            if any(self.act[g][y] == y for y in range(self.n_points)):
                return False
        return True

    def orbits(self):
        seen = set()
        out = []
        for y in range(self.n_points):
            if y in seen:
                continue
            orb = sorted({self.act[g][y] for g in range(len(self.table))})
            seen.update(orb)
            out.append(orb)
        return out

    def orbit_index(self):
        orbs = self.orbits()
        where = [0] * self.n_points
        for i, orb in enumerate(orbs):
            for y in orb:
                where[y] = i
        return where


def regular_gset(table):
    return GSet(table, [list(row) for row in table])


def disjoint_union_gset(gset, copies):
    """The same action repeated on several disjoint copies of the set."""
    npts = gset.n_points
    act = []
    for g in range(len(gset.table)):
        row = []
        for c in range(copies):
            row.extend(c * npts + y for y in gset.act[g])
        act.append(row)
    return GSet(gset.table, act)


# ---------------------------------------------------------------------------
# assembling a Hopf algebroid from a right bialgebroid plus antipode

def _swap_matrix(d, field):
    M = Mat.zero(d * d, d * d, field)
    for i in range(d):
        for j in range(d):
            M.data[j * d + i][i * d + j] = field.one
    return M


def assemble_hopf_algebroid(rightb, S, left_coproduct_lift=None, name=None):
    """Complete a right bialgebroid with antipode S into full Hopf
    algebroid data.  The left base is the opposite of the right base, the
    left source is t_R and the left target is s_R (their images swap under
    S).  The left coproduct defaults to the S-conjugate of the right one,
    and the left counit is solved from mu (id x S) Delta_R = s_L eps_L."""
    H = rightb.total
    field = H.field
    d = H.dim
    L = opposite(rightb.base)
    sL = rightb.t
    tL = rightb.s
    if left_coproduct_lift is None:
        Sinv = inverse(S)
        left_coproduct_lift = _swap_matrix(d, field) * \
            (kron(Sinv, Sinv) * (rightb.coproduct_lift * S))
    I = Mat.identity(d, field)
    P = H.mul_matrix() * (kron(I, S) * rightb.coproduct_lift)
    eps_cols = []
    for j in range(d):
        try:
            x, _ = solve_affine(sL, P.col(j))
        except NoSolution:
            raise ValueError("mu (id x S) Delta does not land in the image "
                             "of the would-be left source; no left counit")
        eps_cols.append(x)
    epsL = Mat.from_cols(eps_cols, rightb.base.dim, field)
    leftb = BialgebroidData(H, L, "left", sL, tL, left_coproduct_lift, epsL,
                            name=None if name is None else name + ":left")
    return HopfAlgebroidData(leftb, rightb, S, name=name)


# ---------------------------------------------------------------------------
# the two algebras of a groupoid

def groupoid_algebra(G, field=QQ):
    """Span of the morphisms with composition-or-zero product; a Hopf
    algebroid over functions on the objects.  The grouplike coproduct
    f -> f (x) f, counit dual to the source, antipode = inversion."""
    G.validate()
    d = G.n_morphisms
    m = G.n_objects
    mul = [[[field.zero] * d for _ in range(d)] for _ in range(d)]
    for (f, g), h in G.compose.items():
        mul[f][g][h] = field.one
    unit = [field.zero] * d
    for u in G.units:
        unit[u] = field.one
    H = FDAlgebra(d, mul, unit, field, name="groupoid algebra")
    base = product_field_algebra(m, field)
    iota = Mat.zero(d, m, field)
    for x in range(m):
        iota.data[G.units[x]][x] = field.one
    dR = Mat.zero(d * d, d, field)
    for f in range(d):
        dR.data[f * d + f][f] = field.one
    epsR = Mat.zero(m, d, field)
    for f in range(d):
        epsR.data[G.src[f]][f] = field.one
    S = Mat.zero(d, d, field)
    for f in range(d):
        S.data[G.inv[f]][f] = field.one
    rightb = BialgebroidData(H, base, "right", iota, iota, dR, epsR)
    return assemble_hopf_algebroid(rightb, S, name="groupoid algebra")


def function_algebroid(G, field=QQ):
    """Functions on the morphisms with pointwise product; the coproduct is
    dual to composition, the counit dual to the units, the antipode dual to
    inversion.  Commutative, with coinciding one-sided structures up to the
    source/target swap."""
    G.validate()
    d = G.n_morphisms
    m = G.n_objects
    H = product_field_algebra(d, field)
    H.name = "functions on morphisms"
    base = product_field_algebra(m, field)
    sR = Mat.zero(d, m, field)
    tR = Mat.zero(d, m, field)
    for f in range(d):
        sR.data[f][G.src[f]] = field.one
        tR.data[f][G.tgt[f]] = field.one
    dR = Mat.zero(d * d, d, field)
    for (g, h), f in G.compose.items():
        dR.data[g * d + h][f] = field.one
    epsR = Mat.zero(m, d, field)
    for x in range(m):
        epsR.data[x][G.units[x]] = field.one
    S = Mat.zero(d, d, field)
    for f in range(d):
        S.data[G.inv[f]][f] = field.one
    rightb = BialgebroidData(H, base, "right", sR, tR, dR, epsR)
    return assemble_hopf_algebroid(rightb, S, name="function algebroid")


def group_hopf_algebra(table, field=QQ):
    """kG as a Hopf algebroid over k (one-object groupoid algebra)."""
    return groupoid_algebra(group_groupoid(table), field)


def monoid_bialgebra(table, identity, field=QQ):
    """The grouplike bialgebra of a finite monoid, as a one-sided
    bialgebroid over k.  Not Hopf unless the monoid is a group."""
    n = len(table)
    mul = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mul[i][j][table[i][j]] = field.one
    unit = [field.zero] * n
    unit[identity] = field.one
    H = FDAlgebra(n, mul, unit, field, name="monoid algebra")
    base = product_field_algebra(1, field)
    eta = Mat.from_cols([unit], n, field)
    dR = Mat.zero(n * n, n, field)
    for i in range(n):
        dR.data[i * n + i][i] = field.one
    eps = Mat(1, n, [[field.one] * n], field)
    return BialgebroidData(H, base, "right", eta, eta, dR, eps)


# ---------------------------------------------------------------------------
# reconstruction

def _characters(A):
    """Characters of a commutative split algebra as (idempotent, row) pairs,
    ordered by the leading coordinate of the idempotent."""
    if not A.is_commutative():
        raise NotCommutative("characters need a commutative algebra")
    idems = central_idempotents_split(A)
    field = A.field
    out = []
    for q in idems:
        pivot = next(i for i, c in enumerate(q) if c)
        chi = []
        for i in range(A.dim):
            v = A.mul_vec(A.basis_vec(i), q)
            c = v[pivot] / q[pivot]
            if v != [c * x for x in q]:
                raise NotSplit("a central idempotent does not define a "
                               "character")
            chi.append(c)
        out.append((q, chi))
    out.sort(key=lambda pair: next(
        i for i, c in enumerate(pair[0]) if c))
    return out


def reconstruct_groupoid(Hd):
    """Rebuild a finite groupoid from a commutative split Hopf algebroid:
    objects are characters of the base, morphisms characters of the total
    algebra, ends by composing with s/t, composition dual to the coproduct,
    inversion dual to the antipode."""
    R = Hd.rightb
    H = R.total
    field = H.field
    obj_chars = _characters(R.base)
    mor_chars = _characters(H)
    m, d = len(obj_chars), len(mor_chars)
    obj_rows = [Mat(1, R.base.dim, [chi], field) for _, chi in obj_chars]
    mor_rows = [Mat(1, H.dim, [chi], field) for _, chi in mor_chars]

    def find_object(row):
        for x in range(m):
            if row == obj_rows[x]:
                return x
        raise NotSplit("a character of the total algebra does not restrict "
                       "to a character of the base")

    def find_morphism(row):
        for f in range(d):
            if row == mor_rows[f]:
                return f
        return None

    src = [find_object(mor_rows[f] * R.s) for f in range(d)]
    tgt = [find_object(mor_rows[f] * R.t) for f in range(d)]
    compose = {}
    for f in range(d):
        for g in range(d):
            w = kron(mor_rows[f], mor_rows[g]) * R.coproduct_lift
            if w.is_zero():
                continue
            h = find_morphism(w)
            if h is None:
                raise NotSplit("composition character is not a point")
            compose[(f, g)] = h
    units = [find_morphism(obj_rows[x] * R.counit) for x in range(m)]
    if any(u is None for u in units):
        raise NotSplit("a unit character is not a point")
    inv = [find_morphism(mor_rows[f] * Hd.antipode) for f in range(d)]
    if any(i is None for i in inv):
        raise NotSplit("an inverse character is not a point")
    G = FiniteGroupoid(list(range(m)), src, tgt, compose, units, inv)
    G.validate()
    return G


# ---------------------------------------------------------------------------
# coupled pairs from characters

def coupled_from_character(Hd, sigma):
    """From a Hopf algebra (base k) and a character sigma, build the
    twisted partner structure and the coupling map:
        Delta_2(h) = h_(1) (x) sigma(S(h_(2))) h_(3),
        eps_2 = sigma,
        coupling(h) = sigma(h_(1)) S(h_(2)).
    Returns (H1, H2, coupling); HopfAlgebroidData(H1, H2, coupling) is the
    assembled algebroid."""
    R = Hd.rightb
    H = R.total
    if R.base.dim != 1:
        raise ValueError("needs a Hopf algebra over k")
    field = H.field
    d = H.dim
    sig = Mat(1, d, [list(sigma)], field)
    one = field.one
    # character test
    if sig.matvec(H.unit)[0] != one:
        raise NotACharacter("sigma(1) != 1")
    for i in range(d):
        for j in range(d):
            lhs = sig.matvec(H.mul[i][j])[0]
            if lhs != sigma[i] * sigma[j]:
                raise NotACharacter("sigma is not multiplicative at "
                                    "(%d, %d)" % (i, j))
    S = Hd.antipode
    dR = R.coproduct_lift
    I = Mat.identity(d, field)
    d3 = kron(dR, I) * dR
    sigS = sig * S
    U = kron(sigS, I)                       # H (x) H -> H, y (x) z -> sig(S y) z
    d2lift = kron(I, U) * d3
    coupling = kron(sig, S) * dR
    eta = Mat.from_cols([H.unit], d, field)
    base = product_field_algebra(1, field)
    H1 = BialgebroidData(H, base, "left", eta, eta, dR, R.counit,
                         name="coupled pair, first structure")
    H2 = BialgebroidData(H, base, "right", eta, eta, d2lift, sig,
                         name="coupled pair, twisted structure")
    return H1, H2, coupling


def twisted_antipode(Hd, sigma):
    """S_2(h) = sigma(h_(1)) S(h_(2)) sigma(h_(3)) for the twisted partner."""
    R = Hd.rightb
    H = R.total
    field = H.field
    d = H.dim
    sig = Mat(1, d, [list(sigma)], field)
    I = Mat.identity(d, field)
    d3 = kron(R.coproduct_lift, I) * R.coproduct_lift
    return kron(sig, kron(Hd.antipode, sig)) * d3


# ---------------------------------------------------------------------------
# weak Hopf algebras

class WeakHopfData:
    def __init__(self, algebra, coproduct, counit, antipode, name=None):
        self.algebra = algebra          # FDAlgebra, dim d
        self.coproduct = coproduct      # Mat d^2 x d
        self.counit = counit            # Mat 1 x d
        self.antipode = antipode        # Mat d x d
        self.name = name


def _pair_mul(H, u, v):
    """Factorwise product of two vectors in H (x) H."""
    d = H.dim
    field = H.field
    out = [field.zero] * (d * d)
    for i in range(d):
        for j in range(d):
            cu = u[i * d + j]
            if not cu:
                continue
            for k in range(d):
                for l in range(d):
                    cv = v[k * d + l]
                    if not cv:
                        continue
                    a = H.mul[i][k]
                    b = H.mul[j][l]
                    c = cu * cv
                    for p in range(d):
                        if a[p]:
                            cap = c * a[p]
                            for q in range(d):
                                if b[q]:
                                    out[p * d + q] = out[p * d + q] + cap * b[q]
    return out


def _triple_mul(H, u, v):
    """Factorwise product of two vectors in H (x) H (x) H."""
    d = H.dim
    field = H.field
    out = [field.zero] * (d ** 3)
    nz_u = [(i, c) for i, c in enumerate(u) if c]
    nz_v = [(i, c) for i, c in enumerate(v) if c]
    for iu, cu in nz_u:
        i1, r = divmod(iu, d * d)
        i2, i3 = divmod(r, d)
        for iv, cv in nz_v:
            j1, r2 = divmod(iv, d * d)
            j2, j3 = divmod(r2, d)
            a, b, cc = H.mul[i1][j1], H.mul[i2][j2], H.mul[i3][j3]
            c = cu * cv
            for p in range(d):
                if not a[p]:
                    continue
                cp = c * a[p]
                for q in range(d):
                    if not b[q]:
                        continue
                    cq = cp * b[q]
                    for s in range(d):
                        if cc[s]:
                            key = p * d * d + q * d + s
                            out[key] = out[key] + cq * cc[s]
    return out


def check_weak_hopf(W):
    """Axioms of a weak Hopf algebra: multiplicative coassociative weakly
    unital coproduct, counital weakly multiplicative counit, and the three
    antipode identities."""
    rep = ViolationReport()
    H = W.algebra
    d = H.dim
    field = H.field
    D = W.coproduct
    eps = W.counit
    S = W.antipode
    I = Mat.identity(d, field)
    # (i) multiplicative
    for i in range(d):
        Di = D.col(i)
        for j in range(d):
            lhs = D.matvec(H.mul[i][j])
            rhs = _pair_mul(H, Di, D.col(j))
            rep.require(lhs == rhs, "weak:coproduct-multiplicative", (i, j))
    # (i) coassociative
    rep.require(kron(D, I) * D == kron(I, D) * D, "weak:coassociative")
    # (i) weak unitality
    w = D.matvec(H.unit)
    D2unit = (kron(D, I) * D).matvec(H.unit)
    w_oplus_1 = [field.zero] * (d ** 3)   # Delta(1) (x) 1
    one_oplus_w = [field.zero] * (d ** 3)  # 1 (x) Delta(1)
    for i in range(d):
        for j in range(d):
            c = w[i * d + j]
            if not c:
                continue
            for k in range(d):
                if H.unit[k]:
                    w_oplus_1[i * d * d + j * d + k] = c * H.unit[k]
                    one_oplus_w[k * d * d + i * d + j] = c * H.unit[k]
    rep.require(_triple_mul(H, w_oplus_1, one_oplus_w) == D2unit,
                "weak:unitality", note="(D(1) x 1)(1 x D(1)) != D2(1)")
    rep.require(_triple_mul(H, one_oplus_w, w_oplus_1) == D2unit,
                "weak:unitality", note="(1 x D(1))(D(1) x 1) != D2(1)")
    # (iii) counital
    rep.require(kron(eps, I) * D == I, "weak:counital", note="left")
    rep.require(kron(I, eps) * D == I, "weak:counital", note="right")
    # (iii) weak multiplicativity
    def eps_of(vec):
        return eps.matvec(vec)[0]
    for x in range(d):
        ex = H.basis_vec(x)
        for y in range(d):
            Dy = D.col(y)
            for z in range(d):
                ez = H.basis_vec(z)
                mid = eps_of(H.mul_vec(H.mul[x][y], ez))
                lhs = field.zero
                rhs = field.zero
                for i in range(d):
                    for j in range(d):
                        c = Dy[i * d + j]
                        if not c:
                            continue
                        lhs = lhs + c * eps_of(H.mul[x][i]) * \
                            eps_of(H.mul[j][z])
                        rhs = rhs + c * eps_of(H.mul[x][j]) * \
                            eps_of(H.mul[i][z])
                rep.require(lhs == mid, "weak:counit-multiplicative",
                            (x, y, z, 1))
                rep.require(rhs == mid, "weak:counit-multiplicative",
                            (x, y, z, 2))
    # projections for (v)
    pL, pR = weak_projections(W)
    D2 = kron(D, I) * D
    for h in range(d):
        trip = D2.col(h)
        s_mid = H.zero_vec()   # S(h1) h2 S(h3)
        hs = H.zero_vec()      # h1 S(h2)
        sh = H.zero_vec()      # S(h1) h2
        Dh = D.col(h)
        for idx, c in enumerate(trip):
            if not c:
                continue
            i1, r = divmod(idx, d * d)
            i2, i3 = divmod(r, d)
            v = H.mul_vec(H.mul_vec(S.matvec(H.basis_vec(i1)),
                                    H.basis_vec(i2)),
                          S.matvec(H.basis_vec(i3)))
            for k in range(d):
                if v[k]:
                    s_mid[k] = s_mid[k] + c * v[k]
        for idx, c in enumerate(Dh):
            if not c:
                continue
            i, j = divmod(idx, d)
            v = H.mul_vec(H.basis_vec(i), S.matvec(H.basis_vec(j)))
            u = H.mul_vec(S.matvec(H.basis_vec(i)), H.basis_vec(j))
            for k in range(d):
                if v[k]:
                    hs[k] = hs[k] + c * v[k]
                if u[k]:
                    sh[k] = sh[k] + c * u[k]
        rep.require(s_mid == S.col(h), "weak:antipode", (h, 1),
                    note="S(h1) h2 S(h3) != S(h)")
        rep.require(hs == pL.col(h), "weak:antipode", (h, 2),
                    note="h1 S(h2) != pL(h)")
        rep.require(sh == pR.col(h), "weak:antipode", (h, 3),
                    note="S(h1) h2 != pR(h)")
    return rep


def weak_projections(W):
    """The idempotents pL(h) = eps(1_(1) h) 1_(2) and
    pR(h) = 1_(1) eps(h 1_(2))."""
    H = W.algebra
    d = H.dim
    field = H.field
    w = W.coproduct.matvec(H.unit)
    pL = Mat.zero(d, d, field)
    pR = Mat.zero(d, d, field)
    for h in range(d):
        eh = H.basis_vec(h)
        for i in range(d):
            for j in range(d):
                c = w[i * d + j]
                if not c:
                    continue
                cl = W.counit.matvec(H.mul_vec(H.basis_vec(i), eh))[0]
                if cl:
                    pL.data[j][h] = pL.data[j][h] + c * cl
                cr = W.counit.matvec(H.mul_vec(eh, H.basis_vec(j)))[0]
                if cr:
                    pR.data[i][h] = pR.data[i][h] + c * cr
    return pL, pR


def _subalgebra(H, basis_rows):
    return subalgebra_on_rows(H, basis_rows)


def weak_hopf_to_algebroid(W):
    """Base algebras from the canonical idempotents, source = inclusion,
    target t(r) = eps(r 1_(1)) 1_(2), counit = pR, coproduct = the weak
    coproduct projected to the base tensor square; the left structure uses
    the same coproduct lift over the opposite base."""
    rep = check_weak_hopf(W)
    if not rep.ok:
        raise WeakAxiomViolation(rep)
    H = W.algebra
    field = H.field
    d = H.dim
    pL, pR = weak_projections(W)
    Rspace = image(pR)
    Rbase, incl = _subalgebra(H, Rspace.basis_rows)
    m = Rbase.dim
    w = W.coproduct.matvec(H.unit)
    tR = Mat.zero(d, m, field)
    for r in range(m):
        rv = incl.col(r)
        for i in range(d):
            for j in range(d):
                c = w[i * d + j]
                if not c:
                    continue
                cr = W.counit.matvec(H.mul_vec(rv, H.basis_vec(i)))[0]
                if cr:
                    tR.data[j][r] = tR.data[j][r] + c * cr
    # eps_R = pR in base coordinates
    pivots = [next(i for i, c in enumerate(row) if c)
              for row in Rspace.basis_rows]
    epsR = Mat.zero(m, d, field)
    for h in range(d):
        v = pR.col(h)
        for k, p in enumerate(pivots):
            epsR.data[k][h] = v[p] / Rspace.basis_rows[k][p]
    rightb = BialgebroidData(H, Rbase, "right", incl, tR, W.coproduct, epsR)
    return assemble_hopf_algebroid(rightb, W.antipode,
                                   left_coproduct_lift=W.coproduct,
                                   name="weak Hopf conversion")


def groupoid_weak_hopf(G, field=QQ):
    """The groupoid algebra as a weak Hopf algebra: Delta(f) = f (x) f,
    eps(f) = 1, S(f) = inverse."""
    G.validate()
    Hd = groupoid_algebra(G, field)
    H = Hd.total
    d = H.dim
    D = Mat.zero(d * d, d, field)
    for f in range(d):
        D.data[f * d + f][f] = field.one
    eps = Mat(1, d, [[field.one] * d], field)
    return WeakHopfData(H, D, eps, Hd.antipode, name="groupoid weak Hopf")


# ---------------------------------------------------------------------------
# smash products over a noncommutative base

def smash_algebroid(A, table, action):
    """The enveloping algebra of A smashed with a group acting by algebra
    automorphisms: carrier A (x) A^op (x) kG, product
    ((a x a')#g)((b x b')#h) = (a x a') alpha_g(b x b') # gh.
    Right bialgebroid over A with s(a) = (a x 1)#e, t(a) = (1 x a)#e,
    eps((a x a')#g) = aa', Delta((a x a')#g) = (1 x a')#g (x) (a x 1)#g and
    antipode (a x a')#g -> alpha_{g^{-1}}(a' x a)#g^{-1}."""
    e, inv_g = check_group_table(table)
    n = len(table)
    a = A.dim
    field = A.field
    if len(action) != n:
        raise NotAnAction("one automorphism per group element required")
    I_a = Mat.identity(a, field)
    for g in range(n):
        M = action[g]
        if M.rows != a or M.cols != a:
            raise NotAnAction("automorphism %d has wrong shape" % g)
        if M.matvec(A.unit) != A.unit:
            raise NotAnAction("element %d does not fix the unit" % g)
        for i in range(a):
            for j in range(a):
                if M.matvec(A.mul[i][j]) != \
                        A.mul_vec(M.col(i), M.col(j)):
                    raise NotAnAction(
                        "element %d is not multiplicative" % g)
    if action[e] != I_a:
        raise NotAnAction("identity must act as the identity")
    for g in range(n):
        for h in range(n):
            if action[g] * action[h] != action[table[g][h]]:
                raise NotAnAction("action is not a homomorphism at "
                                  "(%d, %d)" % (g, h))

    d = a * a * n

    def idx(i, j, g):
        return (i * a + j) * n + g

    mul = [[None] * d for _ in range(d)]
    for i in range(a):
        for j in range(a):
            for g in range(n):
                row = idx(i, j, g)
                for k in range(a):
                    uk = action[g].col(k)
                    left = A.mul_vec(A.basis_vec(i), uk)
                    for l in range(a):
                        vl = action[g].col(l)
                        right = A.mul_vec(vl, A.basis_vec(j))
                        for h in range(n):
                            col = idx(k, l, h)
                            vec = [field.zero] * d
                            gh = table[g][h]
                            for p in range(a):
                                if left[p]:
                                    for q in range(a):
                                        if right[q]:
                                            vec[idx(p, q, gh)] = \
                                                left[p] * right[q]
                            mul[row][col] = vec
    unit = [field.zero] * d
    for i in range(a):
        if A.unit[i]:
            for j in range(a):
                if A.unit[j]:
                    unit[idx(i, j, e)] = A.unit[i] * A.unit[j]
    H = FDAlgebra(d, mul, unit, field, name="smash product")

    sR = Mat.zero(d, a, field)
    tR = Mat.zero(d, a, field)
    for r in range(a):
        for j in range(a):
            if A.unit[j]:
                sR.data[idx(r, j, e)][r] = A.unit[j]
                tR.data[idx(j, r, e)][r] = A.unit[j]
    # counit (a x a')#g -> alpha_{g^{-1}}(a a'); untwisted for trivial actions
    epsR = Mat.zero(a, d, field)
    for i in range(a):
        for j in range(a):
            prod = A.mul[i][j]
            for g in range(n):
                col = idx(i, j, g)
                tw = action[inv_g[g]].matvec(prod)
                for p in range(a):
                    epsR.data[p][col] = tw[p]
    dR = Mat.zero(d * d, d, field)
    for i in range(a):
        for j in range(a):
            for g in range(n):
                col = idx(i, j, g)
                for p in range(a):
                    if not A.unit[p]:
                        continue
                    for q in range(a):
                        if not A.unit[q]:
                            continue
                        r1 = idx(p, j, g)
                        r2 = idx(i, q, g)
                        dR.data[r1 * d + r2][col] = A.unit[p] * A.unit[q]
    S = Mat.zero(d, d, field)
    for i in range(a):
        for j in range(a):
            for g in range(n):
                col = idx(i, j, g)
                gi = inv_g[g]
                u = action[gi].col(j)
                v = action[gi].col(i)
                for p in range(a):
                    if u[p]:
                        for q in range(a):
                            if v[q]:
                                S.data[idx(p, q, gi)][col] = u[p] * v[q]
    rightb = BialgebroidData(H, A, "right", sR, tR, dR, epsR)
    return assemble_hopf_algebroid(rightb, S, name="smash algebroid")


# ---------------------------------------------------------------------------
# twisted group algebras

def twisted_group_algebra(n, t, field=None):
    """The group Z/n x Z/n with product twisted by the bicharacter
    alpha((a,b),(c,d)) = zeta_n^(t b c).  For t coprime to n this is a
    matrix algebra; at t = 0 it is the plain group algebra."""
    if field is None:
        field = QQ if n <= 2 else CyclotomicField(n)
    if n <= 2:
        def scal(m):
            return field.one if m % n == 0 or n == 1 else -field.one
    else:
        if not isinstance(field, CyclotomicField) or field.order % n:
            raise ValueError("field must contain an n-th root of unity")
        step = field.order // n

        def scal(m):
            return field.zeta(step * (m % n))
    d = n * n

    def idx(aa, bb):
        return (aa % n) * n + (bb % n)
    mul = [[None] * d for _ in range(d)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    vec = [field.zero] * d
                    vec[idx(a + c, b + e)] = scal(t * b * c)
                    mul[idx(a, b)][idx(c, e)] = vec
    unit = [field.zero] * d
    unit[idx(0, 0)] = field.one
    return FDAlgebra(d, mul, unit, field,
                     name="twisted group algebra (n=%d, t=%d)" % (n, t))


# ---------------------------------------------------------------------------
# classical covering instances

def classical_covering_instance(table, gset, field=QQ):
    """Functions on a free G-set over functions on its orbit space, with
    the coaction dual to the deck action.  Returns comodule-algebra data
    over the function algebroid of the deck groupoid."""
    from .galois import ComoduleAlgebraData
    gset.validate()
    if not gset.is_free():
        raise NotFree("action is not free")
    e, inv_g = check_group_table(table)
    n = len(table)
    G = deck_groupoid(gset)
    Hd = function_algebroid(G, field)
    dH = Hd.total.dim
    npts = gset.n_points
    B = product_field_algebra(npts, field)
    B.name = "functions on the total space"
    orbit_of = gset.orbit_index()
    m = len(gset.orbits())
    inclusion = Mat.zero(npts, m, field)
    for y in range(npts):
        inclusion.data[y][orbit_of[y]] = field.one
    rho = Mat.zero(npts * dH, npts, field)
    for z in range(npts):
        o = orbit_of[z]
        for g in range(n):
            y = gset.act[inv_g[g]][z]
            mor = o * n + g           # deck_groupoid morphism indexing
            rho.data[y * dH + mor][z] = field.one
    return ComoduleAlgebraData(Hd, B, inclusion, rho, rho,
                               name="classical covering")


def nontransitive_control_instance(field=QQ):
    """Functions on 4 points with the Z/2 swap action on two separate
    pairs, but with the declared base k (one pretended fiber): a valid
    comodule algebra whose coinvariants exceed the declared base and whose
    Galois map is rank deficient."""
    from .galois import ComoduleAlgebraData
    table = cyclic_table(2)
    Hd = function_algebroid(group_groupoid(table), field)
    dH = Hd.total.dim
    B = product_field_algebra(4, field)
    act = [[0, 1, 2, 3], [1, 0, 3, 2]]
    inclusion = Mat.from_cols([[field.one] * 4], 4, field)
    rho = Mat.zero(4 * dH, 4, field)
    for z in range(4):
        for g in range(2):
            rho.data[act[g][z] * dH + g][z] = field.one
    return ComoduleAlgebraData(Hd, B, inclusion, rho, rho,
                               name="nontransitive control")


# ---------------------------------------------------------------------------
# brute-force automorphisms of the forgetful functor

def theorem1_automorphisms(table):
    """Exhaustive search for the bijections of the regular G-set commuting
    with every equivariant self-map (the right multiplications).  Returns
    the resulting permutation group with a witness isomorphism from G."""
    e, inv_g = check_group_table(table)
    n = len(table)
    if n > 8:
        raise SizeLimit("exhaustive search limited to |G| <= 8")
    found = []
    for perm in itertools.permutations(range(n)):
        ok = True
        for h in range(n):
            for x in range(n):
                if perm[table[x][h]] != table[perm[x]][h]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(perm)
    index = {p: i for i, p in enumerate(found)}
    group_table = []
    for p in found:
        row = []
        for q in found:
            comp = tuple(p[q[x]] for x in range(n))
            row.append(index[comp])
        group_table.append(row)
    witness = []
    for g in range(n):
        lam = tuple(table[g][x] for x in range(n))
        witness.append(index[lam])
    return {"table": group_table, "perms": found, "witness": witness}


# ---------------------------------------------------------------------------
# permutation extraction from coverings of a point

def example7_extract(D):
    """For a covering of a point with split commutative B and commutative
    split Hopf algebra H, dualize the coaction to an action of the
    characters of H on the points of B; report the resulting subgroup of
    the symmetric group with transitivity and freeness flags."""
    B = D.B
    Hd = D.H
    H = Hd.total
    field = B.field
    if Hd.rightb.base.dim != 1:
        raise NotSplit("needs a Hopf algebra over k (covering of a point)")
    dR = Hd.rightb.coproduct_lift
    lift_unit = dR.matvec(H.unit)
    expect = [field.zero] * (H.dim * H.dim)
    for i in range(H.dim):
        if H.unit[i]:
            for j in range(H.dim):
                if H.unit[j]:
                    expect[i * H.dim + j] = H.unit[i] * H.unit[j]
    if lift_unit != expect:
        raise NotSplit("coproduct is not unital on this instance")
    pts = _characters(B)
    n = len(pts)
    if n != B.dim:
        raise NotSplit("B does not split into points")
    chars = _characters(H)
    if len(chars) != H.dim:
        raise NotSplit("H does not split into characters")
    pt_rows = [Mat(1, B.dim, [chi], field) for _, chi in pts]
    dH = H.dim
    perms = set()
    for _, gamma in chars:
        P = Mat.zero(B.dim, B.dim, field)
        for b in range(B.dim):
            col = D.rhoR_lift.col(b)
            for bp in range(B.dim):
                acc = field.zero
                for h in range(dH):
                    c = col[bp * dH + h]
                    if c:
                        acc = acc + c * gamma[h]
                P.data[bp][b] = acc
        perm = []
        for p in range(n):
            row = pt_rows[p] * P
            match = None
            for q in range(n):
                if row == pt_rows[q]:
                    match = q
                    break
            if match is None:
                raise NotSplit("a character does not act by a permutation")
            perm.append(match)
        perms.add(tuple(perm))
    # subgroup closure check
    closed = all(tuple(p[q[i]] for i in range(n)) in perms
                 for p in perms for q in perms)
    identity = tuple(range(n))
    transitive = len({p[0] for p in perms}) == n
    free = all(all(p[i] != i for i in range(n))
               for p in perms if p != identity)
    return {"order": len(perms), "permutations": sorted(perms),
            "transitive": transitive, "free": free, "closed": closed}
