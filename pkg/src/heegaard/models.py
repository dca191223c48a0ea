"""Fuchsian realizations of the surfaces the library computes on.

Closed genus-g surfaces are realized on the regular 4g-gon with vertex
angle 2pi/4g; the side pairings give matrix generators a1,b1,...,ag,bg
satisfying the standard relator [a1,b1]...[ag,bg].  Punctured surfaces
(used by the pants-move machinery) are realized as explicit finite covers
of the thrice-punctured sphere or the once-punctured torus, so their
groups are free and their peripheral classes are parabolic.

All models are immutable after construction; the caches they carry are
filled lazily but only ever grow, so read-only sharing is safe.
"""

import math

import numpy as np

from . import hyperbolic as hyp
from . import words as W


class Isometry:
    """A 2x2 real matrix of determinant 1 together with its trace type."""

    __slots__ = ("matrix", "kind")

    def __init__(self, matrix, tolerance):
        self.matrix = hyp.normalize_sign(np.asarray(matrix, dtype=float))
        self.kind = hyp.classify(self.matrix, tolerance)

    @property
    def trace(self):
        return self.matrix[0, 0] + self.matrix[1, 1]

    def __repr__(self):
        return "Isometry(kind=%s, trace=%.6f)" % (self.kind, self.trace)


class Axis:
    """Invariant geodesic of a hyperbolic isometry."""

    __slots__ = ("attracting_fixed_point", "repelling_fixed_point", "translation_length", "geodesic")

    def __init__(self, geodesic, translation_length):
        rep, att = geodesic.endpoint_angles()
        self.attracting_fixed_point = att
        self.repelling_fixed_point = rep
        self.translation_length = translation_length
        self.geodesic = geodesic


def axis_data(iso):
    """Axis of a hyperbolic isometry; rejects every other kind."""
    if iso.kind != "hyperbolic":
        raise ValueError("no axis: isometry is %s" % iso.kind)
    return Axis(hyp.Geodesic.from_matrix(iso.matrix), hyp.translation_length(iso.matrix))


class _ModelBase:
    def evaluate(self, word):
        """Product of generator matrices along a word (homomorphism)."""
        m = np.eye(2)
        for let in word:
            if not (1 <= abs(let) <= self.n_gens):
                raise ValueError("unknown generator letter %d" % let)
            g = self.gen_matrices[abs(let) - 1]
            m = m @ (g if let > 0 else hyp.sl2_inverse(g))
        return m

    def evaluate_word(self, word):
        return Isometry(self.evaluate(word), self.tolerance)

    def canonical_cyclic(self, word):
        return self.reducer.canonical_cyclic(word)

    def is_trivial(self, word):
        return self.reducer.is_trivial(word)

    def parse(self, text):
        return W.parse_word(text, self.n_gens)


class SurfaceModel(_ModelBase):
    """Closed orientable genus-g surface group, g >= 2, on the regular 4g-gon.

    generators: a1,b1,...,ag,bg encoded as letters 1..2g.  The relator
    [a1,b1]...[ag,bg] evaluates to +-identity within `tolerance`.
    """

    def __init__(self, genus, tolerance=1e-9):
        if genus < 2:
            raise ValueError("genus must be at least 2")
        self.genus = genus
        self.n_gens = 2 * genus
        self.tolerance = tolerance
        self.relator = W.surface_relator(genus)
        self.reducer = W.DehnReducer(self.relator)
        self.is_closed = True
        self.peripheral = ()

        n = 4 * genus
        self.inradius = math.acosh(1.0 / math.tan(math.pi / n))
        self.circumradius = math.acosh(1.0 / math.tan(math.pi / n) ** 2)
        pairings = _polygon_pairings(genus)
        # a_j pairs across side 4j, b_j across side 4j+3
        self.gen_matrices = []
        for j in range(genus):
            self.gen_matrices.append(pairings[4 * j])
            self.gen_matrices.append(pairings[4 * j + 3])
        self.side_pairings = pairings
        self.side_poles = _polygon_side_poles(genus)
        self.vertex_points = _polygon_vertices(genus)
        self._check()
        self._caches = {}

    def _check(self):
        m = hyp.normalize_sign(self.evaluate(self.relator))
        if np.max(np.abs(m - np.eye(2))) > self.tolerance:
            raise AssertionError("relator does not evaluate to the identity")
        for g in self.gen_matrices:
            if abs(abs(np.linalg.det(g)) - 1.0) > self.tolerance:
                raise AssertionError("pairing matrix determinant off unity")
        n = 4 * self.genus
        angle_sum = n * (2.0 * math.pi / n)
        if abs(angle_sum - 2.0 * math.pi) > self.tolerance:
            raise AssertionError("polygon angle sum broken")

    def generator_names(self):
        return [W.format_word((k,)) for k in range(1, self.n_gens + 1)]

    def __repr__(self):
        return "SurfaceModel(genus=%d)" % self.genus


class CuspedModel(_ModelBase):
    """Punctured surface as a free Fuchsian group with parabolic cusps.

    `peripheral` lists one word per puncture (a parabolic class).  Used by
    the pants-move machinery on its small model surfaces.
    """

    def __init__(self, name, gen_matrices, peripheral, genus, n_punctures, tolerance=1e-9):
        self.name = name
        self.gen_matrices = [np.asarray(m, dtype=float) for m in gen_matrices]
        self.n_gens = len(gen_matrices)
        self.peripheral = tuple(tuple(p) for p in peripheral)
        self.genus = genus
        self.n_punctures = n_punctures
        self.tolerance = tolerance
        self.reducer = W.FreeReducer()
        self.is_closed = False
        self.relator = None
        # scale used by search heuristics in place of a polygon radius
        self.circumradius = 2.5
        self._caches = {}
        for p in self.peripheral:
            m = self.evaluate(p)
            if hyp.classify(m, tolerance) != "parabolic":
                raise AssertionError("peripheral class %s is not parabolic" % (p,))

    def __repr__(self):
        return "CuspedModel(%s)" % self.name


def _polygon_pairings(genus):
    """SL(2,R) side-pairing matrices of the regular 4g-gon.

    Side k (counterclockwise) is paired with partner(k) where sides
    4j,4j+1,4j+2,4j+3 carry the boundary word a b a^-1 b^-1 of handle j.
    The pairing across side k is rotation-by-pi about the side midpoint
    composed with the polygon rotation taking the partner side to side k;
    the vertex cycle then reads off the standard commutator relator.
    """
    n = 4 * genus
    r = math.acosh(1.0 / math.tan(math.pi / n))
    phis = [(2 * k + 1) * math.pi / n for k in range(n)]

    def partner(k):
        j, m = divmod(k, 4)
        return 4 * j + (2, 3, 0, 1)[m]

    out = []
    for k in range(n):
        t = _disk_rot(phis[k]) @ _disk_trans(r) @ _disk_rot(-phis[k])
        flip = t @ _disk_rot(math.pi) @ np.linalg.inv(t)
        out.append(_su11_to_sl2r(flip @ _disk_rot(phis[k] - phis[partner(k)])))
    return out


def _polygon_side_poles(genus):
    """Oriented poles of the 4g side geodesics, interior on the negative side."""
    n = 4 * genus
    r = math.acosh(1.0 / math.tan(math.pi / n))
    poles = []
    for k in range(n):
        phi = (2 * k + 1) * math.pi / n
        g = _su11_to_sl2r(_disk_rot(phi) @ _disk_trans(r))
        pole = hyp.apply_isometry(g, np.array([0.0, 1.0, 0.0]))
        if hyp.minkdot(hyp.BASEPOINT, pole) > 0:
            pole = -pole
        poles.append(pole)
    return poles


def _polygon_vertices(genus):
    n = 4 * genus
    rc = math.acosh(1.0 / math.tan(math.pi / n) ** 2)
    verts = []
    for k in range(n):
        g = _su11_to_sl2r(_disk_rot(2 * math.pi * k / n) @ _disk_trans(rc))
        verts.append(hyp.apply_isometry(g, hyp.BASEPOINT))
    return verts


_CAYLEY = np.array([[1.0, -1.0j], [1.0, 1.0j]]) / math.sqrt(2.0)
_CAYLEY_INV = np.linalg.inv(_CAYLEY)


def _disk_rot(theta):
    return np.array([[np.exp(0.5j * theta), 0.0], [0.0, np.exp(-0.5j * theta)]])


def _disk_trans(dist):
    t = dist / 2.0
    return np.array([[math.cosh(t), math.sinh(t)], [math.sinh(t), math.cosh(t)]], dtype=complex)


def _su11_to_sl2r(m):
    m = _CAYLEY_INV @ m @ _CAYLEY
    if np.max(np.abs(m.imag)) > 1e-8:
        raise AssertionError("conjugated matrix is not real")
    m = m.real
    return m / math.sqrt(abs(np.linalg.det(m)))


def build_surface(genus, tolerance=1e-9):
    """Closed genus-g surface model; deterministic for fixed genus."""
    return SurfaceModel(genus, tolerance)


# --- punctured models -------------------------------------------------------
#
# Base groups: the thrice-punctured sphere <A, B> with A = [[1,2],[0,1]],
# B = [[1,0],[2,1]], and the once-punctured torus <X, Y> with
# X = [[1,1],[1,2]], Y = [[1,-1],[-1,2]].  The covers below are computed by
# Reidemeister-Schreier along homomorphisms onto Z/k.

_S3_A = np.array([[1.0, 2.0], [0.0, 1.0]])
_S3_B = np.array([[1.0, 0.0], [2.0, 1.0]])
_T1_X = np.array([[1.0, 1.0], [1.0, 2.0]])
_T1_Y = np.array([[1.0, -1.0], [-1.0, 2.0]])


def _mat_word(mats, word):
    m = np.eye(2)
    for let in word:
        g = mats[abs(let) - 1]
        m = m @ (g if let > 0 else hyp.sl2_inverse(g))
    return m


def five_punctured_sphere(tolerance=1e-9):
    """S_{0,5} as the degree-3 cyclic cover of the thrice-punctured sphere.

    Generators (letters 1..4): x1 = A^3, x2 = B, x3 = A B A^-1,
    x4 = A^2 B A^-2.  Punctures: x1, x2, x3, x4 and (x1 x2 x3 x4)-type
    leftover cusp coming from the AB class.
    """
    base = [_S3_A, _S3_B]
    gens = [
        _mat_word(base, (1, 1, 1)),
        _mat_word(base, (2,)),
        _mat_word(base, (1, 2, -1)),
        _mat_word(base, (1, 1, 2, -1, -1)),
    ]
    # fifth cusp: the base's third cusp class is A B^-1 (AB itself is
    # hyperbolic); (A B^-1)^3 = (AB^-1A^-1)(A^2B^-1A^-2)(A^3)(B^-1)
    fifth = (-3, -4, 1, -2)
    model = CuspedModel("S_{0,5}", gens, [(1,), (2,), (3,), (4,), fifth], 0, 5, tolerance)
    return model


def four_punctured_sphere(tolerance=1e-9):
    """S_{0,4} as the degree-2 cyclic cover of the thrice-punctured sphere."""
    base = [_S3_A, _S3_B]
    gens = [
        _mat_word(base, (1, 1)),
        _mat_word(base, (2,)),
        _mat_word(base, (1, 2, -1)),
    ]
    # fourth cusp: (A B^-1)^2 = (AB^-1A^-1)(A^2)(B^-1)
    fourth = (-3, 1, -2)
    return CuspedModel("S_{0,4}", gens, [(1,), (2,), (3,), fourth], 0, 4, tolerance)


def once_punctured_torus(tolerance=1e-9):
    """S_{1,1}; the commutator of the two generators is the cusp."""
    gens = [_T1_X, _T1_Y]
    return CuspedModel("S_{1,1}", gens, [(1, 2, -1, -2)], 1, 1, tolerance)


def twice_punctured_torus(tolerance=1e-9):
    """S_{1,2} as the degree-2 cover of the once-punctured torus.

    Generators: x1 = X^2, x2 = Y, x3 = X Y X^-1.  The commutator cusp of
    the base splits into the two punctures.
    """
    base = [_T1_X, _T1_Y]
    gens = [
        _mat_word(base, (1, 1)),
        _mat_word(base, (2,)),
        _mat_word(base, (1, 2, -1)),
    ]
    # [X,Y] = (XYX^-1) Y^-1 = x3 x2^-1 and its X-conjugate
    # X[X,Y]X^-1 = X^2 Y X^-1 Y^-1 X^-1 = x1 x2 x1^-1 x3^-1
    p1 = (3, -2)
    p2 = (1, 2, -1, -3)
    return CuspedModel("S_{1,2}", gens, [p1, p2], 1, 2, tolerance)
