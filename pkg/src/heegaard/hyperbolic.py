"""Hyperbolic plane primitives on SL(2,R) matrices and Minkowski 3-vectors.

Everything here works in the hyperboloid model.  A traceless 2x2 matrix
U = [[x0, x1+x2], [x1-x2, -x0]] is identified with the vector (x0, x1, x2)
carrying the quadratic form Q = x0^2 + x1^2 - x2^2 = -det(U).  Points of the
plane are future timelike unit vectors (Q = -1, x2 > 0), geodesics are
spacelike unit "poles" (Q = +1), and ideal boundary points are future
lightlike rays.  An isometry g in SL(2,R) acts by conjugation U -> g U g^-1.

Working with poles avoids every special case at infinity: incidence,
crossing, side, and distance predicates are all signs and magnitudes of the
Minkowski pairing.
"""

import math

import numpy as np

# the point i of the upper half-plane
BASEPOINT = np.array([0.0, 0.0, 1.0])


def minkdot(u, v):
    return u[0] * v[0] + u[1] * v[1] - u[2] * v[2]


def minkcross(u, v):
    """Minkowski cross product: <cross(u,v), x> = det[u, v, x] for all x."""
    c = np.cross(u, v)
    return np.array([c[0], c[1], -c[2]])


def mat_to_vec(u):
    """Vector of a traceless 2x2 matrix."""
    return np.array([u[0, 0], (u[0, 1] + u[1, 0]) / 2.0, (u[0, 1] - u[1, 0]) / 2.0])


def vec_to_mat(x):
    return np.array([[x[0], x[1] + x[2]], [x[1] - x[2], -x[0]]])


def sl2_inverse(m):
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])


def normalize_sign(m, tol=1e-12):
    """Fix the +-M ambiguity: positive trace, falling back to the largest entry."""
    t = m[0, 0] + m[1, 1]
    if abs(t) > tol:
        return m if t > 0 else -m
    flat = m.reshape(-1)
    k = int(np.argmax(np.abs(flat)))
    return m if flat[k] > 0 else -m


def adjoint3(g):
    """3x3 matrix of the conjugation action of g on Minkowski vectors."""
    gi = sl2_inverse(g)
    cols = []
    for e in (np.array([1.0, 0, 0]), np.array([0, 1.0, 0]), np.array([0, 0, 1.0])):
        cols.append(mat_to_vec(g @ vec_to_mat(e) @ gi))
    return np.array(cols).T


def apply_isometry(g, x):
    return mat_to_vec(g @ vec_to_mat(x) @ sl2_inverse(g))


def point_from_halfplane(z):
    x, y = z.real, z.imag
    return np.array([-x / y, (x * x + y * y - 1.0) / (2.0 * y), (x * x + y * y + 1.0) / (2.0 * y)])


def normalize_point(x):
    q = -minkdot(x, x)
    if q <= 0:
        raise ValueError("not a timelike vector")
    x = x / math.sqrt(q)
    return x if x[2] > 0 else -x


def dist_points(p, q):
    return math.acosh(max(1.0, -minkdot(p, q)))


def classify(m, tol):
    """'identity' | 'elliptic' | 'parabolic' | 'hyperbolic' from |trace|."""
    m = normalize_sign(m)
    t = abs(m[0, 0] + m[1, 1])
    if t > 2.0 + tol:
        return "hyperbolic"
    if t > 2.0 - tol:
        off = abs(m[0, 1]) + abs(m[1, 0]) + abs(m[0, 0] - m[1, 1])
        return "identity" if off < 10 * tol else "parabolic"
    return "elliptic"


def translation_length(m):
    t = abs(m[0, 0] + m[1, 1])
    return 2.0 * math.acosh(max(1.0, t / 2.0))


class Geodesic:
    """Oriented geodesic: unit pole, a foot point, and the forward direction.

    The foot is the point of the geodesic nearest BASEPOINT; `param` measures
    signed arclength from it.  Endpoint vectors foot +- direction are the
    forward/backward ideal points.
    """

    __slots__ = ("pole", "foot", "direction")

    def __init__(self, pole, foot, direction):
        self.pole = pole
        self.foot = foot
        self.direction = direction

    @classmethod
    def from_matrix(cls, m):
        """Axis of a hyperbolic matrix, oriented by the translation direction."""
        m = normalize_sign(m)
        t = m[0, 0] + m[1, 1]
        s = math.sqrt(max(t * t / 4.0 - 1.0, 0.0))
        if s == 0.0:
            raise ValueError("matrix is not hyperbolic")
        pole = mat_to_vec(m - (t / 2.0) * np.eye(2)) / s
        k = minkdot(BASEPOINT, pole)
        foot = normalize_point(BASEPOINT - k * pole)
        direction = minkcross(pole, foot)
        # orient along the translation of m
        if minkdot(apply_isometry(m, foot), direction) < 0:
            direction = -direction
            pole = -pole
        return cls(pole, foot, direction)

    def endpoint_angles(self):
        """(repelling, attracting) ideal endpoints as circle angles."""
        fwd = self.foot + self.direction
        back = self.foot - self.direction
        return (math.atan2(back[1], back[0]), math.atan2(fwd[1], fwd[0]))

    def param_of_point(self, x):
        """Signed arclength of the projection of point x onto the geodesic."""
        return math.asinh(minkdot(x, self.direction))

    def point_at(self, t):
        return math.cosh(t) * self.foot + math.sinh(t) * self.direction

    def side_of_point(self, x):
        return minkdot(x, self.pole)

    def dist_to_point(self, x):
        return math.asinh(abs(minkdot(x, self.pole)))


def cross_geodesics(g1, g2):
    """Crossing data of two geodesics.

    Returns (point, t1, t2, sign) where point is the crossing, t1/t2 its
    parameters on g1/g2 and sign the orientation of the crossing, or None
    when the geodesics do not meet.  Raises ValueError in the numerically
    tangent regime.
    """
    k = minkdot(g1.pole, g2.pole)
    if abs(k) >= 1.0 - 1e-9:
        if abs(k) < 1.0 + 1e-9:
            raise ValueError("tangent or nearly tangent geodesics")
        return None
    x = minkcross(g1.pole, g2.pole)
    x = normalize_point(x)
    t1 = g1.param_of_point(x)
    t2 = g2.param_of_point(x)
    sgn = 1.0 if minkdot(g2.pole, g1.direction) > 0 else -1.0
    return x, t1, t2, sgn


def dist_geodesics(g1, g2):
    """Distance between two geodesics (0 when they cross)."""
    k = abs(minkdot(g1.pole, g2.pole))
    if k <= 1.0:
        return 0.0
    return math.acosh(k)


def dist_geodesic_segment(g, other, t_lo, t_hi):
    """Distance from geodesic g to the segment [t_lo, t_hi] of `other`."""
    c = minkdot(other.foot, g.pole)
    s = minkdot(other.direction, g.pole)
    # signed distance-sine along the segment: f(t) = c cosh t + s sinh t
    lo = c * math.cosh(t_lo) + s * math.sinh(t_lo)
    hi = c * math.cosh(t_hi) + s * math.sinh(t_hi)
    if lo == 0.0 or hi == 0.0 or (lo < 0) != (hi < 0):
        return 0.0
    best = min(abs(lo), abs(hi))
    # interior critical point of f
    if abs(s) < abs(c):
        t_star = math.atanh(-s / c) if c != 0 else None
        if t_star is not None and t_lo < t_star < t_hi:
            best = min(best, abs(c * math.cosh(t_star) + s * math.sinh(t_star)))
    return math.asinh(best)


def displacement(m, x):
    """Hyperbolic distance from point x to its image under m."""
    return dist_points(x, apply_isometry(m, x))


def axis_distance_to_point(m, x):
    """Distance from point x to the axis of hyperbolic m.

    Uses sinh(d(x, mx)/2) = cosh(dist(x, axis)) * sinh(l/2).
    """
    ell = translation_length(m)
    if ell == 0.0:
        raise ValueError("matrix is not hyperbolic")
    num = math.sinh(displacement(m, x) / 2.0)
    den = math.sinh(ell / 2.0)
    return math.acosh(max(1.0, num / den))
