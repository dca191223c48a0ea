"""Free-homotopy classes of closed curves and their intersection machinery.

A CurveClass is a conjugacy class in the model group, canonicalized
cyclically.  Geometric data comes from the Fuchsian realization: the class
is represented by the axis of its matrix, and crossings with another class
are enumerated as conjugate "strands" whose axes cross a fundamental
window of that axis.  One window period corresponds to one traversal of
the closed geodesic, so distinct crossing orbits inside the window are in
bijection with intersection points on the surface.

Strand enumeration is a breadth-first search over generator conjugations,
pruned by the distance from the strand axis to the window segment.  The
search is certified by re-running with the exploration slack doubled and
demanding the identical hit set; failure raises UnstableComputation rather
than returning a silent undercount.
"""

import math
from fractions import Fraction

import numpy as np

from . import hyperbolic as hyp
from . import words as W

# fixed generic offset of the window cut, as a fraction of the period;
# keeps symmetric crossing configurations away from the cut point
WINDOW_CUT = 0.23924731492
_KEY_SCALE = 1e7


class InessentialCurve(ValueError):
    """The word is trivial (or peripheral where that is not allowed)."""


class UnstableComputation(RuntimeError):
    """Strand enumeration failed to stabilize within the configured budget."""


def _matrix_key(m):
    """Coarse hashable id of a group element (collision-tolerant contexts only)."""
    v = _key_vectors(hyp.normalize_sign(m)[None, :, :])[0]
    return tuple(np.round(v / _GRID).astype(np.int64))


class _KeySet:
    """Fuzzy dedup of group elements keyed by quantized matrix data.

    Quantization boundaries are probed on both sides so that floating
    noise cannot split one element into two grid cells.
    """

    def __init__(self):
        self._cells = {}

    def _probes(self, vec):
        scaled = vec / _GRID
        base = np.floor(scaled).astype(np.int64)
        frac = scaled - base
        alts = [(i, base[i] + (1 if f > 0.75 else -1))
                for i, f in enumerate(frac) if f > 0.75 or f < 0.25]
        keys = [tuple(base)]
        for r in range(1, len(alts) + 1):
            from itertools import combinations
            for combo in combinations(alts, r):
                k = list(base)
                for i, v in combo:
                    k[i] = v
                keys.append(tuple(k))
        return keys

    def get(self, vec):
        for k in self._probes(vec):
            if k in self._cells:
                return self._cells[k]
        return None

    def insert(self, vec, value):
        self._cells[tuple(np.floor(vec / _GRID).astype(np.int64))] = value


_GRID = np.array([1e-6, 1e-6, 1e-6, 1e-6, 1e-3])


def _key_vectors(mats):
    """Shape (normalized entries) and log-norm of each matrix."""
    flat = mats.reshape(len(mats), 4)
    scale = np.max(np.abs(flat), axis=1)
    return np.concatenate([flat / scale[:, None], np.log1p(scale)[:, None]], axis=1)


class CurveClass:
    """Conjugacy class of an essential closed curve on a model surface."""

    __slots__ = ("model", "word", "matrix", "root_word", "power", "primitive",
                 "peripheral", "_root_matrix", "_axis")

    def __init__(self, model, word):
        word = tuple(word)
        canon = model.canonical_cyclic(word)
        if len(canon) == 0:
            raise InessentialCurve("word is trivial in the surface group")
        self.model = model
        self.word = canon
        self.matrix = hyp.normalize_sign(model.evaluate(canon))
        self.peripheral = hyp.classify(self.matrix, model.tolerance) == "parabolic"
        root, power = _find_root(model, canon)
        self.root_word = root
        self.power = power
        self.primitive = power == 1
        self._root_matrix = None
        self._axis = None

    @property
    def root_matrix(self):
        if self._root_matrix is None:
            self._root_matrix = hyp.normalize_sign(self.model.evaluate(self.root_word))
        return self._root_matrix

    def axis(self):
        if self._axis is None:
            if self.peripheral:
                raise InessentialCurve("peripheral class has no axis")
            self._axis = hyp.Geodesic.from_matrix(self.matrix)
        return self._axis

    def length(self):
        return hyp.translation_length(self.matrix)

    def inverse(self):
        return CurveClass(self.model, W.invert(self.word))

    def __eq__(self, other):
        return isinstance(other, CurveClass) and self.model is other.model and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return "CurveClass(%s)" % W.format_word(self.word)


def canonical_form(model, word):
    """CurveClass of a word; raises InessentialCurve on trivial input."""
    return CurveClass(model, word)


def same_unoriented(a, b):
    """True when a and b are the same curve forgetting orientation."""
    return a.word == b.word or a.word == b.model.canonical_cyclic(W.invert(b.word))


def _find_root(model, canon):
    """Primitive root and power of a canonical cyclic word.

    A class is a proper power exactly when some minimal-length cyclic
    representative is a periodic word; the candidate root is verified by
    re-canonicalizing its power.
    """
    best = None
    for rep in model.reducer.minimal_class(canon):
        p = W.word_period(rep)
        if p < len(rep):
            k = len(rep) // p
            if model.canonical_cyclic(rep[:p] * k) == canon:
                if best is None or k > best[1]:
                    best = (model.canonical_cyclic(rep[:p]), k)
    if best is None:
        return canon, 1
    return best


def abelianized(word, n_gens):
    v = [0] * n_gens
    for let in word:
        v[abs(let) - 1] += 1 if let > 0 else -1
    return tuple(v)


def algebraic_intersection(a, b):
    """Homological (signed) intersection number via the symplectic pairing."""
    n = a.model.n_gens
    va, vb = abelianized(a.word, n), abelianized(b.word, n)
    out = 0
    for i in range(0, n - 1, 2):
        out += va[i] * vb[i + 1] - va[i + 1] * vb[i]
    return out


# --- strand enumeration ------------------------------------------------------

class Strand:
    """A conjugate u w u^-1 of a curve's root, with its axis."""

    __slots__ = ("matrix", "conj", "geodesic")

    def __init__(self, matrix, conj):
        self.matrix = matrix
        self.conj = conj
        self.geodesic = hyp.Geodesic.from_matrix(matrix)


def _normalize_near_base(model, word):
    """Conjugate a class representative so its axis passes near the basepoint."""
    word = model.reducer.reduce_cyclic(word)
    m = model.evaluate(word)
    best = hyp.axis_distance_to_point(m, hyp.BASEPOINT)
    conj = ()
    improved = True
    while improved:
        improved = False
        for s in range(1, model.n_gens + 1):
            for sg in (s, -s):
                g = model.evaluate((sg,))
                m2 = g @ m @ hyp.sl2_inverse(g)
                d2 = hyp.axis_distance_to_point(m2, hyp.BASEPOINT)
                if d2 < best - 1e-9:
                    best, m, conj, improved = d2, m2, (sg,) + conj, True
                    break
            if improved:
                break
    return m, conj


def _strands_near_segment(model, root_matrix, seed_conj, axis, t_lo, t_hi, margin, node_cap):
    """All conjugates of root_matrix whose axis approaches [t_lo,t_hi] of `axis`.

    Returns strands with segment distance <= margin; the caller filters for
    actual crossings.  Vectorized BFS over generator conjugations pruned at
    `margin`; conjugator words are rebuilt from parent pointers on demand.
    """
    n2 = 2 * model.n_gens
    letters = []
    left = np.empty((n2, 2, 2))
    right = np.empty((n2, 2, 2))
    for s in range(1, model.n_gens + 1):
        g = model.gen_matrices[s - 1]
        gi = hyp.sl2_inverse(g)
        left[2 * s - 2], right[2 * s - 2] = g, gi
        left[2 * s - 1], right[2 * s - 1] = gi, g
        letters += [s, -s]
    letters = np.array(letters)

    seed = hyp.normalize_sign(root_matrix)
    mats = [seed]
    parent = [-1]
    via = [0]
    seen = _KeySet()
    seen.insert(_key_vectors(seed[None, :, :])[0], 0)
    good = []
    if _segment_distances(seed[None, :, :], axis, t_lo, t_hi)[0] <= margin:
        good.append(0)
    frontier = np.array([0])
    while frontier.size:
        if len(mats) > node_cap:
            raise UnstableComputation("strand search exceeded %d nodes" % node_cap)
        base = np.stack([mats[i] for i in frontier])
        f = frontier.size
        # all conjugates g m g^-1: shape (n2, f, 2, 2)
        prod = np.einsum("kab,fbc,kcd->kfad", left, base, right)
        prod = prod.reshape(n2 * f, 2, 2)
        tr = prod[:, 0, 0] + prod[:, 1, 1]
        flip = np.sign(tr)
        flip[flip == 0] = 1.0
        prod *= flip[:, None, None]
        vecs = _key_vectors(prod)
        dists = _segment_distances(prod, axis, t_lo, t_hi)
        nxt = []
        for idx in range(n2 * f):
            if seen.get(vecs[idx]) is not None:
                continue
            if dists[idx] <= margin:
                node = len(mats)
                seen.insert(vecs[idx], node)
                mats.append(prod[idx])
                parent.append(frontier[idx % f])
                via.append(letters[idx // f])
                good.append(node)
                nxt.append(node)
            else:
                seen.insert(vecs[idx], -1)
        frontier = np.array(nxt, dtype=int)

    out = {}
    for node in good:
        conj = []
        cur = node
        while cur > 0:
            conj.append(via[cur])
            cur = parent[cur]
        conj = tuple(conj) + seed_conj
        st = Strand(mats[node], W.free_reduce(conj))
        out[_matrix_key(mats[node])] = st
    return out


def _segment_distances(mats, axis, t_lo, t_hi):
    """Vectorized distance from strand axes to a segment of `axis`.

    The pole-based computation cancels catastrophically for strands far
    from the basepoint, so those are scored by a stable lower bound
    derived from the Frobenius norm (distance of the strand axis to the
    basepoint minus the reach of the segment), which is what matters for
    pruning anyway.
    """
    tr = mats[:, 0, 0] + mats[:, 1, 1]
    s = np.sqrt(np.maximum(tr * tr / 4.0 - 1.0, 1e-300))
    # stable axis-to-basepoint distance from displacement and length
    fro2 = np.einsum("kab,kab->k", mats, mats)
    disp = np.arccosh(np.maximum(1.0, fro2 / 2.0))
    axd = np.arccosh(np.maximum(1.0, np.sinh(disp / 2.0) / s))
    p0 = (mats[:, 0, 0] - tr / 2.0) / s
    p1 = (mats[:, 0, 1] + mats[:, 1, 0]) / (2.0 * s)
    p2 = (mats[:, 0, 1] - mats[:, 1, 0]) / (2.0 * s)
    f, d = axis.foot, axis.direction
    c = p0 * f[0] + p1 * f[1] - p2 * f[2]
    sd = p0 * d[0] + p1 * d[1] - p2 * d[2]
    lo = c * math.cosh(t_lo) + sd * math.sinh(t_lo)
    hi = c * math.cosh(t_hi) + sd * math.sinh(t_hi)
    crosses = (lo <= 0.0) != (hi <= 0.0)
    best = np.minimum(np.abs(lo), np.abs(hi))
    with np.errstate(divide="ignore", invalid="ignore"):
        t_star = np.arctanh(np.clip(-sd / np.where(c == 0, 1e-300, c), -1 + 1e-15, 1 - 1e-15))
        interior = (np.abs(sd) < np.abs(c)) & (t_star > t_lo) & (t_star < t_hi)
        val = np.abs(c * np.cosh(t_star) + sd * np.sinh(t_star))
    best = np.where(interior, np.minimum(best, val), best)
    out = np.arcsinh(best)
    out = np.where(crosses, 0.0, out)
    # conjugation paths between tube strands route past the basepoint;
    # keep a fixed-size corridor there (it must not grow with the
    # certification margin or the search region blows up exponentially)
    out = np.where(axd <= _CORRIDOR, np.minimum(out, 0.0), out)
    seg_reach = max(hyp.dist_points(hyp.BASEPOINT, axis.point_at(t_lo)),
                    hyp.dist_points(hyp.BASEPOINT, axis.point_at(t_hi)))
    floor = axd - seg_reach
    return np.where(axd <= 12.0, out, np.maximum(floor, 0.0))


_CORRIDOR = 4.2


class Crossing:
    """One intersection point of two closed geodesics.

    t_a, t_b: arclength positions along the two curves (mod their lengths);
    sign: orientation of the crossing; element: the strand of b at the
    crossing, conjugated into the window of a's axis.
    """

    __slots__ = ("t_a", "t_b", "sign", "element", "conj")

    def __init__(self, t_a, t_b, sign, element, conj):
        self.t_a = t_a
        self.t_b = t_b
        self.sign = sign
        self.element = element
        self.conj = conj


def apply_word_to_point(model, word, x):
    """Apply a word of generators to a Minkowski vector letter by letter.

    Numerically stable for long words: each step is a single isometry
    action, so errors stay linear instead of suffering the catastrophic
    cancellation of forming the full matrix product first.
    """
    for let in reversed(word):
        g = model.gen_matrices[abs(let) - 1]
        if let < 0:
            g = hyp.sl2_inverse(g)
        x = hyp.apply_isometry(g, x)
    return x


def _walk_letters(model, x, tol):
    """Letters s1..sk with eval((s1..sk))^-1 x brought within tol of basepoint."""
    out = []
    d = hyp.dist_points(hyp.BASEPOINT, x)
    for _ in range(4000):
        if d <= tol:
            return tuple(out), x
        best = None
        for s in range(1, model.n_gens + 1):
            g = model.gen_matrices[s - 1]
            for sg, gg in ((s, hyp.sl2_inverse(g)), (-s, g)):
                y = hyp.apply_isometry(gg, x)
                dy = hyp.dist_points(hyp.BASEPOINT, y)
                if best is None or dy < best[0]:
                    best = (dy, sg, y)
        if best[0] >= d - 1e-12:
            return tuple(out), x
        d, x = best[0], best[2]
        out.append(best[1])
    raise UnstableComputation("recentering walk failed to converge")


def crossing_records(a, b, margin=None, _certify=True):
    """Crossings of the primitive roots of a and b, one per surface point.

    Works on one period window of a's axis (generic cut offset), processed
    in chunks that are recentered at the basepoint so every local
    computation stays well conditioned regardless of the curve length.
    Stabilized by doubling the search margin until two consecutive levels
    agree; raises UnstableComputation on a hard budget or a crossing too
    close to the window cut.
    """
    model = a.model
    if a.peripheral or b.peripheral:
        raise InessentialCurve("peripheral classes carry no crossing data")
    cache = model._caches.setdefault("crossings", {})
    ckey = (a.root_word, b.root_word)
    if ckey in cache and _certify:
        return cache[ckey]
    if margin is None:
        margin = model.circumradius + 1.6
    ma, conj_a = _normalize_near_base(model, a.root_word)
    ell_a = hyp.translation_length(ma)
    ell_b = hyp.translation_length(b.root_matrix)
    cut = WINDOW_CUT * ell_a
    mb, conj_b = _normalize_near_base(model, b.root_word)
    delta = 2.0 * model.circumradius
    pad = 1e-6

    # chunk frames: (v_word, local matrix of a, local axis, global offset)
    frames = []
    v_word = ()
    m_loc = ma
    axis_loc = hyp.Geodesic.from_matrix(m_loc)
    marker = axis_loc.foot
    t_mark = 0.0  # global param of marker
    t0 = cut
    while t0 < cut + ell_a - 1e-12:
        t1 = min(t0 + delta, cut + ell_a)
        off = t_mark - axis_loc.param_of_point(marker)
        mid_loc = axis_loc.point_at((t0 + t1) / 2.0 - off)
        steps, _ = _walk_letters(model, mid_loc, 1.2)
        if steps:
            for s in steps:
                g = model.gen_matrices[abs(s) - 1]
                gi = hyp.sl2_inverse(g)
                if s > 0:
                    m_loc = gi @ m_loc @ g
                    marker = hyp.apply_isometry(gi, marker)
                else:
                    m_loc = g @ m_loc @ gi
                    marker = hyp.apply_isometry(g, marker)
            v_word = v_word + steps
            m_loc = hyp.normalize_sign(m_loc)
            axis_loc = hyp.Geodesic.from_matrix(m_loc)
            off = t_mark - axis_loc.param_of_point(marker)
        frames.append((v_word, m_loc, axis_loc, off))
        # re-anchor the marker at the chunk end to keep params local
        marker = axis_loc.point_at(t1 - off)
        t_mark = t1
        t0 = t1

    def run(mg):
        recs = {}
        rec_keys = _KeySet()
        for idx, (v, mloc, aloc, off) in enumerate(frames):
            lo = cut + idx * delta
            hi = min(lo + delta, cut + ell_a)
            seed = hyp.normalize_sign(_conj_word_matrix(model, W.invert(v), mb))
            seed_conj = W.invert(v) + conj_b
            # local renormalization of the seed near the basepoint
            seed, extra = _descend_conj(model, seed)
            seed_conj = extra + seed_conj
            strands = _strands_near_segment(model, seed, seed_conj, aloc,
                                            lo - off - pad, hi - off + pad,
                                            mg, node_cap=500000)
            for st in strands.values():
                k = hyp.minkdot(aloc.pole, st.geodesic.pole)
                if abs(k) >= 1.0 - 1e-9:
                    same = np.allclose(st.geodesic.pole, aloc.pole, atol=1e-6) or \
                        np.allclose(st.geodesic.pole, -aloc.pole, atol=1e-6)
                    if abs(k) < 1.0 + 1e-9 and not same:
                        raise UnstableComputation("tangent axes in crossing search")
                    continue
                x = hyp.normalize_point(hyp.minkcross(aloc.pole, st.geodesic.pole))
                t_glob = aloc.param_of_point(x) + off
                if not (lo - pad <= t_glob < hi + pad):
                    continue
                frac = (t_glob - cut) / ell_a
                if abs(frac - round(frac)) < 1e-5:
                    raise UnstableComputation("crossing too close to the window cut")
                if not (0.0 < frac < 1.0):
                    continue
                # sign convention: the sum of crossing signs equals the
                # symplectic pairing of the homology classes
                sign = -1 if hyp.minkdot(st.geodesic.pole, aloc.direction) > 0 else 1
                global_conj = W.free_reduce(v + st.conj)
                hmat = _conj_word_matrix(model, global_conj, b.root_matrix)
                kv = _key_vectors(hmat[None, :, :])[0]
                if rec_keys.get(kv) is not None:
                    continue
                rec_keys.insert(kv, len(recs))
                t_b = _strand_param(model, mb, conj_b, st, x, ell_b)
                recs[len(recs)] = Crossing(t_glob - cut, t_b, sign, hmat, global_conj)
        return recs

    def signature(rs):
        return sorted((round(r.t_a, 5), round(r.t_b, 5), r.sign) for r in rs.values())

    recs = run(margin)
    if _certify:
        level, max_level = margin, 4.5 * margin
        while True:
            recs2 = run(2.0 * level)
            if signature(recs) == signature(recs2):
                break
            recs, level = recs2, 2.0 * level
            if level > max_level:
                raise UnstableComputation(
                    "crossing set did not stabilize below margin %.1f" % level)
    out = sorted(recs.values(), key=lambda r: r.t_a)
    result = (out, ell_a, ell_b, ma, conj_a, mb, conj_b)
    if _certify:
        cache[ckey] = result
    return result


def _conj_word_matrix(model, word, m):
    """Conjugate matrix m by a word, letter by letter."""
    for let in reversed(word):
        g = model.gen_matrices[abs(let) - 1]
        gi = hyp.sl2_inverse(g)
        if let > 0:
            m = g @ m @ gi
        else:
            m = gi @ m @ g
    return hyp.normalize_sign(m)


def _descend_conj(model, m):
    """Greedy conjugation bringing the axis of m toward the basepoint."""
    conj = ()
    best = hyp.axis_distance_to_point(m, hyp.BASEPOINT)
    improved = True
    while improved and best > model.circumradius:
        improved = False
        for s in range(1, model.n_gens + 1):
            g = model.gen_matrices[s - 1]
            gi = hyp.sl2_inverse(g)
            for sg, gg, ggi in ((s, g, gi), (-s, gi, g)):
                m2 = gg @ m @ ggi
                d2 = hyp.axis_distance_to_point(m2, hyp.BASEPOINT)
                if d2 < best - 1e-9:
                    best, m, conj, improved = d2, hyp.normalize_sign(m2), (sg,) + conj, True
                    break
            if improved:
                break
    return m, conj


def _strand_param(model, mb, conj_b, strand, x_loc, ell_b):
    """Arclength position of a crossing along b's own parametrization.

    x_loc lies on the strand's axis; the strand is eval(conj) root_b
    eval(conj)^-1, so pulling back by the conjugator and pushing onto the
    normalized mb copy gives the parameter.  Applied letter by letter for
    stability on long conjugators.
    """
    base_axis = hyp.Geodesic.from_matrix(mb)
    word = W.free_reduce(conj_b + W.invert(strand.conj))
    x_base = apply_word_to_point(model, word, x_loc)
    t = base_axis.param_of_point(x_base)
    cb = WINDOW_CUT * ell_b
    return (t - cb) % ell_b


def intersection_number(a, b, margin=None):
    """Geometric intersection number of two curve classes.

    Symmetric, zero on disjoint or equal simple curves; counts transverse
    crossings of geodesic representatives.  Certified by margin doubling.
    """
    model = a.model
    cache = model._caches.setdefault("imath", {})
    key = frozenset((a.word, b.word))
    if key in cache:
        return cache[key]
    recs, _, _, _, _, _, _ = crossing_records(a, b, margin)
    out = a.power * b.power * len(recs)
    cache[key] = out
    return out


def self_crossing_free(a, margin=None):
    """True when distinct strands of a's root never cross (embedded geodesic)."""
    model = a.model
    recs, _, _, _, _, _, _ = crossing_records(a, a, margin)
    return len(recs) == 0


def is_simple(a, margin=None):
    """Embedded essential curve test: primitive and self-crossing free."""
    cache = a.model._caches.setdefault("simple", {})
    if a.word in cache:
        return cache[a.word]
    out = a.primitive and self_crossing_free(a, margin)
    cache[a.word] = out
    # a curve and its inverse are the same embedded object
    inv = a.model.canonical_cyclic(W.invert(a.word))
    cache[inv] = out
    return out


def dehn_twist(gamma, n, a):
    """Power of the Dehn twist along a simple curve applied to a class.

    Positive n is the right-handed twist (each crossing of a with gamma
    inserts the gamma-strand at that crossing raised to n times the
    crossing sign).  T^0 is the identity and powers compose additively.
    """
    if not is_simple(gamma):
        raise ValueError("twist curve must be simple")
    if n == 0:
        return a
    model = a.model
    recs, ell_a, _, ma, conj_a, _, _ = crossing_records(a, gamma)
    if not recs:
        return a
    pieces = []
    for r in recs:
        strand_word = W.free_reduce(r.conj + gamma.root_word + W.invert(r.conj))
        if n * r.sign >= 0:
            pieces.append(strand_word * (n * r.sign))
        else:
            pieces.append(W.invert(strand_word) * (-n * r.sign))
    # crossings live on the normalized copy conj_a * root_a * conj_a^-1 of
    # a's axis; assemble there and let the conjugacy class forget the frame
    full = ()
    for p in pieces:
        full = full + p
    full = full + conj_a + a.root_word + W.invert(conj_a)
    out_root = CurveClass(model, full)
    if a.power == 1:
        return out_root
    return CurveClass(model, out_root.word * a.power)


class MappingClass:
    """Composition of Dehn-twist powers, acting on curve classes."""

    def __init__(self, model, twists=()):
        self.model = model
        self.twists = list(twists)  # (CurveClass gamma, power n)

    def apply(self, a):
        for gamma, n in self.twists:
            a = dehn_twist(gamma, n, a)
        return a

    def apply_inverse(self, a):
        for gamma, n in reversed(self.twists):
            a = dehn_twist(gamma, -n, a)
        return a

    def then(self, other):
        return MappingClass(self.model, self.twists + other.twists)

    def __repr__(self):
        return "MappingClass(%s)" % ", ".join(
            "T[%s]^%d" % (W.format_word(g.word), n) for g, n in self.twists)


class Multicurve:
    """Pairwise disjoint, pairwise distinct simple curve classes."""

    def __init__(self, components):
        comps = list(components)
        for c in comps:
            if not is_simple(c):
                raise ValueError("multicurve component %r is not simple" % c)
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                if same_unoriented(comps[i], comps[j]):
                    raise ValueError("duplicate multicurve components")
                if intersection_number(comps[i], comps[j]) != 0:
                    raise ValueError("multicurve components intersect")
        self.components = tuple(comps)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __repr__(self):
        return "Multicurve(%s)" % ", ".join(W.format_word(c.word) for c in self.components)


def faces_of_pair(a, b):
    """Boundary circuits of a regular neighborhood of two simple crossing curves.

    Builds the 4-valent ribbon graph of the geodesic union and traces its
    faces; returns the number of boundary circuits and the darts of each
    circuit for region bookkeeping.  Both curves must be simple.
    """
    recs, ell_a, ell_b, _, _, _, _ = crossing_records(a, b)
    v = len(recs)
    if v == 0:
        raise ValueError("curves are disjoint; no ribbon graph")
    order_a = sorted(range(v), key=lambda i: recs[i].t_a)
    order_b = sorted(range(v), key=lambda i: recs[i].t_b)

    # darts: (vertex, slot); slots counterclockwise around the vertex.
    # For sign +1 the cyclic order is (a_out, b_out, a_in, b_in); for -1
    # it is (a_out, b_in, a_in, b_out).
    def slots(i):
        if recs[i].sign > 0:
            return {"a_out": 0, "b_out": 1, "a_in": 2, "b_in": 3}
        return {"a_out": 0, "b_in": 1, "a_in": 2, "b_out": 3}

    nxt_along = {}
    for order, mark in ((order_a, "a"), (order_b, "b")):
        for pos, i in enumerate(order):
            j = order[(pos + 1) % len(order)]
            nxt_along[(i, mark + "_out")] = (j, mark + "_in")

    edge_mate = {}
    for (i, role), (j, role2) in nxt_along.items():
        edge_mate[(i, slots(i)[role])] = (j, slots(j)[role2])
        edge_mate[(j, slots(j)[role2])] = (i, slots(i)[role])

    faces = []
    seen = set()
    for start in list(edge_mate.keys()):
        if start in seen:
            continue
        circuit = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            circuit.append(cur)
            mate = edge_mate[cur]
            cur = (mate[0], (mate[1] + 1) % 4)
        faces.append(circuit)
    return v, faces


def fills_closed(model, a, b):
    """True when two simple curves fill the closed surface.

    The union fills iff every complementary region is a disk, i.e. the
    number of ribbon-graph boundary circuits equals chi(surface) + #crossings.
    """
    if same_unoriented(a, b):
        return False
    if intersection_number(a, b) == 0:
        return False
    v, faces = faces_of_pair(a, b)
    chi = 2 - 2 * model.genus
    return len(faces) == chi + v
