"""Words in surface and free groups.

A letter is a nonzero int: +k is generator k-1, -k its inverse (so the
genus-2 generators a1,b1,a2,b2 are 1,2,3,4 and A1 = -1).  Words are tuples.
Conjugacy classes are canonicalized cyclically; in one-relator surface
groups this uses Dehn's algorithm plus the closure under exactly-half
relator swaps, which connects all minimal-length cyclic representatives.
"""

from functools import lru_cache


def parse_word(text, n_gens):
    """Parse 'a1b2A1' or 'a1.b2.A1' style tokens into a letter tuple.

    Lowercase tokens are generators, uppercase their inverses.  Generator
    naming follows a1,b1,a2,b2,...: a<k> is letter 2k-1, b<k> is letter 2k.
    """
    text = text.strip()
    for sep in (".", "*", " "):
        text = text.replace(sep, "")
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if not ch.isalpha():
            raise ValueError("bad token at %r" % text[i:])
        j = i + 1
        while j < len(text) and text[j].isdigit():
            j += 1
        if j == i + 1:
            raise ValueError("missing handle index in %r" % text[i:])
        idx = int(text[i + 1 : j])
        base = ch.lower()
        if base == "a":
            k = 2 * idx - 1
        elif base == "b":
            k = 2 * idx
        elif base == "x":
            k = idx
        else:
            raise ValueError("unknown generator letter %r" % ch)
        if k < 1 or k > n_gens:
            raise ValueError("generator %r out of range" % text[i:j])
        out.append(k if ch.islower() else -k)
        i = j
    if not out:
        raise ValueError("empty word")
    return tuple(out)


def format_word(word):
    if not word:
        return "<id>"
    out = []
    for let in word:
        k = abs(let)
        idx = (k + 1) // 2
        base = "a" if k % 2 == 1 else "b"
        if let < 0:
            base = base.upper()
        out.append("%s%d" % (base, idx))
    return "".join(out)


def invert(word):
    return tuple(-x for x in reversed(word))


def free_reduce(word):
    out = []
    for let in word:
        if out and out[-1] == -let:
            out.pop()
        else:
            out.append(let)
    return tuple(out)


def cyclic_reduce(word):
    word = free_reduce(word)
    while len(word) >= 2 and word[0] == -word[-1]:
        word = word[1:-1]
    return word


def rotations(word):
    return {word[i:] + word[:i] for i in range(len(word))} if word else {word}


def min_rotation(word):
    return min(rotations(word)) if word else word


def word_period(word):
    """Smallest p dividing len(word) with word equal to its rotation by p."""
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word == word[p:] + word[:p]:
            return p
    return n


class DehnReducer:
    """Dehn reduction and conjugacy canonicalization for one relator.

    The relator and its inverse generate 2*len(R) cyclic rotations; any
    subword strictly longer than half of one of them is replaced by the
    inverse of the complement, which strictly shortens the word.  Words are
    geodesic once no such subword remains.  Minimal cyclic representatives
    of a conjugacy class are connected by swaps of exactly-half subwords,
    so the canonical form is the lexicographic minimum of that closure.
    """

    def __init__(self, relator):
        self.relator = tuple(relator)
        n = len(relator)
        self.half = n // 2
        self.table = {}
        for base in (self.relator, invert(self.relator)):
            for rot in rotations(base):
                for take in range(self.half, n):
                    # prefix of length `take`+1 maps to the shortening;
                    # prefix of length exactly half maps to the equal-length swap
                    pref = rot[: take + 1]
                    repl = invert(rot[take + 1 :])
                    self.table.setdefault(pref, repl)
        self.swaps = {}
        for base in (self.relator, invert(self.relator)):
            for rot in rotations(base):
                self.swaps.setdefault(rot[: self.half], invert(rot[self.half :]))

    def _shorten_once(self, word, cyclic):
        n = len(word)
        if n == 0:
            return None
        doubled = word + word if cyclic else word
        limit = n if cyclic else max(0, n - self.half)
        for i in range(limit):
            for take in range(self.half + 1, min(len(self.relator), n) + 1):
                if i + take > len(doubled):
                    break
                piece = doubled[i : i + take]
                repl = self.table.get(piece)
                if repl is not None:
                    if cyclic:
                        rest = doubled[i + take : i + n]
                        return cyclic_reduce(repl + rest)
                    return free_reduce(word[:i] + repl + word[i + take :])
        return None

    def reduce(self, word):
        """Dehn-reduce a (non-cyclic) word to geodesic form."""
        word = free_reduce(word)
        while True:
            nxt = self._shorten_once(word, cyclic=False)
            if nxt is None:
                return word
            word = nxt

    def reduce_cyclic(self, word):
        word = cyclic_reduce(word)
        while True:
            nxt = self._shorten_once(word, cyclic=True)
            if nxt is None:
                return word
            word = nxt

    def minimal_class(self, word):
        """All minimal-length cyclic words of the conjugacy class."""
        word = self.reduce_cyclic(word)
        if not word:
            return frozenset([()])
        seen = set()
        frontier = list(rotations(word))
        seen.update(frontier)
        half = self.half
        while frontier:
            cur = frontier.pop()
            shorter = self._shorten_once(cur, cyclic=True)
            if shorter is not None:
                # should not happen after reduce_cyclic, but restart if it does
                return self.minimal_class(shorter)
            n = len(cur)
            doubled = cur + cur
            for i in range(n):
                piece = doubled[i : i + half]
                if len(piece) < half:
                    break
                repl = self.swaps.get(piece)
                if repl is None:
                    continue
                new = doubled[i + half : i + n] + repl
                new = cyclic_reduce(new)
                if len(new) < n:
                    return self.minimal_class(new)
                for rot in rotations(new):
                    if rot not in seen:
                        seen.add(rot)
                        frontier.append(rot)
        return frozenset(seen)

    def canonical_cyclic(self, word):
        return min(self.minimal_class(word))

    def is_trivial(self, word):
        return len(self.reduce_cyclic(word)) == 0


class FreeReducer:
    """Reduction in a free group: free and cyclic reduction only."""

    def reduce(self, word):
        return free_reduce(word)

    def reduce_cyclic(self, word):
        return cyclic_reduce(word)

    def minimal_class(self, word):
        return frozenset(rotations(cyclic_reduce(word)))

    def canonical_cyclic(self, word):
        return min_rotation(cyclic_reduce(word))

    def is_trivial(self, word):
        return len(cyclic_reduce(word)) == 0


def surface_relator(genus):
    """Standard relator [a1,b1][a2,b2]...[ag,bg] in letter encoding."""
    rel = []
    for i in range(genus):
        a, b = 2 * i + 1, 2 * i + 2
        rel += [a, b, -a, -b]
    return tuple(rel)
