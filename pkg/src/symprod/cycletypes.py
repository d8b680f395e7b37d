"""Cycle-type combinatorics of the symmetric group S_n.

Conjugacy classes of S_n are the partitions of n; a class is stored as the
multiplicity map l -> N_l (number of l-cycles).  Alongside enumeration this
module knows the centralizer order prod N_l! l^(N_l), the shape of the
fixed locus of a permutation of the given type (N_l copies of X per cycle
length l), and the grading shift of the corresponding twisted sector: half
the codimension of the fixed locus, which the caller scales by whichever
dimension (real or complex) its grading uses.
"""

from math import factorial


class ShiftData:
    """Grading shift of a twisted sector.

    codim = dim * sum_l (l-1) N_l for the caller's dimension scale, and the
    shift F is codim/2, kept doubled (F2 == codim) so half-integers stay
    exact.
    """

    __slots__ = ("F2", "codim")

    def __init__(self, codim):
        self.F2 = codim
        self.codim = codim

    def __repr__(self):
        return "ShiftData(F=%g, codim=%d)" % (self.F2 / 2, self.codim)


class CycleType:
    """A partition of n as the multiplicity map l -> N_l (all N_l >= 1)."""

    __slots__ = ("n", "mult")

    def __init__(self, mult):
        clean = {}
        n = 0
        for l, c in mult.items():
            if l < 1 or c < 0:
                raise ValueError("invalid cycle multiplicities")
            if c:
                clean[l] = c
                n += l * c
        self.mult = clean
        self.n = n

    @classmethod
    def from_parts(cls, parts):
        mult = {}
        for l in parts:
            mult[l] = mult.get(l, 0) + 1
        return cls(mult)

    def parts(self):
        out = []
        for l in sorted(self.mult, reverse=True):
            out.extend([l] * self.mult[l])
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, CycleType) and self.mult == other.mult

    def __hash__(self):
        return hash(tuple(sorted(self.mult.items())))

    def __repr__(self):
        return "CycleType%r" % (self.parts(),)

    def centralizer_order(self):
        """|Z_g| = prod_l N_l! * l^N_l."""
        z = 1
        for l, c in self.mult.items():
            z *= factorial(c) * l**c
        return z

    def fixed_locus_factors(self):
        """The fixed locus of this type is prod_l X^(N_l); its centralizer
        quotient is prod_l Sym^(N_l)(X).  Returned as the map l -> N_l."""
        return dict(self.mult)

    def moved_cycles(self):
        """sum_l (l-1) N_l: cycles weighted by how much they collapse."""
        return sum((l - 1) * c for l, c in self.mult.items())

    def grading_shift(self, dim):
        """Sector shift for a manifold of the given dimension: the fixed
        locus has codimension dim * sum (l-1) N_l, and the grading moves by
        half of it.  Pass the real dimension for the single grading and the
        complex dimension for each slot of the bigrading."""
        return ShiftData(dim * self.moved_cycles())


def _partitions_desc(n, cap):
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_desc(n - first, first):
            yield (first,) + rest


def cycle_types(n):
    """All cycle types of S_n, each once, parts in descending-lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [CycleType.from_parts(p) for p in _partitions_desc(n, n)]
