"""Diagram constructors: built-in small knots, torus knots as braid
closures, pretzel knots, and connected sums.

The built-in trefoil and figure-eight carry a fixed labeling chosen so
that the coloring matrices come out in the familiar published form under
the canonical arc/crossing ordering; the tests pin those matrices.
"""

from __future__ import annotations

import math

from .diagram import Crossing, Diagram, DiagramError, RIGHT

_ROT_CCW = {"NE": "NW", "NW": "SW", "SW": "SE", "SE": "NE"}
_ROT_CW = {v: k for k, v in _ROT_CCW.items()}

# T(2,3) twist column with crossings listed bottom-up and edges numbered
# along the knot; this labeling reproduces the classical 3x3 Fox matrix
# [[1-T,T,-1],[-1,1-T,T],[T,-1,1-T]] and its 3x5 Dehn companion exactly.
_TREFOIL = Diagram(
    (
        Crossing(under_in=2, under_out=3, over_in=5, over_out=0, sign=1),
        Crossing(under_in=4, under_out=5, over_in=1, over_out=2, sign=1),
        Crossing(under_in=0, under_out=1, over_in=3, over_out=4, sign=1),
    ),
    outer=(1, RIGHT),
)

# closure of the 3-strand braid (s1 s2^-1)^2 relabeled so that the Fox
# matrix at T=-1 is the published 4x4 figure-eight matrix up to sign
_FIGURE_EIGHT = Diagram(
    (
        Crossing(under_in=0, under_out=1, over_in=3, over_out=4, sign=1),
        Crossing(under_in=2, under_out=3, over_in=5, over_out=6, sign=-1),
        Crossing(under_in=4, under_out=5, over_in=7, over_out=0, sign=1),
        Crossing(under_in=6, under_out=7, over_in=1, over_out=2, sign=-1),
    ),
    outer=(3, RIGHT),
)

_UNKNOT = Diagram((), None)

_BUILTINS = {"trefoil": _TREFOIL, "figure_eight": _FIGURE_EIGHT, "unknot": _UNKNOT}


def builtin(name: str) -> Diagram:
    try:
        return _BUILTINS[name]
    except KeyError:
        raise DiagramError(f"unknown builtin {name!r}; have {sorted(_BUILTINS)}") from None


def builtin_names() -> list[str]:
    return sorted(_BUILTINS)


# -- braid closures -----------------------------------------------------------


def from_braid(strand_count: int, word) -> Diagram:
    """Close a braid word into a diagram.

    Letters are nonzero ints: +i crosses positions i, i+1 with the strand
    entering top-right passing over (a positive twist), -i mirrors it.
    Strands run downward; the closure joins bottom position j back to top
    position j.
    """
    word = list(word)
    if strand_count < 1:
        raise DiagramError("braid needs at least one strand")
    if strand_count == 1 or not word:
        if word:
            raise DiagramError("no room for crossings on one strand")
        return _UNKNOT
    perm = list(range(strand_count + 1))
    for letter in word:
        i = abs(letter)
        if 1 <= i < strand_count:
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
    cycles, pos = 0, set(range(1, strand_count + 1))
    while pos:
        cycles += 1
        start = j = pos.pop()
        while perm[j] != start:
            j = perm[j]
            pos.discard(j)
    if cycles != 1:
        raise DiagramError(f"braid closure has {cycles} components, must be a knot")
    pending = {p: None for p in range(1, strand_count + 1)}
    top_head = {}
    edges = []

    def consume(pos, head):
        if pending[pos] is None:
            top_head[pos] = head
        else:
            edges.append((pending[pos], head))

    signs = []
    for ci, letter in enumerate(word):
        i = abs(letter)
        if not 1 <= i <= strand_count - 1:
            raise DiagramError(f"letter {letter} outside braid positions")
        if letter > 0:
            consume(i, (ci, "under_in"))
            consume(i + 1, (ci, "over_in"))
            pending[i + 1] = (ci, "under_out")
            pending[i] = (ci, "over_out")
            signs.append(1)
        else:
            consume(i, (ci, "over_in"))
            consume(i + 1, (ci, "under_in"))
            pending[i + 1] = (ci, "over_out")
            pending[i] = (ci, "under_out")
            signs.append(-1)
    for pos in range(1, strand_count + 1):
        if pos not in top_head:
            raise DiagramError(f"braid position {pos} unused: closure is a split link")
        edges.append((pending[pos], top_head[pos]))

    slots = [dict() for _ in word]
    for eid, (tail, head) in enumerate(edges):
        slots[tail[0]][tail[1]] = eid
        slots[head[0]][head[1]] = eid
    crossings = tuple(
        Crossing(s["under_in"], s["under_out"], s["over_in"], s["over_out"], sign)
        for s, sign in zip(slots, signs)
    )
    top_right_slot = "over_in" if word[0] > 0 else "under_in"
    outer = (slots[0][top_right_slot], RIGHT)
    return Diagram(crossings, outer)


def torus_diagram(a: int, b: int) -> Diagram:
    """Standard diagram of the (a,b) torus knot: the closed braid
    (s1 ... s_{a-1})^b, which for a=2 is the b-crossing twist column.
    Negative parameters mirror the twists."""
    if a == 0 or b == 0:
        raise DiagramError("torus parameters must be nonzero")
    if math.gcd(abs(a), abs(b)) != 1:
        raise DiagramError(f"({a},{b}) is a torus link, not a knot: parameters must be coprime")
    mirror = (a < 0) != (b < 0)
    a, b = abs(a), abs(b)
    if a == 1:
        return _UNKNOT
    letter_sign = -1 if mirror else 1
    word = [letter_sign * i for _ in range(b) for i in range(1, a)]
    return from_braid(a, word)


# -- pretzels -------------------------------------------------------------------


def is_pretzel_knot(twists) -> bool:
    """Parity test: a pretzel link is a knot iff the twist count and every
    twist are odd, or exactly one twist is even."""
    twists = list(twists)
    if not twists or any(p == 0 for p in twists):
        return False
    evens = sum(1 for p in twists if p % 2 == 0)
    if evens == 1:
        return True
    return evens == 0 and len(twists) % 2 == 1


def pretzel_diagram(twists) -> Diagram:
    """Diagram of the pretzel knot P(p_1, ..., p_m): m side-by-side twist
    regions, positive twists having the top-right strand over."""
    twists = [int(p) for p in twists]
    if not is_pretzel_knot(twists):
        raise DiagramError(f"P{tuple(twists)} is a multi-component link, not a knot")
    m = len(twists)

    joint = {}

    def join(p1, p2):
        joint[p1] = p2
        joint[p2] = p1

    for i, p in enumerate(twists):
        for j in range(abs(p) - 1):
            join((i, j, "BL"), (i, j + 1, "TL"))
            join((i, j, "BR"), (i, j + 1, "TR"))
    last = [abs(p) - 1 for p in twists]
    for i in range(m - 1):
        join((i, 0, "TR"), (i + 1, 0, "TL"))
        join((i, last[i], "BR"), (i + 1, last[i + 1], "BL"))
    join((0, 0, "TL"), (m - 1, 0, "TR"))
    join((0, last[0], "BL"), (m - 1, last[m - 1], "BR"))

    through = {"TL": "BR", "BR": "TL", "TR": "BL", "BL": "TR"}
    total = 2 * sum(abs(p) for p in twists)
    entry_of = {}
    port = (0, 0, "TL")
    for step in range(total):
        site = port[:2]
        corner = port[2]
        if (site, corner) in entry_of:
            raise DiagramError("pretzel walk revisited a passage")
        entry_of[(site, corner)] = step
        port = joint[(*site, through[corner])]
    if port != (0, 0, "TL"):
        raise DiagramError(f"P{tuple(twists)} walk did not close up")
    if len(entry_of) != total:
        raise DiagramError(f"P{tuple(twists)} is not a single closed curve")

    dir_of_entry = {"TL": "SE", "BR": "NW", "TR": "SW", "BL": "NE"}
    crossings = []
    for i, p in enumerate(twists):
        for j in range(abs(p)):
            site = (i, j)
            slash = [(c, entry_of[(site, c)]) for c in ("TR", "BL") if (site, c) in entry_of]
            back = [(c, entry_of[(site, c)]) for c in ("TL", "BR") if (site, c) in entry_of]
            (sc, s_in), (bc, b_in) = slash[0], back[0]
            s_edge = (s_in, (s_in + 1) % total)
            b_edge = (b_in, (b_in + 1) % total)
            if p > 0:
                (over_in, over_out), (under_in, under_out) = s_edge, b_edge
                over_dir, under_dir = dir_of_entry[sc], dir_of_entry[bc]
            else:
                (over_in, over_out), (under_in, under_out) = b_edge, s_edge
                over_dir, under_dir = dir_of_entry[bc], dir_of_entry[sc]
            if under_dir == _ROT_CCW[over_dir]:
                sign = 1
            elif under_dir == _ROT_CW[over_dir]:
                sign = -1
            else:
                raise AssertionError("strands not transverse")
            crossings.append(Crossing(under_in, under_out, over_in, over_out, sign))
    # edge 0 enters twist 0 top-left through the wrap arc over the top,
    # so the unbounded region is on its right
    return Diagram(tuple(crossings), outer=(0, RIGHT))


# -- connected sums ---------------------------------------------------------------


def connected_sum(d1: Diagram, arc1: int, d2: Diagram, arc2: int) -> Diagram:
    """Splice d2 into d1 along the chosen arcs, orientation preserved.

    The two cut edges are cross-joined; no crossings are added, so the
    result has n1 + n2 crossings.  Summing with the 0-crossing unknot
    returns the other diagram unchanged.
    """
    d1._require_valid()
    d2._require_valid()
    if d1.n == 0:
        if arc1 != 0:
            raise DiagramError("the unknot has a single arc 0")
        return d2
    if d2.n == 0:
        if arc2 != 0:
            raise DiagramError("the unknot has a single arc 0")
        return d1
    edges1 = d1.arc_edges(arc1)
    edges2 = d2.arc_edges(arc2)
    if not edges1 or not edges2:
        raise DiagramError("no such arc")
    e1, e2 = edges1[0], edges2[0]
    off = 2 * d1.n
    slots = [
        {
            "under_in": c.under_in,
            "under_out": c.under_out,
            "over_in": c.over_in,
            "over_out": c.over_out,
            "sign": c.sign,
        }
        for c in d1.crossings
    ] + [
        {
            "under_in": c.under_in + off,
            "under_out": c.under_out + off,
            "over_in": c.over_in + off,
            "over_out": c.over_out + off,
            "sign": c.sign,
        }
        for c in d2.crossings
    ]
    h1_ci, h1_role = d1.in_slots[e1]
    h2_ci, h2_role = d2.in_slots[e2]
    slots[h2_ci + d1.n][h2_role + "_in"] = e1
    slots[h1_ci][h1_role + "_in"] = e2 + off
    crossings = tuple(
        Crossing(s["under_in"], s["under_out"], s["over_in"], s["over_out"], s["sign"])
        for s in slots
    )
    return Diagram(crossings, d1.outer)
