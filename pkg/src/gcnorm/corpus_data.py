"""Committed polynomial corpus: fixed integer-coefficient test sections.

Each monomial is (cre, cim, den, exps): (cre + 1j*cim)/den * prod z_i**a_i
* conj(z_i)**b_i with exps = (a_1..a_n, b_1..b_n).  A section is a list of
(I, J, monomials) triples keyed by contravariant/covariant index tuples.
"""

# (n, p, q) -> list of 20 sections of bidegree (p, q)
SECTIONS = {
    (1, 0, 0): [
        [((), (), [(2, 2, 2, (0, 1)), (-1, 0, 2, (1, 0)), (2, 2, 1, (0, 3)), (1, 0, 2, (0, 6))])],
        [((), (), [(3, 0, 1, (0, 1)), (1, -2, 2, (2, 0)), (1, 0, 2, (6, 0))])],
        [((), (), [(2, 0, 2, (1, 2)), (1, 0, 2, (0, 6))])],
        [((), (), [(1, 0, 4, (0, 0)), (-1, 0, 2, (1, 1)), (-1, 0, 2, (0, 1)), (1, 0, 2, (0, 6))])],
        [((), (), [(-1, 0, 4, (2, 0)), (3, -2, 1, (2, 0)), (1, 0, 2, (5, 0))])],
        [((), (), [(-1, 1, 2, (1, 0)), (1, 0, 2, (2, 1)), (3, 2, 2, (2, 1)), (1, 0, 2, (5, 0))])],
        [((), (), [(3, 0, 2, (1, 2)), (-2, 0, 1, (0, 2)), (1, 0, 2, (0, 5))])],
        [((), (), [(1, -1, 2, (3, 0)), (3, 1, 2, (0, 1)), (1, 0, 2, (0, 5))])],
        [((), (), [(3, 2, 4, (0, 1))])],
        [((), (), [(2, 0, 2, (2, 1))])],
        [((), (), [(1, -2, 2, (3, 0))])],
        [((), (), [(-1, -1, 4, (1, 2)), (1, -2, 4, (2, 1))])],
        [((), (), [(-2, 1, 4, (0, 2))])],
        [((), (), [(-3, 0, 2, (3, 1))])],
        [((), (), [(2, -2, 1, (0, 1))])],
        [((), (), [(2, 0, 2, (1, 2)), (-2, 0, 2, (0, 2)), (2, 0, 4, (2, 0))])],
        [((), (), [(2, -2, 4, (4, 0)), (-3, -1, 4, (0, 2)), (1, 0, 2, (0, 0))])],
        [((), (), [(2, 0, 2, (1, 1))])],
        [((), (), [(-1, -2, 4, (0, 1)), (-3, -2, 1, (1, 2))])],
        [((), (), [(-3, -2, 2, (2, 1)), (-1, 0, 2, (1, 3)), (-3, -1, 2, (0, 1))])],
    ],
    (1, 1, 0): [
        [((0,), (), [(-3, 0, 1, (0, 1)), (1, 0, 2, (6, 0))])],
        [((0,), (), [(-3, 2, 2, (2, 0)), (1, 0, 2, (0, 6))])],
        [((0,), (), [(-1, 2, 1, (3, 0)), (3, 2, 2, (0, 1)), (2, 2, 2, (0, 3)), (1, 0, 2, (0, 6))])],
        [((0,), (), [(-1, -1, 4, (0, 0)), (-2, -1, 2, (0, 2)), (1, 0, 2, (6, 0))])],
        [((0,), (), [(-2, 0, 4, (0, 1)), (-1, -1, 2, (0, 3)), (1, 0, 2, (5, 0))])],
        [((0,), (), [(-2, 1, 1, (1, 1)), (1, 0, 2, (0, 5))])],
        [((0,), (), [(-3, 2, 4, (2, 1)), (1, 0, 2, (5, 0))])],
        [((0,), (), [(2, 0, 2, (0, 0)), (3, 1, 1, (3, 0)), (1, 0, 2, (0, 5))])],
        [((0,), (), [(-2, 0, 1, (3, 0)), (1, 0, 1, (2, 0)), (2, 1, 1, (2, 2))])],
        [((0,), (), [(3, 0, 2, (2, 2)), (1, 0, 2, (3, 1)), (2, -2, 4, (1, 1))])],
        [((0,), (), [(-1, 0, 2, (2, 0)), (1, 2, 2, (4, 0)), (-3, 2, 1, (4, 0))])],
        [((0,), (), [(1, 0, 2, (0, 2)), (-2, 2, 2, (2, 2))])],
        [((0,), (), [(-1, -1, 4, (0, 1))])],
        [((0,), (), [(-2, 0, 4, (2, 2)), (1, 2, 2, (3, 1))])],
        [((0,), (), [(-2, -2, 1, (2, 2)), (3, 1, 4, (4, 0))])],
        [((0,), (), [(-3, -1, 2, (3, 0)), (-1, -2, 4, (2, 0))])],
        [((0,), (), [(-3, 1, 4, (1, 3)), (-2, 0, 4, (2, 1)), (1, 2, 1, (0, 4))])],
        [((0,), (), [(1, -2, 4, (2, 0)), (2, 0, 1, (2, 0))])],
        [((0,), (), [(-3, 2, 1, (4, 0)), (3, 1, 4, (0, 0))])],
        [((0,), (), [(-2, -1, 2, (1, 2)), (-2, -2, 4, (0, 4)), (-3, 0, 2, (1, 2))])],
    ],
    (1, 0, 1): [
        [((), (0,), [(-3, 0, 4, (0, 1)), (3, 0, 2, (0, 0)), (1, 0, 2, (6, 0))])],
        [((), (0,), [(1, 2, 2, (0, 0)), (2, 0, 1, (0, 1)), (1, 0, 2, (6, 0))])],
        [((), (0,), [(-3, 0, 2, (1, 2)), (2, 0, 4, (0, 2)), (1, 0, 2, (6, 0))])],
        [((), (0,), [(-3, -2, 2, (2, 0)), (1, 1, 1, (3, 0)), (1, 0, 2, (0, 6))])],
        [((), (0,), [(1, 2, 4, (0, 1)), (-2, -1, 4, (1, 0)), (1, 0, 2, (5, 0))])],
        [((), (0,), [(-2, 0, 4, (1, 1)), (-3, -2, 1, (0, 3)), (3, 0, 2, (3, 0)), (1, 0, 2, (0, 5))])],
        [((), (0,), [(-1, 1, 4, (3, 0)), (3, 1, 4, (1, 1)), (1, 0, 2, (0, 5))])],
        [((), (0,), [(2, -1, 4, (0, 0)), (1, 0, 2, (0, 5))])],
        [((), (0,), [(-3, -2, 1, (2, 0)), (-2, 0, 2, (1, 2)), (1, -1, 4, (1, 1))])],
        [((), (0,), [(2, 2, 1, (3, 0)), (-3, 1, 4, (0, 0))])],
        [((), (0,), [(-2, 0, 2, (0, 0)), (2, 0, 4, (2, 2))])],
        [((), (0,), [(-2, 2, 1, (2, 2)), (3, 2, 4, (0, 0))])],
        [((), (0,), [(3, 1, 2, (2, 0)), (3, 0, 2, (1, 3)), (3, -1, 1, (3, 0))])],
        [((), (0,), [(-3, 1, 2, (2, 0)), (2, -2, 4, (1, 3)), (1, -1, 4, (1, 3))])],
        [((), (0,), [(-1, 2, 1, (2, 0))])],
        [((), (0,), [(-2, -1, 4, (1, 2))])],
        [((), (0,), [(-1, -2, 2, (1, 2)), (2, 0, 1, (0, 3)), (-3, -2, 4, (1, 3))])],
        [((), (0,), [(2, 0, 1, (2, 2))])],
        [((), (0,), [(-2, 2, 4, (0, 3)), (1, 0, 4, (3, 0)), (1, -1, 4, (2, 0))])],
        [((), (0,), [(2, -2, 4, (1, 2))])],
    ],
    (1, 1, 1): [
        [((0,), (0,), [(-2, -1, 1, (2, 0)), (-1, 1, 2, (2, 1)), (1, 0, 2, (6, 0))])],
        [((0,), (0,), [(-2, 0, 2, (1, 2)), (3, -1, 4, (1, 2)), (1, 0, 2, (0, 6))])],
        [((0,), (0,), [(-1, -2, 1, (2, 0)), (1, 1, 1, (1, 1)), (1, 0, 2, (6, 0))])],
        [((0,), (0,), [(-1, -2, 1, (2, 0)), (1, 0, 2, (6, 0))])],
        [((0,), (0,), [(-1, -1, 2, (0, 3)), (3, 0, 4, (1, 0)), (1, 0, 2, (0, 5))])],
        [((0,), (0,), [(3, 1, 1, (2, 0)), (3, -1, 1, (1, 2)), (1, 0, 2, (0, 5))])],
        [((0,), (0,), [(1, 0, 4, (1, 1)), (1, -1, 2, (2, 0)), (2, 0, 1, (3, 0)), (1, 0, 2, (0, 5))])],
        [((0,), (0,), [(-1, 2, 2, (2, 1)), (-1, 1, 2, (0, 2)), (1, 0, 2, (0, 5))])],
        [((0,), (0,), [(1, -1, 4, (4, 0)), (2, -2, 1, (2, 0)), (2, 0, 4, (2, 0))])],
        [((0,), (0,), [(2, 0, 1, (2, 1)), (-2, 0, 2, (0, 1)), (-3, 0, 2, (1, 0))])],
        [((0,), (0,), [(-3, -1, 2, (0, 4))])],
        [((0,), (0,), [(-1, 1, 2, (3, 0)), (1, 1, 1, (1, 0)), (3, 1, 2, (1, 2))])],
        [((0,), (0,), [(-1, 0, 1, (0, 0)), (1, 0, 2, (0, 1))])],
        [((0,), (0,), [(3, 0, 2, (1, 1))])],
        [((0,), (0,), [(-1, 0, 1, (3, 0))])],
        [((0,), (0,), [(-3, 0, 2, (2, 1)), (1, 0, 2, (3, 0))])],
        [((0,), (0,), [(3, -2, 4, (2, 2))])],
        [((0,), (0,), [(-2, 2, 1, (4, 0)), (-2, 0, 4, (0, 3)), (3, -1, 2, (3, 0))])],
        [((0,), (0,), [(-2, 2, 4, (1, 1)), (-1, 0, 4, (3, 0)), (-3, -2, 2, (2, 0))])],
        [((0,), (0,), [(1, -1, 4, (3, 0)), (3, 0, 1, (1, 0))])],
    ],
    (2, 0, 0): [
        [((), (), [(1, -1, 2, (1, 0, 1, 0)), (-1, 1, 1, (0, 2, 0, 1)), (-2, 0, 4, (0, 2, 0, 0)), (1, 0, 2, (0, 0, 0, 6))])],
        [((), (), [(-3, 1, 2, (1, 0, 1, 0)), (3, 2, 4, (1, 0, 1, 0)), (1, 0, 2, (6, 0, 0, 0))])],
        [((), (), [(-1, -2, 2, (0, 0, 3, 0)), (2, 0, 2, (0, 0, 3, 0)), (2, 0, 2, (1, 0, 0, 0)), (1, 0, 2, (0, 6, 0, 0))])],
        [((), (), [(-1, 1, 1, (0, 1, 0, 1)), (1, 0, 2, (6, 0, 0, 0))])],
        [((), (), [(2, 2, 2, (0, 0, 0, 0)), (1, 0, 2, (0, 5, 0, 0))])],
        [((), (), [(3, -2, 1, (1, 0, 0, 1)), (1, 0, 2, (5, 0, 0, 0))])],
        [((), (), [(2, -2, 1, (0, 0, 1, 2)), (-2, 0, 2, (2, 0, 1, 0)), (-1, 0, 4, (1, 0, 0, 2)), (1, 0, 2, (0, 0, 5, 0))])],
        [((), (), [(-3, -1, 4, (1, 1, 1, 0)), (2, 2, 2, (1, 1, 1, 0)), (1, 0, 2, (0, 0, 5, 0))])],
        [((), (), [(1, 2, 4, (2, 0, 0, 1))])],
        [((), (), [(-1, 0, 4, (0, 1, 1, 2)), (-2, -1, 2, (1, 2, 0, 0))])],
        [((), (), [(-2, 0, 1, (2, 1, 1, 0)), (3, 1, 2, (0, 1, 0, 2)), (3, 0, 1, (1, 0, 3, 0))])],
        [((), (), [(-1, 0, 2, (0, 2, 0, 2))])],
        [((), (), [(-1, 0, 2, (3, 0, 0, 0)), (-3, 0, 1, (1, 3, 0, 0)), (1, -1, 2, (0, 1, 0, 2))])],
        [((), (), [(-3, -2, 2, (3, 0, 0, 1))])],
        [((), (), [(1, 2, 2, (0, 2, 0, 0)), (-3, -1, 4, (2, 0, 0, 0))])],
        [((), (), [(-2, -1, 4, (2, 0, 0, 1)), (3, 0, 1, (0, 0, 2, 1)), (3, 1, 2, (0, 2, 0, 1))])],
        [((), (), [(-2, -1, 2, (1, 2, 0, 1))])],
        [((), (), [(-3, 2, 1, (0, 0, 2, 0))])],
        [((), (), [(-1, -2, 2, (0, 0, 2, 0)), (-1, -1, 2, (0, 0, 1, 2))])],
        [((), (), [(2, -2, 2, (1, 0, 0, 2)), (-1, -2, 4, (0, 1, 0, 1))])],
    ],
    (2, 1, 0): [
        [((0,), (), [(2, 1, 2, (0, 0, 0, 2)), (1, 2, 2, (1, 0, 2, 0)), (1, 0, 2, (0, 6, 0, 0))]), ((1,), (), [(-3, -2, 1, (0, 0, 1, 1))])],
        [((0,), (), [(1, -2, 4, (2, 0, 0, 0)), (2, 2, 1, (1, 0, 0, 1)), (2, 2, 2, (1, 0, 0, 0)), (1, 0, 2, (0, 0, 6, 0))]), ((1,), (), [(3, -2, 1, (0, 0, 1, 0)), (3, 2, 1, (0, 0, 1, 0)), (-3, 2, 2, (3, 0, 0, 0))])],
        [((0,), (), [(3, -2, 2, (3, 0, 0, 0)), (1, 0, 2, (6, 0, 0, 0))]), ((1,), (), [(3, 2, 2, (0, 0, 1, 0))])],
        [((0,), (), [(3, 0, 1, (0, 2, 1, 0)), (1, 0, 2, (1, 1, 0, 1)), (1, 0, 2, (0, 6, 0, 0))]), ((1,), (), [(1, 2, 4, (0, 1, 2, 0)), (1, 0, 2, (1, 0, 0, 1))])],
        [((0,), (), [(3, 0, 2, (1, 1, 0, 0)), (1, 0, 2, (0, 0, 5, 0))]), ((1,), (), [(3, -1, 4, (0, 0, 1, 1))])],
        [((0,), (), [(-3, -2, 4, (0, 1, 1, 0)), (2, 0, 2, (1, 0, 1, 1)), (2, 1, 4, (2, 0, 0, 0)), (1, 0, 2, (0, 0, 5, 0))]), ((1,), (), [(1, 1, 2, (1, 0, 1, 0))])],
        [((0,), (), [(-1, 0, 4, (0, 3, 0, 0)), (3, 0, 1, (0, 0, 0, 0)), (1, 0, 2, (0, 0, 5, 0))]), ((1,), (), [(1, 2, 4, (1, 0, 1, 0))])],
        [((0,), (), [(3, -1, 4, (1, 0, 1, 1)), (1, 0, 2, (5, 0, 0, 0))]), ((1,), (), [(-1, 1, 2, (1, 1, 1, 0)), (-2, -1, 1, (1, 0, 1, 1))])],
        [((0,), (), [(2, 2, 4, (1, 0, 0, 2))]), ((1,), (), [(-3, 1, 2, (3, 0, 0, 1)), (-1, 0, 1, (0, 2, 1, 1))])],
        [((0,), (), [(2, 2, 2, (0, 1, 1, 1)), (-1, 0, 1, (2, 1, 0, 0)), (3, 0, 2, (1, 0, 1, 0))]), ((1,), (), [(1, 2, 4, (0, 0, 0, 4)), (-1, 0, 4, (2, 0, 0, 0))])],
        [((0,), (), [(3, 1, 4, (1, 0, 2, 1)), (-3, -2, 4, (0, 1, 0, 0)), (3, -1, 4, (0, 0, 0, 2))]), ((1,), (), [(-3, 2, 4, (1, 0, 2, 1)), (-1, -2, 2, (1, 2, 1, 0)), (3, 0, 2, (0, 0, 1, 3))])],
        [((0,), (), [(-2, 0, 2, (3, 0, 0, 0)), (2, 2, 1, (0, 1, 2, 1))]), ((1,), (), [(2, 0, 4, (1, 3, 0, 0))])],
        [((0,), (), [(-3, 0, 4, (0, 0, 3, 1)), (3, 2, 2, (3, 0, 1, 0))]), ((1,), (), [(2, 1, 2, (0, 0, 1, 3))])],
        [((0,), (), [(2, 0, 4, (0, 2, 0, 0)), (2, 0, 1, (2, 0, 0, 1)), (-3, -2, 1, (1, 0, 0, 1))]), ((1,), (), [(-2, -2, 2, (1, 0, 0, 3)), (1, 0, 1, (0, 0, 1, 0))])],
        [((0,), (), [(-3, 0, 1, (2, 0, 0, 0))]), ((1,), (), [(-1, 2, 1, (1, 0, 0, 0)), (3, -1, 4, (0, 1, 3, 0)), (-2, -2, 2, (1, 0, 0, 0))])],
        [((0,), (), [(-2, 2, 2, (0, 0, 1, 0)), (-2, 2, 1, (1, 1, 0, 0)), (-3, -1, 2, (0, 2, 0, 2))]), ((1,), (), [(1, -1, 2, (4, 0, 0, 0))])],
        [((0,), (), [(2, 2, 2, (1, 2, 0, 1))]), ((1,), (), [(-3, 2, 1, (1, 1, 1, 0))])],
        [((0,), (), [(-2, -2, 1, (1, 1, 0, 1))]), ((1,), (), [(3, 0, 1, (0, 0, 2, 2)), (3, 0, 2, (1, 0, 3, 0))])],
        [((0,), (), [(2, -2, 2, (0, 0, 0, 1)), (3, 0, 2, (0, 0, 1, 1)), (-3, -1, 2, (0, 0, 2, 0))]), ((1,), (), [(3, 0, 4, (1, 0, 0, 2)), (3, 0, 1, (1, 3, 0, 0))])],
        [((0,), (), [(-2, -1, 1, (2, 1, 0, 0)), (-2, 0, 1, (0, 0, 3, 0)), (1, 0, 2, (0, 0, 4, 0))]), ((1,), (), [(-2, -2, 1, (1, 0, 2, 0))])],
    ],
    (2, 0, 1): [
        [((), (0,), [(-3, 0, 2, (0, 0, 0, 2)), (1, 2, 2, (2, 0, 1, 0)), (1, 0, 4, (1, 1, 1, 0)), (1, 0, 2, (6, 0, 0, 0))]), ((), (1,), [(-3, -2, 1, (2, 0, 0, 0)), (3, 0, 2, (1, 0, 0, 1))])],
        [((), (0,), [(3, -2, 2, (2, 0, 0, 0)), (2, -2, 2, (3, 0, 0, 0)), (1, 0, 2, (6, 0, 0, 0))]), ((), (1,), [(2, -2, 1, (0, 2, 0, 1))])],
        [((), (0,), [(2, -1, 2, (0, 0, 2, 0)), (1, 0, 2, (0, 0, 0, 6))]), ((), (1,), [(-1, 0, 1, (1, 0, 1, 1)), (2, -1, 2, (0, 0, 0, 3)), (-1, 1, 4, (0, 0, 0, 0))])],
        [((), (0,), [(-3, 0, 2, (1, 1, 0, 1)), (-3, -2, 2, (1, 0, 0, 2)), (1, 0, 2, (6, 0, 0, 0))]), ((), (1,), [(-1, 0, 1, (0, 1, 1, 0)), (1, 1, 1, (1, 0, 1, 0)), (-1, -1, 2, (2, 0, 1, 0))])],
        [((), (0,), [(2, -1, 2, (0, 0, 0, 2)), (3, -1, 4, (0, 2, 0, 0)), (1, 0, 2, (0, 0, 5, 0))]), ((), (1,), [(2, -2, 4, (0, 2, 0, 1)), (-3, -1, 2, (0, 1, 0, 1))])],
        [((), (0,), [(3, 0, 4, (0, 2, 0, 1)), (-2, -1, 2, (0, 2, 0, 0)), (1, 0, 2, (0, 0, 0, 5))]), ((), (1,), [(-2, 0, 2, (1, 2, 0, 0)), (3, 0, 1, (0, 1, 2, 0)), (-3, 2, 2, (1, 0, 0, 0))])],
        [((), (0,), [(-2, -2, 2, (0, 2, 0, 1)), (-3, 0, 1, (0, 1, 0, 0)), (3, 0, 2, (2, 1, 0, 0)), (1, 0, 2, (0, 0, 5, 0))]), ((), (1,), [(-3, 2, 1, (1, 1, 1, 0)), (-1, 1, 2, (3, 0, 0, 0))])],
        [((), (0,), [(2, 1, 4, (1, 1, 1, 0)), (1, 0, 2, (0, 5, 0, 0))]), ((), (1,), [(-2, 0, 4, (1, 1, 1, 0))])],
        [((), (0,), [(2, 1, 4, (2, 0, 2, 0)), (-3, 1, 2, (0, 0, 1, 2))]), ((), (1,), [(3, 0, 2, (4, 0, 0, 0))])],
        [((), (0,), [(2, 0, 1, (3, 0, 0, 1)), (3, -2, 1, (4, 0, 0, 0)), (-1, 0, 4, (2, 0, 2, 0))]), ((), (1,), [(-3, -2, 2, (1, 0, 1, 1)), (2, -1, 2, (1, 1, 2, 0))])],
        [((), (0,), [(2, -2, 2, (2, 0, 1, 0)), (1, -1, 1, (2, 0, 1, 0)), (-3, -1, 2, (0, 0, 3, 0))]), ((), (1,), [(-2, 1, 2, (2, 0, 1, 0)), (-1, -1, 2, (0, 1, 3, 0))])],
        [((), (0,), [(3, 1, 2, (2, 2, 0, 0)), (-3, -2, 2, (0, 0, 2, 0))]), ((), (1,), [(-3, 1, 2, (3, 0, 0, 1)), (1, 2, 2, (0, 1, 0, 0))])],
        [((), (0,), [(-1, 0, 2, (0, 0, 0, 1)), (-1, 1, 2, (0, 1, 3, 0))]), ((), (1,), [(-2, 0, 2, (1, 0, 2, 1)), (3, 0, 2, (1, 1, 0, 0)), (-2, 0, 2, (2, 0, 0, 2))])],
        [((), (0,), [(1, 0, 4, (0, 0, 1, 2)), (-2, 0, 2, (0, 0, 2, 1))]), ((), (1,), [(1, 0, 4, (1, 0, 1, 1)), (3, 0, 2, (0, 0, 4, 0)), (2, -1, 4, (1, 0, 0, 0))])],
        [((), (0,), [(2, 2, 4, (1, 1, 1, 1)), (1, 1, 1, (2, 1, 1, 0))]), ((), (1,), [(3, 1, 2, (1, 1, 1, 0)), (-1, 1, 4, (1, 1, 0, 2)), (2, 2, 2, (2, 0, 1, 1))])],
        [((), (0,), [(-2, 2, 4, (0, 0, 1, 0))]), ((), (1,), [(1, 0, 4, (1, 1, 1, 0))])],
        [((), (0,), [(2, 0, 4, (1, 0, 0, 3)), (1, 0, 2, (0, 1, 0, 3)), (-3, 0, 2, (1, 1, 0, 1))]), ((), (1,), [(-2, -2, 4, (1, 0, 0, 3)), (3, 0, 4, (1, 2, 0, 1))])],
        [((), (0,), [(2, 0, 2, (0, 0, 2, 2)), (1, -1, 2, (0, 3, 0, 1))]), ((), (1,), [(-3, 0, 4, (0, 0, 0, 3)), (1, 0, 4, (0, 0, 2, 2))])],
        [((), (0,), [(-3, 0, 2, (0, 0, 0, 3))]), ((), (1,), [(2, 1, 4, (0, 0, 2, 2)), (3, 2, 4, (0, 1, 0, 2))])],
        [((), (0,), [(3, 0, 2, (0, 0, 0, 0)), (-1, 0, 2, (1, 0, 2, 0))]), ((), (1,), [(-1, 0, 4, (1, 0, 3, 0))])],
    ],
    (2, 1, 1): [
        [((0,), (0,), [(2, -1, 2, (3, 0, 0, 0)), (1, 0, 2, (0, 6, 0, 0))]), ((0,), (1,), [(-1, -1, 2, (2, 0, 1, 0))]), ((1,), (0,), [(-3, 0, 2, (1, 0, 1, 1)), (-2, 0, 2, (0, 0, 1, 1))]), ((1,), (1,), [(-1, 1, 4, (1, 0, 0, 1))])],
        [((0,), (0,), [(-3, 1, 1, (0, 0, 0, 1)), (1, 0, 2, (0, 0, 0, 6))]), ((0,), (1,), [(-2, 0, 4, (0, 3, 0, 0))]), ((1,), (0,), [(-3, 0, 4, (0, 0, 0, 0)), (-1, 2, 4, (1, 1, 1, 0))]), ((1,), (1,), [(-2, 0, 2, (1, 0, 1, 0))])],
        [((0,), (0,), [(2, -2, 2, (0, 1, 0, 1)), (3, 1, 4, (3, 0, 0, 0)), (1, 0, 2, (6, 0, 0, 0))]), ((0,), (1,), [(1, -2, 4, (1, 0, 0, 2)), (2, -2, 1, (1, 0, 1, 0)), (1, 0, 4, (1, 0, 0, 0))]), ((1,), (0,), [(-1, -2, 2, (1, 1, 1, 0))]), ((1,), (1,), [(2, 0, 2, (0, 1, 0, 0)), (-1, 2, 4, (0, 0, 3, 0)), (-1, 0, 4, (2, 1, 0, 0))])],
        [((0,), (0,), [(-2, -2, 1, (2, 0, 0, 1)), (-2, 1, 1, (0, 0, 2, 0)), (1, 2, 2, (1, 0, 2, 0)), (1, 0, 2, (6, 0, 0, 0))]), ((0,), (1,), [(2, 0, 4, (1, 2, 0, 0)), (-2, 2, 2, (0, 0, 2, 1)), (-1, -2, 4, (0, 3, 0, 0))]), ((1,), (0,), [(-1, -2, 4, (2, 1, 0, 0)), (3, 0, 2, (0, 1, 1, 1)), (-2, 2, 4, (0, 0, 2, 0))]), ((1,), (1,), [(2, -2, 2, (0, 0, 0, 3))])],
        [((0,), (0,), [(1, 0, 1, (0, 0, 0, 1)), (-1, -1, 1, (0, 1, 1, 0)), (-2, 0, 1, (0, 0, 1, 0)), (1, 0, 2, (0, 5, 0, 0))]), ((0,), (1,), [(1, 0, 1, (1, 0, 1, 0)), (1, -2, 2, (0, 1, 0, 2)), (-3, -2, 2, (2, 0, 0, 1))]), ((1,), (0,), [(-1, 0, 4, (0, 0, 1, 1)), (-2, 2, 1, (0, 1, 0, 0)), (1, 2, 2, (0, 0, 0, 1))]), ((1,), (1,), [(-2, 0, 4, (0, 3, 0, 0))])],
        [((0,), (0,), [(3, -2, 4, (1, 1, 0, 1)), (3, -2, 2, (1, 0, 0, 2)), (1, 0, 2, (0, 0, 0, 5))]), ((0,), (1,), [(2, -2, 1, (0, 0, 0, 1))]), ((1,), (0,), [(2, 0, 2, (0, 0, 1, 1))]), ((1,), (1,), [(3, 0, 2, (0, 0, 1, 2))])],
        [((0,), (0,), [(-2, 1, 2, (0, 1, 0, 0)), (2, 2, 2, (2, 0, 0, 0)), (1, 0, 2, (0, 0, 5, 0))]), ((0,), (1,), [(-1, -1, 2, (0, 0, 3, 0)), (-1, 0, 2, (0, 3, 0, 0)), (-3, -1, 2, (0, 0, 3, 0))]), ((1,), (0,), [(-1, -2, 2, (0, 3, 0, 0)), (-3, 2, 2, (1, 0, 1, 0)), (-3, -1, 2, (0, 0, 2, 0))]), ((1,), (1,), [(-1, 0, 2, (0, 1, 0, 0)), (3, -1, 1, (0, 1, 1, 1)), (1, 0, 2, (0, 0, 0, 0))])],
        [((0,), (0,), [(3, 1, 1, (0, 1, 2, 0)), (-2, -1, 2, (2, 0, 1, 0)), (-2, 1, 2, (0, 0, 0, 3)), (1, 0, 2, (0, 0, 5, 0))]), ((0,), (1,), [(2, 1, 1, (1, 0, 0, 0))]), ((1,), (0,), [(-1, 0, 4, (0, 2, 0, 0)), (-3, 1, 4, (0, 0, 1, 1)), (1, -2, 2, (0, 2, 0, 0))]), ((1,), (1,), [(-3, 2, 4, (0, 0, 0, 2)), (1, 2, 2, (0, 0, 2, 0))])],
        [((0,), (0,), [(1, -2, 2, (0, 0, 2, 0))]), ((0,), (1,), [(-3, 0, 2, (0, 1, 1, 2)), (1, 0, 2, (0, 2, 1, 0))]), ((1,), (0,), [(1, -2, 2, (0, 0, 4, 0))]), ((1,), (1,), [(3, 0, 4, (1, 2, 0, 1)), (-2, -2, 2, (0, 0, 1, 2)), (1, 1, 2, (0, 0, 1, 0))])],
        [((0,), (0,), [(2, -1, 2, (1, 0, 0, 2))]), ((0,), (1,), [(-1, 0, 2, (0, 0, 0, 3)), (-2, -1, 2, (0, 3, 0, 1)), (-2, 0, 2, (0, 1, 1, 0))]), ((1,), (0,), [(-3, 0, 2, (2, 1, 0, 1)), (-1, 1, 2, (1, 2, 1, 0))]), ((1,), (1,), [(2, 2, 2, (0, 1, 0, 2)), (-1, 1, 4, (0, 0, 2, 0))])],
        [((0,), (0,), [(3, -1, 2, (0, 0, 0, 4)), (3, 0, 4, (1, 2, 1, 0)), (-1, -1, 2, (1, 1, 1, 1))]), ((0,), (1,), [(2, 0, 4, (1, 3, 0, 0)), (-3, 1, 2, (1, 0, 0, 1)), (-1, -1, 2, (2, 2, 0, 0))]), ((1,), (0,), [(3, 2, 1, (0, 0, 1, 0)), (1, 1, 4, (1, 0, 0, 0)), (2, 1, 4, (0, 0, 2, 0))]), ((1,), (1,), [(-1, -1, 1, (0, 2, 1, 0))])],
        [((0,), (0,), [(1, -2, 2, (0, 0, 1, 2)), (-2, 1, 4, (2, 0, 1, 0))]), ((0,), (1,), [(3, 2, 1, (4, 0, 0, 0))]), ((1,), (0,), [(1, -2, 1, (2, 1, 1, 0)), (2, 2, 4, (1, 1, 0, 2))]), ((1,), (1,), [(-1, -1, 2, (1, 1, 0, 2)), (1, 0, 1, (1, 3, 0, 0))])],
        [((0,), (0,), [(1, 0, 2, (0, 0, 2, 1)), (3, -2, 1, (1, 0, 0, 2)), (1, -1, 1, (1, 1, 0, 1))]), ((0,), (1,), [(-2, 0, 4, (0, 1, 1, 0)), (-2, 1, 2, (1, 1, 1, 1))]), ((1,), (0,), [(-1, -2, 2, (1, 0, 2, 0))]), ((1,), (1,), [(2, -2, 4, (1, 2, 1, 0))])],
        [((0,), (0,), [(2, 0, 1, (1, 2, 0, 0))]), ((0,), (1,), [(1, -2, 2, (0, 3, 1, 0))]), ((1,), (0,), [(2, 0, 1, (2, 1, 0, 0)), (1, 0, 4, (0, 1, 1, 0))]), ((1,), (1,), [(-3, 0, 1, (3, 0, 0, 1)), (-3, -1, 1, (0, 3, 0, 0))])],
        [((0,), (0,), [(-1, 2, 4, (0, 0, 0, 0)), (1, -1, 1, (0, 1, 1, 2)), (1, 0, 4, (2, 0, 2, 0))]), ((0,), (1,), [(2, -2, 1, (2, 1, 0, 0)), (-3, -1, 1, (1, 1, 0, 1)), (3, 2, 4, (3, 0, 0, 0))]), ((1,), (0,), [(3, -1, 2, (0, 0, 0, 2))]), ((1,), (1,), [(1, 0, 4, (0, 0, 3, 0))])],
        [((0,), (0,), [(-1, -2, 2, (1, 0, 0, 1)), (-2, 0, 2, (0, 1, 2, 1)), (-2, 2, 2, (0, 1, 0, 2))]), ((0,), (1,), [(1, 2, 2, (1, 0, 1, 0)), (1, -2, 1, (0, 0, 0, 4))]), ((1,), (0,), [(-3, -1, 2, (0, 1, 0, 0))]), ((1,), (1,), [(1, 1, 4, (0, 1, 0, 0))])],
        [((0,), (0,), [(-2, 0, 2, (1, 0, 0, 2))]), ((0,), (1,), [(-3, -1, 2, (0, 1, 0, 1)), (1, 2, 1, (1, 0, 1, 2)), (3, 0, 2, (0, 0, 1, 2))]), ((1,), (0,), [(-1, 2, 1, (0, 0, 0, 3))]), ((1,), (1,), [(-3, 0, 4, (3, 1, 0, 0)), (-1, 0, 4, (1, 2, 0, 0))])],
        [((0,), (0,), [(1, -1, 4, (2, 1, 0, 0))]), ((0,), (1,), [(3, 2, 2, (1, 0, 2, 1)), (1, -1, 4, (0, 0, 2, 2))]), ((1,), (0,), [(1, 0, 1, (0, 0, 1, 3)), (1, 2, 2, (2, 0, 0, 2))]), ((1,), (1,), [(3, 0, 4, (2, 0, 0, 2))])],
        [((0,), (0,), [(-3, 1, 1, (0, 1, 2, 1))]), ((0,), (1,), [(2, -2, 2, (1, 0, 0, 1)), (-2, 0, 2, (2, 1, 0, 0))]), ((1,), (0,), [(2, -1, 4, (0, 0, 1, 3))]), ((1,), (1,), [(-2, 0, 4, (1, 0, 0, 1))])],
        [((0,), (0,), [(3, 2, 2, (0, 1, 0, 1))]), ((0,), (1,), [(-2, 0, 2, (0, 1, 0, 2)), (2, -2, 2, (0, 1, 1, 0))]), ((1,), (0,), [(2, 2, 1, (1, 1, 0, 0)), (-2, 0, 2, (0, 0, 0, 4))]), ((1,), (1,), [(2, -1, 2, (3, 0, 0, 1))])],
    ],
    (2, 2, 0): [
        [((0, 1), (), [(-2, 0, 2, (0, 0, 1, 2)), (3, 1, 2, (0, 0, 0, 0)), (2, -1, 1, (1, 2, 0, 0)), (1, 0, 2, (0, 0, 6, 0))])],
        [((0, 1), (), [(-2, 0, 2, (1, 0, 2, 0)), (1, 0, 2, (0, 6, 0, 0))])],
        [((0, 1), (), [(1, 1, 4, (1, 0, 0, 0)), (-3, 1, 2, (0, 0, 0, 3)), (1, 0, 2, (0, 6, 0, 0))])],
        [((0, 1), (), [(-1, -2, 1, (0, 1, 0, 1)), (3, -1, 2, (0, 0, 0, 0)), (1, 0, 2, (0, 0, 0, 6))])],
        [((0, 1), (), [(2, 1, 2, (0, 0, 0, 1)), (1, 0, 2, (5, 0, 0, 0))])],
        [((0, 1), (), [(2, -2, 1, (0, 2, 0, 1)), (-2, 1, 4, (0, 1, 0, 0)), (1, 0, 2, (0, 0, 0, 5))])],
        [((0, 1), (), [(3, -2, 2, (0, 0, 0, 1)), (-1, -2, 2, (0, 0, 1, 2)), (1, 0, 2, (0, 5, 0, 0))])],
        [((0, 1), (), [(1, -2, 1, (0, 1, 1, 1)), (3, -1, 4, (0, 1, 0, 2)), (1, 0, 2, (0, 0, 5, 0))])],
        [((0, 1), (), [(-1, 0, 2, (1, 1, 0, 0))])],
        [((0, 1), (), [(-2, -2, 1, (3, 1, 0, 0)), (1, -1, 1, (0, 1, 0, 3)), (3, -1, 1, (0, 0, 1, 1))])],
        [((0, 1), (), [(-3, 0, 2, (1, 0, 3, 0)), (3, 0, 2, (0, 1, 2, 1)), (-3, 2, 2, (0, 0, 3, 0))])],
        [((0, 1), (), [(2, -1, 2, (1, 1, 0, 0))])],
        [((0, 1), (), [(-3, 2, 2, (0, 2, 2, 0))])],
        [((0, 1), (), [(1, 2, 1, (1, 0, 0, 2))])],
        [((0, 1), (), [(1, -1, 2, (1, 0, 2, 1))])],
        [((0, 1), (), [(2, 1, 2, (0, 0, 3, 1)), (3, 1, 4, (0, 0, 0, 3)), (2, 0, 2, (2, 1, 0, 1))])],
        [((0, 1), (), [(3, 2, 1, (1, 0, 0, 3)), (2, 0, 1, (0, 0, 1, 1))])],
        [((0, 1), (), [(-2, 0, 4, (1, 1, 0, 1)), (-2, -1, 1, (1, 0, 0, 3))])],
        [((0, 1), (), [(3, -1, 2, (1, 2, 0, 1)), (1, -1, 2, (1, 0, 0, 0))])],
        [((0, 1), (), [(-3, 0, 4, (0, 0, 0, 4))])],
    ],
    (2, 0, 2): [
        [((), (0, 1), [(2, 1, 2, (1, 1, 0, 1)), (1, 0, 2, (0, 6, 0, 0))])],
        [((), (0, 1), [(2, 2, 2, (1, 1, 1, 0)), (1, 1, 4, (0, 0, 3, 0)), (-2, -2, 1, (1, 0, 0, 2)), (1, 0, 2, (6, 0, 0, 0))])],
        [((), (0, 1), [(2, 1, 4, (0, 3, 0, 0)), (-2, -1, 1, (0, 1, 0, 2)), (1, 0, 2, (0, 6, 0, 0))])],
        [((), (0, 1), [(-3, 1, 2, (0, 1, 1, 1)), (1, 0, 2, (0, 6, 0, 0))])],
        [((), (0, 1), [(-3, 2, 2, (1, 1, 1, 0)), (1, 2, 2, (0, 1, 1, 0)), (-2, 0, 2, (1, 1, 0, 1)), (1, 0, 2, (0, 0, 0, 5))])],
        [((), (0, 1), [(2, 1, 1, (0, 1, 2, 0)), (1, 2, 1, (0, 0, 1, 0)), (1, 1, 1, (0, 0, 1, 2)), (1, 0, 2, (0, 5, 0, 0))])],
        [((), (0, 1), [(-2, 1, 1, (1, 2, 0, 0)), (-2, 0, 2, (2, 0, 0, 0)), (1, 0, 2, (0, 0, 5, 0))])],
        [((), (0, 1), [(1, -2, 2, (1, 1, 0, 0)), (3, 0, 2, (0, 0, 0, 1)), (1, 0, 2, (0, 5, 0, 0))])],
        [((), (0, 1), [(3, 2, 2, (0, 0, 0, 3))])],
        [((), (0, 1), [(1, 1, 2, (0, 1, 0, 3))])],
        [((), (0, 1), [(-2, -2, 4, (2, 0, 0, 2))])],
        [((), (0, 1), [(-2, 1, 2, (0, 1, 3, 0)), (-3, 0, 1, (0, 0, 0, 3))])],
        [((), (0, 1), [(-2, 0, 2, (4, 0, 0, 0)), (3, -1, 2, (0, 2, 0, 2))])],
        [((), (0, 1), [(1, 0, 2, (1, 0, 0, 1)), (-1, -1, 1, (3, 0, 1, 0))])],
        [((), (0, 1), [(-3, -2, 2, (0, 0, 0, 0)), (3, -2, 2, (0, 1, 0, 0))])],
        [((), (0, 1), [(1, 1, 2, (3, 0, 1, 0)), (2, 2, 2, (2, 1, 0, 0))])],
        [((), (0, 1), [(-2, -1, 2, (1, 2, 1, 0)), (1, 0, 4, (3, 0, 1, 0))])],
        [((), (0, 1), [(-1, 0, 1, (3, 0, 1, 0))])],
        [((), (0, 1), [(-3, -2, 2, (1, 1, 0, 0)), (2, 0, 2, (0, 1, 0, 3)), (-3, 2, 2, (0, 0, 1, 0))])],
        [((), (0, 1), [(3, 0, 2, (2, 0, 2, 0)), (1, 0, 1, (0, 0, 4, 0)), (2, 1, 1, (1, 0, 1, 2))])],
    ],
}

# n -> 20 unit-sup-norm scalar fields (cre/den are dyadic rationals)
SCALAR_FIELDS = {
    1: [
        [((), (), [(1, 0, 2, (1, 1))])],
        [((), (), [(1, 0, 2, (0, 2))])],
        [((), (), [(1, 0, 2, (2, 0))])],
        [((), (), [(181, 0, 512, (2, 1))])],
        [((), (), [(181, 0, 512, (1, 2))])],
        [((), (), [(1, 0, 4, (3, 1))])],
        [((), (), [(1, 0, 4, (2, 2))])],
        [((), (), [(1, 0, 4, (1, 3))])],
        [((), (), [(181, 0, 1024, (3, 2))])],
        [((), (), [(181, 0, 1024, (2, 3))])],
        [((), (), [(1, 0, 8, (3, 3))])],
        [((), (), [(1, 0, 8, (4, 2))])],
        [((), (), [(1, 0, 8, (2, 4))])],
        [((), (), [(181, 0, 1024, (4, 1))])],
        [((), (), [(181, 0, 1024, (1, 4))])],
        [((), (), [(1, 0, 8, (5, 1))])],
        [((), (), [(1, 0, 8, (1, 5))])],
        [((), (), [(181, 0, 2048, (4, 3))])],
        [((), (), [(1, 0, 8, (6, 0))])],
        [((), (), [(1, 0, 8, (0, 6))])],
    ],
    2: [
        [((), (), [(1, 0, 2, (1, 0, 1, 0))])],
        [((), (), [(1, 0, 2, (0, 0, 2, 0))])],
        [((), (), [(1, 0, 2, (2, 0, 0, 0))])],
        [((), (), [(181, 0, 512, (2, 0, 1, 0))])],
        [((), (), [(181, 0, 512, (1, 0, 2, 0))])],
        [((), (), [(1, 0, 4, (3, 0, 1, 0))])],
        [((), (), [(1, 0, 4, (2, 0, 2, 0))])],
        [((), (), [(1, 0, 4, (1, 0, 3, 0))])],
        [((), (), [(181, 0, 1024, (3, 0, 2, 0))])],
        [((), (), [(181, 0, 1024, (2, 0, 3, 0))])],
        [((), (), [(1, 0, 8, (3, 0, 3, 0))])],
        [((), (), [(1, 0, 8, (4, 0, 2, 0))])],
        [((), (), [(1, 0, 8, (2, 0, 4, 0))])],
        [((), (), [(181, 0, 1024, (4, 0, 1, 0))])],
        [((), (), [(181, 0, 1024, (1, 0, 4, 0))])],
        [((), (), [(1, 0, 8, (5, 0, 1, 0))])],
        [((), (), [(1, 0, 8, (1, 0, 5, 0))])],
        [((), (), [(181, 0, 2048, (4, 0, 3, 0))])],
        [((), (), [(1, 0, 8, (6, 0, 0, 0))])],
        [((), (), [(1, 0, 8, (0, 0, 6, 0))])],
    ],
}
