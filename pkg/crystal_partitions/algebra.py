'''
Barred alphabet, colours and coloured integers shared by every model.

Letters are ranks 1..m of the totally ordered alphabet. For the crystal of
C_n^(1) we have m = 2n, ranks 1..n are the letters 1..n and ranks n+1..2n
are the barred letters n-bar..1-bar.
'''
from collections import namedtuple


EMPTY = 'empty'
PRIMARY = 'primary'
SECONDARY = 'secondary'
INFINITY = 'infinity'

# Unused coordinates are 0 so that colours stay totally ordered.
Colour = namedtuple('Colour', ['kind', 'x', 'y'])
ColouredInt = namedtuple('ColouredInt', ['size', 'colour'])

C_EMPTY = Colour(EMPTY, 0, 0)
C_INFINITY = Colour(INFINITY, 0, 0)


def primary(u):
    return Colour(PRIMARY, u, 0)


def secondary(x, y):
    '''
    Secondary colour c_{x,y} = c_x c_y, stored with x <= y
    '''
    if x > y:
        x, y = y, x
    return Colour(SECONDARY, x, y)


def chi(condition):
    return 1 if condition else 0


class Alphabet(object):
    '''
    Ordered alphabet {1 < ... < m} with its bar involution.

    Colour monomials are only defined for even m (the crystal alphabet): a
    plain letter j contributes +e_j, a barred letter j-bar contributes -e_j.
    For odd m every monomial is the empty vector.
    '''

    def __init__(self, m):
        if m < 1:
            raise ValueError('Alphabet:Size:%d:must be positive' % (m))
        self.m = m
        self.n = m // 2
        self.dim = self.n if m % 2 == 0 else 0

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.m == self.m

    def __hash__(self):
        return hash(('alphabet', self.m))

    def check_rank(self, rank):
        if rank < 1 or rank > self.m:
            raise ValueError('Alphabet:Rank:%s:out of 1..%d' % (str(rank), self.m))

    def bar(self, rank):
        self.check_rank(rank)
        return self.m + 1 - rank

    def label(self, rank):
        '''
        Display form of a letter, barred letters carry a combining overline
        '''
        self.check_rank(rank)
        if self.m % 2 == 0 and rank > self.n:
            return str(self.m + 1 - rank) + '\u0305'
        return str(rank)

    def colour_label(self, colour):
        if colour.kind == EMPTY:
            return '∅'
        if colour.kind == INFINITY:
            return '∞'
        if colour.kind == PRIMARY:
            return self.label(colour.x)
        return '%s,%s' % (self.label(colour.x), self.label(colour.y))

    def zero(self):
        return (0,) * self.dim

    def letter_monomial(self, rank):
        self.check_rank(rank)
        if self.dim == 0:
            return ()
        vector = [0] * self.dim
        if rank <= self.n:
            vector[rank - 1] = 1
        else:
            vector[self.m - rank] = -1
        return tuple(vector)

    def monomial(self, colour):
        '''
        Exponent vector of a colour in the basis c_1, ..., c_n

        :param colour: colour of a part
        :type colour: :class:`Colour`
        :return: tuple of length dim
        '''
        if colour.kind == EMPTY:
            return self.zero()
        if colour.kind == PRIMARY:
            return self.letter_monomial(colour.x)
        if colour.kind == SECONDARY:
            return add_vectors(self.letter_monomial(colour.x), self.letter_monomial(colour.y))
        raise ValueError('Alphabet:Monomial:no monomial for sentinel colour')

    def secondary_colours(self):
        colours = []
        for x in range(1, self.m + 1):
            for y in range(x, self.m + 1):
                colours.append(secondary(x, y))
        return colours

    # Primary-coloured integers

    def check_primary(self, part):
        if part.colour.kind != PRIMARY:
            raise ValueError('Alphabet:Primary:expected a primary colour, got %s' % (part.colour.kind))
        self.check_rank(part.colour.x)

    def key(self, part):
        '''
        Position of a primary-coloured integer in the total order
        ... < k_1 < ... < k_m < (k+1)_1 < ...
        '''
        self.check_primary(part)
        return part.size * self.m + part.colour.x - 1

    def from_key(self, key):
        return ColouredInt(key // self.m, primary(key % self.m + 1))

    def primary_ge(self, a, b):
        self.check_primary(a)
        self.check_primary(b)
        return a.size - b.size >= chi(a.colour.x < b.colour.x)

    def primary_gt(self, a, b):
        self.check_primary(a)
        self.check_primary(b)
        return a.size - b.size >= chi(a.colour.x <= b.colour.x)

    def succ(self, part):
        return self.from_key(self.key(part) + 1)

    def succ_inv(self, part):
        return self.from_key(self.key(part) - 1)

    def shift(self, part, size):
        '''
        Add an integer to the size of a coloured integer, keeping the colour
        '''
        return ColouredInt(part.size + size, part.colour)


def add_vectors(a, b):
    return tuple(u + v for u, v in zip(a, b))
