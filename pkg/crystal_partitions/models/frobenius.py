'''
Frobenius description of the rho partitions.

A secondary-coloured integer splits into a larger primary half eta and a
smaller primary half zeta with zeta <= eta <= zeta + 1. Applied part by part,
the split sends rho chains to two-row arrays (mu, nu) of primary-coloured
integers whose rows strictly decrease and whose columns interlace.
'''
from collections import namedtuple

from crystal_partitions.algebra import ColouredInt
from crystal_partitions.algebra import SECONDARY
from crystal_partitions.algebra import primary
from crystal_partitions.algebra import secondary
from crystal_partitions.models.grounded import RhoChainModel
from crystal_partitions.models.grounded import RhoModel
from crystal_partitions.models.grounded import omega
from crystal_partitions.models.interface import PartitionModel


Column = namedtuple('Column', ['top', 'bottom'])


def eta_zeta(part):
    '''
    2k_{c_{x,y}} -> (k_{c_y}, k_{c_x}) and (2k+1)_{c_{x,y}} -> ((k+1)_{c_x}, k_{c_y})

    :param part: secondary-coloured integer
    :type part: :class:`crystal_partitions.algebra.ColouredInt`
    :return: (eta, zeta) primary-coloured integers
    '''
    if part.colour.kind != SECONDARY:
        raise ValueError('Frobenius:Split:%s:only secondary colours split' % (part.colour.kind))
    k = part.size // 2
    x, y = part.colour.x, part.colour.y
    if part.size % 2 == 0:
        return ColouredInt(k, primary(y)), ColouredInt(k, primary(x))
    return ColouredInt(k + 1, primary(x)), ColouredInt(k, primary(y))


def compose(eta, zeta):
    '''
    Secondary-coloured integer with halves (eta, zeta), inverse of eta_zeta
    '''
    u, v = eta.colour.x, zeta.colour.x
    if eta.size == zeta.size and v <= u:
        return ColouredInt(2 * eta.size, secondary(v, u))
    if eta.size == zeta.size + 1 and u <= v:
        return ColouredInt(2 * zeta.size + 1, secondary(u, v))
    raise ValueError('Frobenius:Compose:(%s, %s):halves do not interlace' % (str(eta), str(zeta)))


class FrobeniusModel(PartitionModel):
    '''
    Pairs of rows (mu_0 > ... > mu_s) and (nu_0 > ... > nu_s) of primary
    coloured integers over an alphabet of size m, with nu_j <= mu_j <= nu_j + 1
    for j < s and the last column fixed. Parts of the model are columns.

    :param alphabet: primary letters
    :type alphabet: :class:`crystal_partitions.algebra.Alphabet`
    :param ground_column: fixed last column (mu_s, nu_s)
    :type ground_column: :class:`Column`
    :param truncation: largest size of a pair
    :type truncation: int
    '''

    def __init__(self, alphabet, ground_column, truncation):
        PartitionModel.__init__(self, truncation)
        alphabet.check_primary(ground_column.top)
        alphabet.check_primary(ground_column.bottom)
        self.alphabet = alphabet
        self.dim = alphabet.dim
        self._ground = Column(*ground_column)

    def ground(self):
        return self._ground

    def candidates(self):
        alphabet = self.alphabet
        columns = []
        low = min(self._ground.bottom.size, 0)
        for size in range(low, self.truncation + 1):
            for letter in range(1, alphabet.m + 1):
                bottom = ColouredInt(size, primary(letter))
                start = alphabet.key(bottom)
                for step in range(alphabet.m + 1):
                    columns.append(Column(alphabet.from_key(start + step), bottom))
        return columns

    def interlaces(self, column):
        alphabet = self.alphabet
        top, bottom = column
        return alphabet.primary_ge(top, bottom) and alphabet.primary_ge(alphabet.shift(bottom, 1), top)

    def admits(self, column):
        return column != self._ground and self.interlaces(column)

    def weight(self, column):
        return column.top.size + column.bottom.size

    def monomial(self, column):
        alphabet = self.alphabet
        top = alphabet.letter_monomial(column.top.colour.x)
        bottom = alphabet.letter_monomial(column.bottom.colour.x)
        return tuple(a + b for a, b in zip(top, bottom))

    def follows(self, left, right):
        alphabet = self.alphabet
        return alphabet.primary_gt(left.top, right.top) and alphabet.primary_gt(left.bottom, right.bottom)

    @staticmethod
    def rows(columns):
        '''
        (mu, nu) rows of a sequence of columns
        '''
        return tuple(c.top for c in columns), tuple(c.bottom for c in columns)

    @staticmethod
    def columns(mu, nu):
        if len(mu) != len(nu):
            raise ValueError('Frobenius:Rows:rows of different lengths %d and %d' % (len(mu), len(nu)))
        return tuple(Column(top, bottom) for top, bottom in zip(mu, nu))


def ground_column(part):
    return Column(*eta_zeta(part))


class FrobeniusBijection(object):
    '''
    Componentwise eta/zeta map between rho chains and Frobenius pairs.

    The source partitions end with source.ground(), the pairs end with the
    column of split_ground. For the crystal grounds these differ: the
    ground 0_{c_{b_i}} is traded for omega_i.

    :param source: model of the rho partitions
    :type source: :class:`crystal_partitions.models.interface.PartitionModel`
    :param split_ground: secondary part whose halves form the last column
    :type split_ground: :class:`crystal_partitions.algebra.ColouredInt`
    :param alphabet: letters of the Frobenius rows
    :type alphabet: :class:`crystal_partitions.algebra.Alphabet`
    '''

    def __init__(self, source, split_ground, alphabet):
        self.source = source
        self.split_ground = split_ground
        self.target = FrobeniusModel(alphabet, ground_column(split_ground), 0)

    @staticmethod
    def for_crystal(crystal, i):
        '''
        Bijection P_{i,rho} -> Frobenius pairs grounded at the halves of omega_i
        '''
        return FrobeniusBijection(RhoModel(crystal, i, 0), omega(crystal.alphabet, i), crystal.alphabet)

    @staticmethod
    def for_chains(alphabet, ground):
        '''
        Bijection between rho chains ending at ground and pairs grounded at its halves
        '''
        return FrobeniusBijection(RhoChainModel(alphabet, ground, 0), ground, alphabet)

    def to_frobenius(self, parts):
        parts = tuple(parts)
        if not self.source.is_partition(parts):
            raise ValueError('Frobenius:Forward:not a rho partition: %s' % (str(parts)))
        columns = tuple(ground_column(part) for part in parts[:-1]) + (self.target.ground(),)
        return FrobeniusModel.rows(columns)

    def from_frobenius(self, mu, nu):
        columns = FrobeniusModel.columns(mu, nu)
        if not self.target.is_partition(columns):
            raise ValueError('Frobenius:Inverse:not a Frobenius pair: %s / %s' % (str(mu), str(nu)))
        parts = tuple(compose(c.top, c.bottom) for c in columns[:-1]) + (self.source.ground(),)
        if not self.source.is_partition(parts):
            raise ValueError('Frobenius:Inverse:image is not a rho partition: %s' % (str(parts)))
        return parts
