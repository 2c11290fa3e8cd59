'''
Grounded partitions of the crystal and the rho difference model.
'''
from crystal_partitions.algebra import ColouredInt
from crystal_partitions.algebra import SECONDARY
from crystal_partitions.algebra import chi
from crystal_partitions.algebra import secondary
from crystal_partitions.models.interface import PartitionModel


EXACT = 'exact'
ATLEAST = 'atleast'


def rho(left, right):
    '''
    Minimal difference of the rho model between a part coloured left (the
    larger part) and a part coloured right (the smaller part).

    With left = c_{x',y'} and right = c_{x,y}:
    chi(x >= x') + chi(y >= y') - chi(y >= y' > x >= x')

    :param left: secondary colour of the larger part
    :type left: :class:`crystal_partitions.algebra.Colour`
    :param right: secondary colour of the smaller part
    :type right: :class:`crystal_partitions.algebra.Colour`
    :return: int in {0, 1, 2}
    '''
    if left.kind != SECONDARY or right.kind != SECONDARY:
        raise ValueError('Rho:Colour:rho is only defined on secondary colours')
    x2, y2 = left.x, left.y
    x, y = right.x, right.y
    return chi(x >= x2) + chi(y >= y2) - chi(y >= y2 > x >= x2)


def rho_follows(left, right):
    '''
    left >>_rho right for two secondary-coloured integers
    '''
    return left.size - right.size >= rho(left.colour, right.colour)


def omega(alphabet, i):
    '''
    Minimal part omega_i: omega_0 = (-1)_{c_{m,m}} and
    omega_i = 0_{c_{i, (i+1)-bar}} for 1 <= i <= m // 2
    '''
    if i < 0 or i > alphabet.m // 2:
        raise ValueError('Omega:Index:%d:out of 0..%d' % (i, alphabet.m // 2))
    if i == 0:
        return ColouredInt(-1, secondary(alphabet.m, alphabet.m))
    return ColouredInt(0, secondary(i, alphabet.bar(i + 1)))


class GroundedModel(PartitionModel):
    '''
    Grounded partitions (pi_0, ..., pi_{s-1}, 0_{c_{b_i}}) coloured by the
    vertices of the crystal, with pi_{s-1} != 0_{c_{b_i}}.

    With relation EXACT the size difference of adjacent parts equals the
    minimal difference, with ATLEAST it is at least that value.
    '''

    def __init__(self, crystal, i, relation, truncation):
        PartitionModel.__init__(self, truncation)
        if relation not in (EXACT, ATLEAST):
            raise ValueError('Grounded:Relation:%s:unknown relation' % (str(relation)))
        crystal.check_ground_energies()
        self.crystal = crystal
        self.i = i
        self.relation = relation
        self.dim = crystal.n
        self._ground = ColouredInt(0, crystal.colour_of(crystal.ground_vertex(i)))
        self._colours = [crystal.colour_of(b) for b in crystal.vertices()]

    def ground(self):
        return self._ground

    def candidates(self):
        return [ColouredInt(size, colour) for size in range(self.truncation + 1) for colour in self._colours]

    def admits(self, part):
        return part != self._ground and part.colour in self._colours and part.size >= 0

    def weight(self, part):
        return part.size

    def monomial(self, part):
        return self.crystal.alphabet.monomial(part.colour)

    def follows(self, left, right):
        if left == self._ground and right == self._ground:
            return False
        need = self.crystal.min_diff(left.colour, right.colour)
        if self.relation == EXACT:
            return left.size - right.size == need
        return left.size - right.size >= need


class RhoModel(PartitionModel):
    '''
    Partitions (pi_0, ..., pi_{s-1}, 0_{c_{b_i}}) with secondary colours,
    adjacent parts satisfying the rho conditions and the last body part
    satisfying the boundary rho_i(c_b, c_inf): H(b_i (x) b) for b != b_i
    and 1 for b = b_i.
    '''

    def __init__(self, crystal, i, truncation):
        PartitionModel.__init__(self, truncation)
        crystal.check_ground_energies()
        self.crystal = crystal
        self.i = i
        self.dim = crystal.n
        self._ground_vertex = crystal.ground_vertex(i)
        self._ground = ColouredInt(0, crystal.colour_of(self._ground_vertex))
        self._colours = crystal.alphabet.secondary_colours()

    def ground(self):
        return self._ground

    def candidates(self):
        return [ColouredInt(size, colour) for size in range(self.truncation + 1) for colour in self._colours]

    def admits(self, part):
        return part.colour.kind == SECONDARY and part.size >= 0

    def weight(self, part):
        return part.size

    def monomial(self, part):
        return self.crystal.alphabet.monomial(part.colour)

    def boundary(self, colour):
        '''
        rho_i(colour, c_inf)
        '''
        vertex = self.crystal.vertex_of(colour)
        if vertex == self._ground_vertex:
            return 1
        return self.crystal.energy(self._ground_vertex, vertex)

    def follows(self, left, right):
        if not self.admits(left):
            return False
        if right == self._ground:
            return left.size >= self.boundary(left.colour)
        return rho_follows(left, right)

    def omega_mismatches(self, max_size):
        '''
        Parts p_c with 0 <= p <= max_size where the boundary rule disagrees
        with p_c >>_rho omega_i. Empty when the ground may be traded for omega_i.
        '''
        last = omega(self.crystal.alphabet, self.i)
        mismatches = []
        for size in range(max_size + 1):
            for colour in self._colours:
                part = ColouredInt(size, colour)
                if (size >= self.boundary(colour)) != rho_follows(part, last):
                    mismatches.append(part)
        return mismatches


class RhoChainModel(PartitionModel):
    '''
    Chains (pi_0, ..., pi_{s-1}, g) with pi_j >>_rho pi_{j+1} ending at a
    fixed secondary-coloured ground g, over any alphabet.
    '''

    def __init__(self, alphabet, ground, truncation):
        PartitionModel.__init__(self, truncation)
        if ground.colour.kind != SECONDARY:
            raise ValueError('RhoChain:Ground:ground must be secondary-coloured')
        self.alphabet = alphabet
        self.dim = alphabet.dim
        self._ground = ground
        self._colours = alphabet.secondary_colours()

    def ground(self):
        return self._ground

    def candidates(self):
        return [ColouredInt(size, colour) for size in range(self.truncation + 1) for colour in self._colours]

    def admits(self, part):
        return part.colour.kind == SECONDARY

    def weight(self, part):
        return part.size

    def monomial(self, part):
        return self.alphabet.monomial(part.colour)

    def follows(self, left, right):
        return rho_follows(left, right)
