'''
Level 1 perfect crystal of type C_n^(1).

Vertices are the empty vertex and the unordered pairs (x, y), x <= y, of
letters of the alphabet of rank 2n. The coordinate view of a vertex is the
vector (x_1, ..., x_n, x_n-bar, ..., x_1-bar) of letter multiplicities,
stored as a list indexed by rank - 1.
'''
import logging
from collections import namedtuple

from crystal_partitions.algebra import Alphabet
from crystal_partitions.algebra import C_EMPTY
from crystal_partitions.algebra import EMPTY
from crystal_partitions.algebra import SECONDARY
from crystal_partitions.algebra import chi
from crystal_partitions.algebra import secondary


Vertex = namedtuple('Vertex', ['x', 'y'])

EMPTY_VERTEX = Vertex(0, 0)


def is_empty(vertex):
    return vertex.x == 0


class Crystal(object):
    '''
    The crystal B of C_n^(1) at level 1, n >= 2

    :param n: rank of the affine algebra
    :type n: int
    '''

    def __init__(self, n):
        if n < 2:
            raise ValueError('Crystal:Rank:%d:C_n^(1) needs n >= 2' % (n))
        self.n = n
        self.m = 2 * n
        self.alphabet = Alphabet(self.m)
        self.logger = logging.getLogger('crystal_partitions')
        self._vertices = None
        self._energy = None

    def vertices(self):
        '''
        Empty vertex first, then the pairs in lexicographic rank order
        '''
        if self._vertices is None:
            vertices = [EMPTY_VERTEX]
            for x in range(1, self.m + 1):
                for y in range(x, self.m + 1):
                    vertices.append(Vertex(x, y))
            self._vertices = vertices
        return list(self._vertices)

    def check_vertex(self, vertex):
        if is_empty(vertex):
            if vertex.y != 0:
                raise ValueError('Crystal:Vertex:%s:malformed empty vertex' % (str(vertex)))
            return
        self.alphabet.check_rank(vertex.x)
        self.alphabet.check_rank(vertex.y)
        if vertex.x > vertex.y:
            raise ValueError('Crystal:Vertex:%s:pairs are stored with x <= y' % (str(vertex)))

    def pair(self, x, y):
        if x > y:
            x, y = y, x
        vertex = Vertex(x, y)
        self.check_vertex(vertex)
        return vertex

    def ground_vertex(self, i):
        '''
        b_0 is the empty vertex, b_i = (i, i-bar) for 1 <= i <= n
        '''
        if i < 0 or i > self.n:
            raise ValueError('Crystal:Ground:%d:index out of 0..%d' % (i, self.n))
        if i == 0:
            return EMPTY_VERTEX
        return Vertex(i, self.alphabet.bar(i))

    def colour_of(self, vertex):
        if is_empty(vertex):
            return C_EMPTY
        return secondary(vertex.x, vertex.y)

    def vertex_of(self, colour):
        if colour.kind == EMPTY:
            return EMPTY_VERTEX
        if colour.kind != SECONDARY:
            raise ValueError('Crystal:Colour:%s:not the colour of a vertex' % (colour.kind))
        return self.pair(colour.x, colour.y)

    def monomial_of_vertex(self, vertex):
        return self.alphabet.monomial(self.colour_of(vertex))

    def label(self, vertex):
        return self.alphabet.colour_label(self.colour_of(vertex))

    # Coordinates

    def coordinates(self, vertex):
        coords = [0] * self.m
        if not is_empty(vertex):
            coords[vertex.x - 1] += 1
            coords[vertex.y - 1] += 1
        return coords

    def from_coordinates(self, coords):
        '''
        Vertex with the given multiplicities, None outside the vertex set
        '''
        if any(c < 0 for c in coords) or sum(coords) not in (0, 2):
            return None
        letters = []
        for rank, count in enumerate(coords, start=1):
            letters.extend([rank] * count)
        if not letters:
            return EMPTY_VERTEX
        return Vertex(letters[0], letters[1])

    # Kashiwara operators

    def _check_index(self, i):
        if i < 0 or i > self.n:
            raise ValueError('Crystal:Operator:%d:index out of 0..%d' % (i, self.n))

    def kashiwara_f(self, i, vertex):
        self._check_index(i)
        v = self.coordinates(vertex)
        m = self.m
        if i == 0:
            if v[0] >= v[m - 1]:
                v[0] += 2
            elif v[0] == v[m - 1] - 1:
                v[0] += 1
                v[m - 1] -= 1
            else:
                v[m - 1] -= 2
        elif i < self.n:
            # x_i at i - 1, x_{i+1} at i, x_{i+1}-bar at m - i - 1, x_i-bar at m - i
            if v[i] >= v[m - i - 1]:
                v[i - 1] -= 1
                v[i] += 1
            else:
                v[m - i - 1] -= 1
                v[m - i] += 1
        else:
            v[self.n - 1] -= 1
            v[self.n] += 1
        return self.from_coordinates(v)

    def kashiwara_e(self, i, vertex):
        self._check_index(i)
        v = self.coordinates(vertex)
        m = self.m
        if i == 0:
            if v[0] >= v[m - 1] + 2:
                v[0] -= 2
            elif v[0] == v[m - 1] + 1:
                v[0] -= 1
                v[m - 1] += 1
            else:
                v[m - 1] += 2
        elif i < self.n:
            if v[i] > v[m - i - 1]:
                v[i - 1] += 1
                v[i] -= 1
            else:
                v[m - i - 1] += 1
                v[m - i] -= 1
        else:
            v[self.n - 1] += 1
            v[self.n] -= 1
        return self.from_coordinates(v)

    def edges(self):
        '''
        Edges (source, target, i) of the crystal graph, target = f_i(source)
        '''
        result = []
        for vertex in self.vertices():
            for i in range(self.n + 1):
                target = self.kashiwara_f(i, vertex)
                if target is not None:
                    result.append((vertex, target, i))
        return result

    def to_dot(self):
        '''
        DOT description of the crystal graph, one node per vertex and one
        labelled edge per Kashiwara arrow
        '''
        dot = 'digraph crystal {\n'
        for vertex in self.vertices():
            dot += '    "%s" [label="%s"];\n' % (self.label(vertex), self.label(vertex))
        for source, target, i in self.edges():
            dot += '    "%s" -> "%s" [label="%d"];\n' % (self.label(source), self.label(target), i)
        dot += '}\n'
        return dot

    # Energy function

    def _size(self, vertex):
        return 0 if is_empty(vertex) else 2

    def _count(self, vertex, predicate):
        if is_empty(vertex):
            return 0
        return chi(predicate(vertex.x)) + chi(predicate(vertex.y))

    def energy_kkm(self, b, b2):
        '''
        H(b (x) b2) as the maximum over j of theta_j, theta'_j, eta_j and
        eta'_j written with letter counts

        With x_k, xbar_k the multiplicities of the letters k and k-bar in b
        (primed for b2) and half = (|b2| - |b|) / 2:
        theta_j = sum_{k<j} (xbar_k - xbar'_k) + half, where sum_{k<j} xbar_k
        counts the letters of rank above j-bar;
        theta'_j = sum_{k<j} (x'_k - x_k) - half, where sum_{k<j} x_k counts
        the letters of rank below j;
        eta_j = theta_j + xbar_j - x_j and eta'_j = theta'_j + x'_j - xbar'_j.
        energy_kkm_coordinates evaluates the same sums on the coordinates.
        '''
        self.check_vertex(b)
        self.check_vertex(b2)
        half = (self._size(b2) - self._size(b)) // 2
        best = None
        for j in range(1, self.n + 1):
            jbar = self.alphabet.bar(j)
            theta = (self._count(b, lambda r: r > jbar) - self._count(b2, lambda r: r > jbar) + half)
            theta2 = (self._count(b2, lambda r: r < j) - self._count(b, lambda r: r < j) - half)
            eta = (self._count(b, lambda r: r >= jbar) - self._count(b2, lambda r: r > jbar) -
                   self._count(b, lambda r: r == j) + half)
            eta2 = (self._count(b2, lambda r: r <= j) - self._count(b, lambda r: r < j) -
                    self._count(b2, lambda r: r == jbar) - half)
            value = max(theta, theta2, eta, eta2)
            if best is None or value > best:
                best = value
        return best

    def energy_kkm_coordinates(self, b, b2):
        '''
        Same function computed on raw coordinates, kept as a reference
        '''
        v = self.coordinates(b)
        w = self.coordinates(b2)
        m = self.m
        half = (sum(w) - sum(v)) // 2
        best = None
        for j in range(1, self.n + 1):
            theta = sum(v[m - k] - w[m - k] for k in range(1, j)) + half
            theta2 = sum(w[k - 1] - v[k - 1] for k in range(1, j)) - half
            eta = theta + v[m - j] - v[j - 1]
            eta2 = theta2 + w[j - 1] - w[m - j]
            value = max(theta, theta2, eta, eta2)
            if best is None or value > best:
                best = value
        return best

    def energy_simple(self, b, b2):
        '''
        Closed formula for H(b (x) b2)

        H(empty (x) empty) = 0, H(empty (x) pair) = H(pair (x) empty) = 1 and
        for pairs chi(x >= x') + chi(y >= y') - chi(y >= y' > x >= x'), with
        strict inequalities when y'-bar = x.
        '''
        self.check_vertex(b)
        self.check_vertex(b2)
        if is_empty(b) and is_empty(b2):
            return 0
        if is_empty(b) or is_empty(b2):
            return 1
        x, y = b
        x2, y2 = b2
        if self.alphabet.bar(y2) != x:
            return chi(x >= x2) + chi(y >= y2) - chi(y >= y2 > x >= x2)
        return chi(x > x2) + chi(y > y2) - chi(y > y2 > x > x2)

    def energy(self, b, b2):
        '''
        Tabulated energy, computed once with the closed formula
        '''
        if self._energy is None:
            table = {}
            for u in self.vertices():
                for v in self.vertices():
                    table[(u, v)] = self.energy_simple(u, v)
            self._energy = table
        return self._energy[(b, b2)]

    def min_diff(self, left, right):
        '''
        Minimal difference between a part coloured c_b (left, larger) and a
        part coloured c_b' (right, smaller): H(b' (x) b)

        :param left: colour of the larger part
        :type left: :class:`crystal_partitions.algebra.Colour`
        :param right: colour of the smaller part
        :type right: :class:`crystal_partitions.algebra.Colour`
        '''
        return self.energy(self.vertex_of(right), self.vertex_of(left))

    def check_ground_energies(self):
        '''
        H(b_i (x) b_i) = 0 for every ground vertex, the grounded models rely on it
        '''
        for i in range(self.n + 1):
            b = self.ground_vertex(i)
            if self.energy(b, b) != 0:
                raise ValueError('Crystal:Ground:H(b_%d (x) b_%d) = %d, expected 0' % (i, i, self.energy(b, b)))
        return True

    def verify_energy(self):
        '''
        Compare both energy formulations on every ordered pair of vertices

        :return: report dict with pairs_checked, mismatches and first_mismatch
        '''
        pairs = 0
        mismatches = 0
        first = None
        for b in self.vertices():
            for b2 in self.vertices():
                pairs += 1
                kkm = self.energy_kkm(b, b2)
                simple = self.energy_simple(b, b2)
                if kkm != simple:
                    mismatches += 1
                    if first is None:
                        first = {'b': self.label(b), 'b2': self.label(b2), 'kkm': kkm, 'simple': simple}
        self.logger.debug('Crystal:Energy:n=%d:Pairs:%d:Mismatches:%d' % (self.n, pairs, mismatches))
        report = {'n': self.n, 'pairs_checked': pairs, 'mismatches': mismatches}
        if first is not None:
            report['first_mismatch'] = first
        return report

    def energy_class(self, b, b2):
        '''
        Predicted energy of two pairs from the comparison of their letters:
        2 iff x >= y', 0 iff (x < x' and y < y') or (y-bar >= x = y'-bar = x')
        or (y-bar = x = y'-bar < x'), 1 otherwise
        '''
        x, y = b
        x2, y2 = b2
        bar = self.alphabet.bar
        if x >= y2:
            return 2
        if (x < x2 and y < y2) or (bar(y) >= x == bar(y2) == x2) or (bar(y) == x == bar(y2) < x2):
            return 0
        return 1
