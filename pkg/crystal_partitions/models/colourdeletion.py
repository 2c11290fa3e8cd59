'''
Deletion of the colour c_0 = c_empty.

The bijection Phi sends a grounded partition with relation ATLEAST to a
pair (mu, nu): mu is a rho partition and nu an ordinary partition. Parts of
colour c_0, repeated free parts and free parts completing one of the
forbidden patterns move to nu; the inverse inserts the parts of nu back.
'''
import logging

from crystal_partitions.algebra import C_EMPTY
from crystal_partitions.algebra import C_INFINITY
from crystal_partitions.algebra import ColouredInt
from crystal_partitions.algebra import EMPTY
from crystal_partitions.algebra import INFINITY
from crystal_partitions.algebra import secondary
from crystal_partitions.models.grounded import ATLEAST
from crystal_partitions.models.grounded import GroundedModel
from crystal_partitions.models.grounded import RhoModel


SUP = 'sup'
FREE = 'free'
INF = 'inf'


class ColourClassification(object):
    '''
    Decomposition C_sup, C_free, C_inf of the vertex colours of the crystal
    with the maps delta, gamma and the difference function epsilon_i
    extended to c_inf.

    :param crystal: crystal of C_n^(1)
    :type crystal: :class:`crystal_partitions.crystal.Crystal`
    :param i: ground index
    :type i: int
    '''

    def __init__(self, crystal, i):
        self.crystal = crystal
        self.i = i
        self.ground_vertex = crystal.ground_vertex(i)
        self.colours = [crystal.colour_of(b) for b in crystal.vertices()]
        self.sup = [c for c in self.colours if self.kind(c) == SUP]
        self.free = [c for c in self.colours if self.kind(c) == FREE]
        self.inf = [c for c in self.colours if self.kind(c) == INF]

    def kind(self, colour):
        if colour.kind == EMPTY:
            return FREE
        bar = self.crystal.alphabet.bar
        x, y = colour.x, colour.y
        if y == bar(x):
            return FREE
        if bar(y) < x:
            return SUP
        return INF

    def epsilon(self, left, right):
        '''
        epsilon_i(left, right), right may be c_inf
        '''
        if right.kind == INFINITY:
            vertex = self.crystal.vertex_of(left)
            if vertex == self.ground_vertex:
                return 1
            return self.crystal.energy(self.ground_vertex, vertex)
        return self.crystal.min_diff(left, right)

    def delta(self, colour):
        bar = self.crystal.alphabet.bar
        kind = self.kind(colour)
        if kind == SUP:
            return secondary(bar(colour.y), colour.y)
        if kind == INF:
            return secondary(colour.x, bar(colour.x))
        raise ValueError('Deletion:Delta:only defined on sup and inf colours')

    def gamma(self, left, right):
        bar = self.crystal.alphabet.bar
        kinds = (self.kind(left), self.kind(right))
        if kinds == (SUP, INF):
            z = max(right.x, bar(left.y))
            return secondary(z, bar(z))
        if kinds == (SUP, SUP):
            return secondary(bar(left.y), left.y)
        if kinds == (INF, INF):
            return secondary(right.x, bar(right.x))
        raise ValueError('Deletion:Gamma:not defined on (%s, %s)' % kinds)

    def check_well_defined(self, delta_overrides=None, gamma_overrides=None):
        '''
        Check the seven conditions making epsilon well defined according to
        the decomposition, plus epsilon(c_0, c) = epsilon(c, c_0) = 1.

        :param delta_overrides: replacement values of delta, used to test the checker
        :type delta_overrides: dict
        :param gamma_overrides: replacement values of gamma keyed by colour pairs
        :type gamma_overrides: dict
        :return: report dict, status 'ok' or 'violation' with the condition number
        '''
        delta_overrides = delta_overrides or {}
        gamma_overrides = gamma_overrides or {}

        def delta(c):
            return delta_overrides.get(c, self.delta(c))

        def gamma(c, c2):
            return gamma_overrides.get((c, c2), self.gamma(c, c2))

        def violation(condition, *colours):
            label = self.crystal.alphabet.colour_label
            return {'status': 'violation', 'n': self.crystal.n, 'i': self.i, 'condition': condition,
                    'colours': [label(c) for c in colours]}

        eps = self.epsilon
        for c in self.free:
            for c2 in self.free:
                if eps(c, c2) != (1 if c != c2 else 0):
                    return violation(1, c, c2)
        for c in self.sup:
            for c2 in self.free:
                if eps(c, c2) not in (0, 1) or eps(c2, c) not in (1, 2):
                    return violation(2, c, c2)
            if delta(c) not in self.free or eps(c, delta(c)) != 0:
                return violation(2, c, delta(c))
        for c in self.inf:
            for c2 in self.free:
                if eps(c2, c) not in (0, 1) or eps(c, c2) not in (1, 2):
                    return violation(3, c2, c)
            if delta(c) not in self.free or eps(delta(c), c) != 0:
                return violation(3, delta(c), c)
        for c in self.sup:
            for c2 in self.inf:
                if eps(c, c2) not in (0, 1) or eps(c2, c) not in (1, 2):
                    return violation(4, c, c2)
                if eps(c, c2) == 0:
                    g = gamma(c, c2)
                    if g not in self.free or eps(c, g) != 0 or eps(g, c2) != 0:
                        return violation(4, c, c2)
        for c in self.sup:
            for c2 in self.sup:
                if eps(c, c2) in (0, 1):
                    g = gamma(c, c2)
                    if g not in self.free or eps(c, g) != 0 or eps(g, c2) != 1:
                        return violation(5, c, c2)
        for c in self.inf:
            for c2 in self.inf:
                if eps(c, c2) in (0, 1):
                    g = gamma(c, c2)
                    if g not in self.free or eps(c, g) != 1 or eps(g, c2) != 0:
                        return violation(6, c, c2)
        for c in self.free:
            if eps(c, C_INFINITY) != 1:
                return violation(7, c, C_INFINITY)
        for c in self.inf:
            if eps(c, C_INFINITY) not in (1, 2):
                return violation(7, c, C_INFINITY)
        for c in self.sup:
            if eps(c, C_INFINITY) not in (0, 1):
                return violation(7, c, C_INFINITY)
        for c in self.colours:
            if c != C_EMPTY and (eps(C_EMPTY, c) != 1 or eps(c, C_EMPTY) != 1):
                return violation(0, C_EMPTY, c)
        return {'status': 'ok', 'n': self.crystal.n, 'i': self.i}

    def equal_size_runs_ok(self, body):
        '''
        Every run of equal-size parts is made of sup colours, then copies of
        a single free colour, then inf colours
        '''
        start = 0
        while start < len(body):
            end = start
            while end < len(body) and body[end].size == body[start].size:
                end += 1
            order = {SUP: 0, FREE: 1, INF: 2}
            kinds = [self.kind(part.colour) for part in body[start:end]]
            if any(order[a] > order[b] for a, b in zip(kinds, kinds[1:])):
                return False
            frees = set(part.colour for part in body[start:end] if self.kind(part.colour) == FREE)
            if len(frees) > 1:
                return False
            start = end
        return True

    def removable(self, body):
        '''
        Indices of the free parts of body completing a forbidden pattern
        with their neighbours; the part after the last one is 0_{c_inf}

        :param body: parts without c_0 colour and without repeated free parts
        :type body: list
        :return: set of indices
        '''
        sentinel = ColouredInt(0, C_INFINITY)
        marked = set()
        for j, part in enumerate(body):
            colour = part.colour
            if self.kind(colour) != FREE or colour == C_EMPTY:
                continue
            p = part.size
            left = body[j - 1] if j > 0 else None
            right = body[j + 1] if j + 1 < len(body) else sentinel
            if self._matches(left, part, right, p):
                marked.add(j)
        return marked

    def _matches(self, left, part, right, p):
        f = part.colour
        eps = self.epsilon
        right_kind = INFINITY if right.colour.kind == INFINITY else self.kind(right.colour)
        if left is not None:
            left_kind = self.kind(left.colour)
            q = left.size
            cl = left.colour
            if right_kind != INFINITY:
                cr = right.colour
                # p_c, p_gamma, p_c' with c sup, c' inf, epsilon(c, c') = 0
                if (left_kind, right_kind) == (SUP, INF) and q == p == right.size:
                    if eps(cl, cr) == 0 and f == self.gamma(cl, cr):
                        return True
                # p_c, p_gamma, (p-1)_c' with c, c' sup
                if (left_kind, right_kind) == (SUP, SUP) and q == p and right.size == p - 1:
                    if eps(cl, cr) in (0, 1) and f == self.gamma(cl, cr):
                        return True
                # (p+1)_c, p_gamma, p_c' with c, c' inf
                if (left_kind, right_kind) == (INF, INF) and q == p + 1 and right.size == p:
                    if eps(cl, cr) in (0, 1) and f == self.gamma(cl, cr):
                        return True
            if left_kind == SUP and q == p and f == self.delta(cl):
                if right.size == p - 1 and right_kind in (FREE, INF, INFINITY):
                    return True
                if right.size <= p - 2:
                    return True
        if right_kind == INF and right.size == p and f == self.delta(right.colour):
            if left is None:
                return True
            left_kind = self.kind(left.colour)
            if left.size == p + 1 and left_kind in (FREE, SUP):
                return True
            if left.size >= p + 2:
                return True
        return False

    def contains_forbidden_pattern(self, body):
        '''
        Pattern oracle: c_0 parts, repeated free parts or a removable free part
        '''
        for part in body:
            if part.colour == C_EMPTY:
                return True
        for left, right in zip(body, body[1:]):
            if left == right and self.kind(left.colour) == FREE:
                return True
        return bool(self.removable(body))


class PhiBijection(object):
    '''
    Colour deletion bijection for the ground b_i

    :param crystal: crystal of C_n^(1)
    :type crystal: :class:`crystal_partitions.crystal.Crystal`
    :param i: ground index
    :type i: int
    '''

    def __init__(self, crystal, i):
        self.logger = logging.getLogger('crystal_partitions')
        self.crystal = crystal
        self.i = i
        self.classes = ColourClassification(crystal, i)
        self.grounded = GroundedModel(crystal, i, ATLEAST, 0)
        self.rho_model = RhoModel(crystal, i, 0)

    def forward(self, lam):
        '''
        :param lam: grounded partition, ground part included
        :type lam: tuple
        :return: (mu, nu) with mu a rho partition (ground included) and nu a
                 tuple of positive integers in non increasing order
        '''
        lam = tuple(lam)
        if not self.grounded.is_partition(lam):
            raise ValueError('Phi:Forward:not a grounded partition: %s' % (str(lam)))
        ground = lam[-1]
        body = list(lam[:-1])
        nu = [part.size for part in body if part.colour == C_EMPTY]
        body = [part for part in body if part.colour != C_EMPTY]
        kept = []
        for part in body:
            if kept and part == kept[-1] and self.classes.kind(part.colour) == FREE:
                nu.append(part.size)
                continue
            kept.append(part)
        marked = self.classes.removable(kept)
        mu = []
        for j, part in enumerate(kept):
            if j in marked:
                nu.append(part.size)
            else:
                mu.append(part)
        mu = tuple(mu) + (ground,)
        if not self.rho_model.is_partition(mu):
            raise ValueError('Phi:Forward:image is not a rho partition: %s' % (str(mu)))
        return mu, tuple(sorted(nu, reverse=True))

    def inverse(self, mu, nu):
        '''
        Insert the parts of nu into mu

        :param mu: rho partition, ground part included
        :type mu: tuple
        :param nu: positive integers
        :type nu: iterable
        :return: grounded partition, ground part included
        '''
        mu = tuple(mu)
        if not self.rho_model.is_partition(mu):
            raise ValueError('Phi:Inverse:not a rho partition: %s' % (str(mu)))
        nu = sorted(nu, reverse=True)
        if any(p <= 0 for p in nu):
            raise ValueError('Phi:Inverse:parts of nu must be positive')
        ground = mu[-1]
        body = list(mu[:-1])
        remaining = {}
        for p in nu:
            remaining[p] = remaining.get(p, 0) + 1
        for p in sorted(remaining, reverse=True):
            if self._insert_one(body, p):
                remaining[p] -= 1
        for p in sorted(remaining, reverse=True):
            count = remaining[p]
            if count == 0:
                continue
            j = self._free_index(body, p)
            if j is not None:
                body[j:j] = [body[j]] * count
            else:
                j = 0
                while j < len(body) and body[j].size > p:
                    j += 1
                body[j:j] = [ColouredInt(p, C_EMPTY)] * count
        lam = tuple(body) + (ground,)
        if not self.grounded.is_partition(lam):
            raise ValueError('Phi:Inverse:insertion produced an invalid partition: %s' % (str(lam)))
        return lam

    def _free_index(self, body, p):
        for j, part in enumerate(body):
            if part.size == p and self.classes.kind(part.colour) == FREE:
                return j
        return None

    def _insert_one(self, body, p):
        '''
        Insert one free part of size p between sup or inf parts of size p,
        when mu has no free part of that size. Returns True on insertion.
        '''
        classes = self.classes
        if self._free_index(body, p) is not None:
            return False
        indices = [j for j, part in enumerate(body) if part.size == p]
        if not indices:
            return False
        kinds = [classes.kind(body[j].colour) for j in indices]
        for a, b in zip(indices, indices[1:]):
            if classes.kind(body[a].colour) == SUP and classes.kind(body[b].colour) == INF:
                colour = classes.gamma(body[a].colour, body[b].colour)
                body.insert(b, ColouredInt(p, colour))
                return True
        if all(kind == SUP for kind in kinds):
            j = indices[-1]
            c1 = body[j].colour
            right = body[j + 1] if j + 1 < len(body) else ColouredInt(0, C_INFINITY)
            if right.size == p - 1 and right.colour.kind != INFINITY and classes.kind(right.colour) == SUP:
                colour = classes.gamma(c1, right.colour)
            else:
                colour = classes.delta(c1)
            body.insert(j + 1, ColouredInt(p, colour))
            return True
        if all(kind == INF for kind in kinds):
            j = indices[0]
            c2 = body[j].colour
            left = body[j - 1] if j > 0 else None
            if left is not None and left.size == p + 1 and classes.kind(left.colour) == INF:
                colour = classes.gamma(left.colour, c2)
            else:
                colour = classes.delta(c2)
            body.insert(j, ColouredInt(p, colour))
            return True
        return False
