'''
Paths of secondary-coloured integers and the frequency description of the
rho chains.

A secondary-coloured integer over an alphabet of size m is located by the
key pair (a, b) = (key(eta), key(zeta)) of its halves, with 0 <= a - b <= m.
The operator f moves eta to its successor, d moves zeta to its predecessor.
A path starts at a part with a = b and takes m steps, so it ends at a part
with a - b = m. Parts are ordered by (a, -b), every step increases a part.
'''
import logging
import time

import humanfriendly

from crystal_partitions.algebra import ColouredInt
from crystal_partitions.algebra import SECONDARY
from crystal_partitions.algebra import add_vectors
from crystal_partitions.algebra import secondary
from crystal_partitions.models.frobenius import compose
from crystal_partitions.models.frobenius import eta_zeta
from crystal_partitions.models.grounded import RhoChainModel
from crystal_partitions.models.grounded import omega
from crystal_partitions.models.interface import PartitionModel
from crystal_partitions.models.shardthreads import run_shards
from crystal_partitions.series import TruncatedSeries


def key_pair(alphabet, part):
    eta, zeta = eta_zeta(part)
    return alphabet.key(eta), alphabet.key(zeta)


def from_key_pair(alphabet, a, b):
    return compose(alphabet.from_key(a), alphabet.from_key(b))


def order_key(alphabet, part):
    '''
    Sort key of the total order on parts: eta first, then reversed zeta
    '''
    a, b = key_pair(alphabet, part)
    return (a, -b)


def op_f(alphabet, part):
    a, b = key_pair(alphabet, part)
    if a - b >= alphabet.m:
        raise ValueError('Paths:f:%s:eta is already zeta + 1' % (str(part)))
    return from_key_pair(alphabet, a + 1, b)


def op_d(alphabet, part):
    a, b = key_pair(alphabet, part)
    if a - b >= alphabet.m:
        raise ValueError('Paths:d:%s:eta is already zeta + 1' % (str(part)))
    return from_key_pair(alphabet, a, b - 1)


def seed(alphabet, s):
    '''
    Starting part of the paths with key pair (s, s)
    '''
    return from_key_pair(alphabet, s, s)


def _walk(alphabet, a, b):
    if a - b == alphabet.m:
        yield ((a, b),)
        return
    for na, nb in ((a + 1, b), (a, b - 1)):
        for rest in _walk(alphabet, na, nb):
            yield ((a, b),) + rest


def iter_paths(alphabet, start):
    '''
    All paths (e_0, ..., e_m) starting at start

    :param start: part with eta = zeta
    :return: generator of tuples of parts
    '''
    s, t = key_pair(alphabet, start)
    if s != t:
        raise ValueError('Paths:Seed:%s:a path starts at a part with eta = zeta' % (str(start)))
    for cells in _walk(alphabet, s, s):
        path = tuple(from_key_pair(alphabet, a, b) for a, b in cells)
        check_path(alphabet, path)
        yield path


def check_path(alphabet, path):
    '''
    Along a path eta never decreases, zeta never increases and parts increase
    '''
    pairs = [key_pair(alphabet, part) for part in path]
    for (a, b), (a2, b2) in zip(pairs, pairs[1:]):
        if a2 < a or b2 > b or (a2, -b2) <= (a, -b):
            raise ValueError('Paths:Path:not monotone at %s' % (str(path)))
        if (a2 - a) + (b - b2) != 1:
            raise ValueError('Paths:Path:not a single step at %s' % (str(path)))
    return True


def paths_through(alphabet, part):
    '''
    Every path containing part, ordered by seed
    '''
    a, b = key_pair(alphabet, part)
    result = []
    for s in range(b, a + 1):
        for path in iter_paths(alphabet, seed(alphabet, s)):
            if part in path:
                result.append(path)
    return result


def share_path(alphabet, first, second):
    '''
    True if a path contains both parts, found by walking from every seed
    between the two parts. A walk is cut when it leaves the box spanned by
    the parts; a walk through both parts always extends to a full path.
    '''
    a1, b1 = key_pair(alphabet, first)
    a2, b2 = key_pair(alphabet, second)
    targets = frozenset([(a1, b1), (a2, b2)])
    top, bottom = max(a1, a2), min(b1, b2)

    def reaches(a, b, seen):
        if (a, b) in targets:
            seen = seen | frozenset([(a, b)])
        if seen == targets:
            return True
        if a - b == alphabet.m:
            return False
        for na, nb in ((a + 1, b), (a, b - 1)):
            if na <= top and nb >= bottom and reaches(na, nb, seen):
                return True
        return False

    return any(reaches(s, s, frozenset()) for s in range(max(b1, b2), min(a1, a2) + 1))


def share_path_interval(alphabet, first, second):
    '''
    Closed form of share_path: with A the larger part in the order on parts,
    zeta(A) <= zeta(B) <= eta(B) <= eta(A) <= zeta(A) + 1
    '''
    if order_key(alphabet, first) < order_key(alphabet, second):
        first, second = second, first
    a1, b1 = key_pair(alphabet, first)
    a2, b2 = key_pair(alphabet, second)
    return b1 <= b2 <= a2 <= a1 <= b1 + alphabet.m


def in_zs_plus(alphabet, part):
    '''
    Positive parts and the zero parts 0_{c_{x,y}} with x > y-bar
    '''
    if part.colour.kind != SECONDARY:
        return False
    if part.size > 0:
        return True
    return part.size == 0 and part.colour.x > alphabet.bar(part.colour.y)


def omegas(alphabet):
    '''
    The set Omega: omega_0, ..., omega_{m // 2} and the parts 0_{c_{u, u-bar}}
    for 1 <= u <= ceil(m / 2)
    '''
    m = alphabet.m
    result = [omega(alphabet, u) for u in range(m // 2 + 1)]
    for u in range(1, (m + 1) // 2 + 1):
        result.append(ColouredInt(0, secondary(u, alphabet.bar(u))))
    return result


def special_path(alphabet):
    '''
    The path of Omega: e_{m-2u} = omega_u and e_{m-2u+1} = 0_{c_{u, u-bar}}
    '''
    m = alphabet.m
    entries = [None] * (m + 1)
    for u in range(m // 2 + 1):
        entries[m - 2 * u] = omega(alphabet, u)
    for u in range(1, (m + 1) // 2 + 1):
        entries[m - 2 * u + 1] = ColouredInt(0, secondary(u, alphabet.bar(u)))
    return tuple(entries)


def is_path(alphabet, parts):
    parts = tuple(parts)
    if len(parts) != alphabet.m + 1:
        return False
    for part, following in zip(parts, parts[1:]):
        try:
            if following not in (op_f(alphabet, part), op_d(alphabet, part)):
                return False
        except ValueError:
            return False
    a, b = key_pair(alphabet, parts[0])
    return a == b


def max_path_sum(alphabet, frequencies, allowed):
    '''
    Largest sum of frequencies along a path whose entries all satisfy allowed

    :param frequencies: mapping key pair (a, b) -> frequency
    :type frequencies: dict
    :param allowed: predicate on key pairs
    :return: int, 0 when no allowed path meets the support
    '''
    if not frequencies:
        return 0
    m = alphabet.m
    low = min(b for a, b in frequencies)
    high = max(a for a, b in frequencies)
    memo = {}

    def best(a, b):
        if (a, b) in memo:
            return memo[(a, b)]
        value = None
        if allowed((a, b)):
            here = frequencies.get((a, b), 0)
            if a - b == m:
                value = here
            else:
                tails = [t for t in (best(a + 1, b), best(a, b - 1)) if t is not None]
                if tails:
                    value = here + max(tails)
        memo[(a, b)] = value
        return value

    result = 0
    for s in range(low, high + 1):
        value = best(s, s)
        if value is not None and value > result:
            result = value
    return result


def _allowed_pairs(alphabet):
    allowed_omega = set(key_pair(alphabet, u) for u in omegas(alphabet))

    def allowed(pair):
        if pair in allowed_omega:
            return True
        return in_zs_plus(alphabet, from_key_pair(alphabet, *pair))

    return allowed


def fictitious_omegas(alphabet, k):
    '''
    Fictitious frequencies of the vector k = (k_0, ..., k_n), n = ceil(m / 2):
    k_i on omega_i, and k_n on 0_{c_{n,n}} when m is odd. Zero entries are dropped.
    '''
    m = alphabet.m
    n = (m + 1) // 2
    if len(k) != n + 1:
        raise ValueError('Paths:Vector:expected %d values, got %d' % (n + 1, len(k)))
    if any(value < 0 for value in k):
        raise ValueError('Paths:Vector:%s:values must be non negative' % (str(k)))
    grounds = [omega(alphabet, i) for i in range(m // 2 + 1)]
    if m % 2 == 1:
        grounds.append(ColouredInt(0, secondary(n, n)))
    return dict((ground, value) for ground, value in zip(grounds, k) if value > 0)


def frequencies_admissible(alphabet, fictitious, parts):
    '''
    Frequency condition: with the fictitious frequencies on Omega, every
    path inside Omega and the positive parts carries a total frequency of
    at most the sum of the fictitious frequencies

    :param fictitious: mapping element of Omega -> frequency
    :type fictitious: dict
    :param parts: parts of the partition, all in the positive set
    '''
    frequencies = {}
    for ground, value in fictitious.items():
        pair = key_pair(alphabet, ground)
        frequencies[pair] = frequencies.get(pair, 0) + value
    for part in parts:
        if not in_zs_plus(alphabet, part):
            return False
        pair = key_pair(alphabet, part)
        frequencies[pair] = frequencies.get(pair, 0) + 1
    return max_path_sum(alphabet, frequencies, _allowed_pairs(alphabet)) <= sum(fictitious.values())


def path_sum_admissible(alphabet, ground, parts):
    '''
    Frequency condition with fictitious frequency 1 on ground

    :param ground: element of Omega
    :param parts: parts of the partition, ground excluded
    '''
    return frequencies_admissible(alphabet, {ground: 1}, parts)


def dilated_size(alphabet, part):
    '''
    Size of the dilation of a secondary part: a + b + 1 - m
    '''
    a, b = key_pair(alphabet, part)
    return a + b + 1 - alphabet.m


class PathModel(PartitionModel):
    '''
    Partitions with parts in the positive set whose parts, together with a
    fictitious ground omega, pairwise share no path.

    With dilated set, a part weighs its dilated size and the series is
    colourless.

    :param alphabet: letters 1..m, any m
    :type alphabet: :class:`crystal_partitions.algebra.Alphabet`
    :param ground: an element of Omega
    :type ground: :class:`crystal_partitions.algebra.ColouredInt`
    :param truncation: largest weight
    :type truncation: int
    :param dilated: weigh parts by their dilated size
    :type dilated: bool
    '''

    def __init__(self, alphabet, ground, truncation, dilated=False):
        PartitionModel.__init__(self, truncation)
        if ground not in omegas(alphabet):
            raise ValueError('Paths:Ground:%s:not an element of Omega' % (str(ground)))
        self.alphabet = alphabet
        self.dilated = dilated
        self.dim = 0 if dilated else alphabet.dim
        self._ground = ground

    def ground(self):
        return self._ground

    def candidates(self):
        if self.dilated:
            top = self.truncation // self.alphabet.m + 2
        else:
            top = self.truncation
        return [ColouredInt(size, colour) for size in range(top + 1) for colour in self.alphabet.secondary_colours()]

    def admits(self, part):
        return in_zs_plus(self.alphabet, part)

    def weight(self, part):
        if self.dilated:
            return dilated_size(self.alphabet, part)
        return part.size

    def monomial(self, part):
        if self.dilated:
            return ()
        return self.alphabet.monomial(part.colour)

    def follows(self, left, right):
        alphabet = self.alphabet
        if order_key(alphabet, left) <= order_key(alphabet, right):
            return False
        return not share_path_interval(alphabet, left, right)


class FrequencyEnumerator(object):
    '''
    Partitions with parts in the positive set satisfying the frequency
    condition for the fictitious frequencies k on Omega, by brute force.

    A branch stops at the first inadmissible part, admissibility is
    inherited by sub-partitions. Every positive part lies on a path inside
    Omega and the positive set, so zero weight parts repeat finitely often.
    Shards are the largest part.

    :param alphabet: letters 1..m, any m
    :type alphabet: :class:`crystal_partitions.algebra.Alphabet`
    :param k: fictitious frequencies (k_0, ..., k_n), n = ceil(m / 2)
    :type k: list
    :param truncation: largest weight
    :type truncation: int
    :param dilated: weigh parts by their dilated size, colourless series
    :type dilated: bool
    '''

    shard_num_threads = 4

    def __init__(self, alphabet, k, truncation, dilated=False):
        if truncation < 0:
            raise ValueError('Paths:Truncation:%d:must be non negative' % (truncation))
        self.logger = logging.getLogger('crystal_partitions')
        self.alphabet = alphabet
        self.k = tuple(k)
        self.fictitious = fictitious_omegas(alphabet, k)
        self.truncation = truncation
        self.dilated = dilated
        self.dim = 0 if dilated else alphabet.dim
        top = truncation // alphabet.m + 2 if dilated else truncation
        parts = []
        for size in range(top + 1):
            for colour in alphabet.secondary_colours():
                part = ColouredInt(size, colour)
                if in_zs_plus(alphabet, part) and self.weight(part) <= truncation:
                    parts.append(part)
        parts.sort(key=lambda part: order_key(alphabet, part), reverse=True)
        self.parts = parts

    def set_threads(self, num_threads):
        if num_threads < 1:
            raise ValueError('Paths:Threads:%d:need at least one thread' % (num_threads))
        self.shard_num_threads = num_threads

    def weight(self, part):
        if self.dilated:
            return dilated_size(self.alphabet, part)
        return part.size

    def monomial(self, part):
        if self.dilated:
            return ()
        return self.alphabet.monomial(part.colour)

    def admissible(self, parts):
        return frequencies_admissible(self.alphabet, self.fictitious, parts)

    def _extend(self, start, budget, chosen, key, terms):
        for index in range(start, len(self.parts)):
            part = self.parts[index]
            w = self.weight(part)
            if w > budget:
                continue
            chosen.append(part)
            if self.admissible(chosen):
                following = (key[0] + w, add_vectors(key[1], self.monomial(part)))
                terms[following] = terms.get(following, 0) + 1
                self._extend(index, budget - w, chosen, following, terms)
            chosen.pop()

    def compute_shard(self, shard):
        terms = {}
        part = self.parts[shard]
        if self.admissible([part]):
            key = (self.weight(part), tuple(self.monomial(part)))
            terms[key] = 1
            self._extend(shard, self.truncation - key[0], [part], key, terms)
        return terms

    def series(self):
        start = time.time()
        terms = run_shards(self, list(range(len(self.parts))), self.shard_num_threads)
        zero = (0,) * self.dim
        if self.admissible([]):
            terms[(0, zero)] = terms.get((0, zero), 0) + 1
        self.logger.info('Paths:Frequencies:m=%d:k=%s:dilated=%s:N=%d:Time:%s' % (
            self.alphabet.m, ','.join(str(v) for v in self.k), self.dilated, self.truncation,
            humanfriendly.format_timespan(time.time() - start)))
        return TruncatedSeries(self.truncation, self.dim, terms)


class LambdaBijection(object):
    '''
    Rho chains ending at omega <-> frequency sequences with the path condition.
    Forward drops omega, backward sorts the support and appends omega.
    '''

    def __init__(self, alphabet, ground):
        self.logger = logging.getLogger('crystal_partitions')
        self.alphabet = alphabet
        self.ground = ground
        self.chains = RhoChainModel(alphabet, ground, 0)

    def forward(self, parts):
        '''
        :return: dict part -> frequency
        '''
        parts = tuple(parts)
        if not self.chains.is_partition(parts):
            raise ValueError('Lambda:Forward:not a rho chain ending at %s' % (str(self.ground)))
        frequencies = {}
        for part in parts[:-1]:
            frequencies[part] = frequencies.get(part, 0) + 1
        if not path_sum_admissible(self.alphabet, self.ground, list(parts[:-1])):
            raise ValueError('Lambda:Forward:image breaks the path condition: %s' % (str(parts)))
        return frequencies

    def inverse(self, frequencies):
        body = []
        for part, count in frequencies.items():
            if count < 0:
                raise ValueError('Lambda:Inverse:negative frequency for %s' % (str(part)))
            body.extend([part] * count)
        if not path_sum_admissible(self.alphabet, self.ground, body):
            raise ValueError('Lambda:Inverse:frequencies break the path condition')
        body.sort(key=lambda part: order_key(self.alphabet, part), reverse=True)
        parts = tuple(body) + (self.ground,)
        if not self.chains.is_partition(parts):
            raise ValueError('Lambda:Inverse:image is not a rho chain: %s' % (str(parts)))
        return parts
