'''
Principal specialisation, dilated partitions and the product sides.

A secondary part with halves of keys (a, b) dilates to l_d with l = a + b + 1 - m
and d = a - b. The dilated parts of the positive set are the set E_1 of the
l_d with l >= 1, 0 <= d <= m and l - d = m + 1 mod 2, and paths become
sequences l^(0)_0, ..., l^(m)_m with l^(j+1) = l^(j) +- 1.
'''
import logging
import time
from collections import namedtuple
from fractions import Fraction

import humanfriendly

from crystal_partitions.algebra import Alphabet
from crystal_partitions.algebra import PRIMARY
from crystal_partitions.algebra import SECONDARY
from crystal_partitions.models.paths import FrequencyEnumerator
from crystal_partitions.models.paths import key_pair
from crystal_partitions.models.shardthreads import run_shards
from crystal_partitions.series import TruncatedSeries
from crystal_partitions.series import inverse_euler
from crystal_partitions.series import inverse_pochhammer
from crystal_partitions.series import pochhammer


DilatedPart = namedtuple('DilatedPart', ['size', 'subscript'])

ProductForm = namedtuple('ProductForm', ['modulus', 'exponents', 'euler_power', 'half_euler'])

SUCCESS = 'success'
CONSISTENT = 'conjecture-consistent'
MISMATCH = 'mismatch'


def dilate(alphabet, part):
    '''
    Dilation of a coloured integer: a Fraction for a primary colour
    (k m - (m + 1) / 2 + j), a DilatedPart for a secondary colour
    '''
    m = alphabet.m
    if part.colour.kind == PRIMARY:
        return Fraction(2 * alphabet.key(part) + 1 - m, 2)
    if part.colour.kind == SECONDARY:
        a, b = key_pair(alphabet, part)
        return DilatedPart(a + b + 1 - m, a - b)
    raise ValueError('Dilate:Colour:%s:no dilation for this colour' % (part.colour.kind))


def dilate_path(alphabet, path):
    return tuple(dilate(alphabet, part) for part in path)


def is_dilated_path(m, parts, floor=None):
    '''
    l^(0)_0, ..., l^(m)_m with steps +-1, entries above floor when given
    '''
    if len(parts) != m + 1:
        return False
    for j, part in enumerate(parts):
        if part.subscript != j or (floor is not None and part.size < floor):
            return False
    return all(abs(b.size - a.size) == 1 for a, b in zip(parts, parts[1:]))


def in_e_set(m, part, k):
    return (part.size >= k and 0 <= part.subscript <= m and
            (part.size - part.subscript) % 2 == (m + 1) % 2)


def e_set(m, k, max_size):
    '''
    Elements of E_k with size at most max_size, largest first
    '''
    parts = []
    for size in range(k, max_size + 1):
        for subscript in range(m + 1):
            part = DilatedPart(size, subscript)
            if in_e_set(m, part, k):
                parts.append(part)
    return sorted(parts, reverse=True)


def principal_specialisation(series):
    '''
    q^d c^v -> q^((4 n d - sum_j v_j (2n - 2j + 1)) / 2) with n = series.dim.

    Exact up to the truncation of the source series as long as each part
    dilates to at least its size, which holds for the crystal models.
    '''
    n = series.dim
    if n < 1:
        raise ValueError('Specialise:Dimension:a colour tracked series is required')
    terms = {}
    for (degree, colour), coeff in series.terms.items():
        twice = 4 * n * degree - sum(v * (2 * n - 2 * j + 1) for j, v in enumerate(colour, start=1))
        if twice % 2 != 0:
            raise ValueError('Specialise:Degree:q^%d c^%s has no integer image' % (degree, str(colour)))
        image = twice // 2
        if image < 0:
            raise ValueError('Specialise:Degree:q^%d c^%s has a negative image' % (degree, str(colour)))
        if image <= series.truncation:
            terms[(image, ())] = terms.get((image, ()), 0) + coeff
    return TruncatedSeries(series.truncation, 0, terms)


# CMPP admissibility

def check_k_vector(n, k):
    if len(k) != n + 1:
        raise ValueError('Cmpp:Vector:expected %d values, got %d' % (n + 1, len(k)))
    if any(value < 0 for value in k):
        raise ValueError('Cmpp:Vector:%s:values must be non negative' % (str(k)))


def alphabet_size(n, odd=False):
    return 2 * n - 1 if odd else 2 * n


def fictitious_frequencies(n, k, odd=False):
    '''
    Even case: f_{(-1)_{2n-2i}} = k_i. Odd case: f_{(-1)_{2n-1-2i}} = k_i for
    i < n and f_{0_0} = k_n.
    '''
    check_k_vector(n, k)
    frequencies = {}
    if odd:
        for i in range(n):
            frequencies[DilatedPart(-1, 2 * n - 1 - 2 * i)] = k[i]
        frequencies[DilatedPart(0, 0)] = k[n]
    else:
        for i in range(n + 1):
            frequencies[DilatedPart(-1, 2 * n - 2 * i)] = k[i]
    return dict((part, f) for part, f in frequencies.items() if f > 0)


def max_frequency_sum(m, frequencies, floor=-1):
    '''
    Largest sum of frequencies along a path of E_floor

    :param frequencies: mapping DilatedPart -> frequency
    :type frequencies: dict
    '''
    top = max([part.size for part in frequencies] + [floor]) + m
    start_parity = (m + 1) % 2
    layer = {}
    for size in range(floor, top + 1):
        if size % 2 == start_parity:
            layer[size] = frequencies.get(DilatedPart(size, 0), 0)
    for subscript in range(1, m + 1):
        following = {}
        for size, value in layer.items():
            for step in (size - 1, size + 1):
                if step < floor:
                    continue
                candidate = value + frequencies.get(DilatedPart(step, subscript), 0)
                if candidate > following.get(step, -1):
                    following[step] = candidate
        layer = following
    if not layer:
        return 0
    return max(layer.values())


def admissible_cmpp(n, k, parts, odd=False):
    '''
    True if the partition with parts in E_1, completed with the fictitious
    frequencies of k, carries at most sum(k) on every path of E_{-1}
    '''
    m = alphabet_size(n, odd)
    frequencies = fictitious_frequencies(n, k, odd)
    for part in parts:
        if not in_e_set(m, part, 1):
            raise ValueError('Cmpp:Part:%s:not an element of E_1' % (str(part)))
        frequencies[part] = frequencies.get(part, 0) + 1
    return max_frequency_sum(m, frequencies) <= sum(k)


class CmppEnumerator(object):
    '''
    Partitions with parts in E_1 admissible for the vector k, by brute force.
    Admissibility is inherited by sub-partitions, so a branch stops at the
    first inadmissible part. Shards are the largest part.
    '''

    shard_num_threads = 4

    def __init__(self, n, k, truncation, odd=False):
        check_k_vector(n, k)
        if truncation < 0:
            raise ValueError('Cmpp:Truncation:%d:must be non negative' % (truncation))
        self.logger = logging.getLogger('crystal_partitions')
        self.n = n
        self.k = tuple(k)
        self.odd = odd
        self.m = alphabet_size(n, odd)
        self.truncation = truncation
        self.bound = sum(k)
        self.parts = e_set(self.m, 1, truncation)

    def set_threads(self, num_threads):
        if num_threads < 1:
            raise ValueError('Cmpp:Threads:%d:need at least one thread' % (num_threads))
        self.shard_num_threads = num_threads

    def _admissible(self, frequencies):
        return max_frequency_sum(self.m, frequencies) <= self.bound

    def _extend(self, start, budget, frequencies, size, terms):
        for index in range(start, len(self.parts)):
            part = self.parts[index]
            if part.size > budget:
                continue
            frequencies[part] = frequencies.get(part, 0) + 1
            if self._admissible(frequencies):
                total = size + part.size
                terms[(total, ())] = terms.get((total, ()), 0) + 1
                self._extend(index, budget - part.size, frequencies, total, terms)
            frequencies[part] -= 1
            if frequencies[part] == 0:
                del frequencies[part]

    def compute_shard(self, shard):
        terms = {}
        part = self.parts[shard]
        frequencies = fictitious_frequencies(self.n, self.k, self.odd)
        frequencies[part] = frequencies.get(part, 0) + 1
        if self._admissible(frequencies):
            terms[(part.size, ())] = 1
            self._extend(shard, self.truncation - part.size, frequencies, part.size, terms)
        return terms

    def series(self):
        start = time.time()
        terms = run_shards(self, list(range(len(self.parts))), self.shard_num_threads)
        if self._admissible(fictitious_frequencies(self.n, self.k, self.odd)):
            terms[(0, ())] = terms.get((0, ()), 0) + 1
        self.logger.info('Cmpp:Series:n=%d:k=%s:odd=%s:N=%d:Time:%s' % (
            self.n, ','.join(str(v) for v in self.k), self.odd, self.truncation,
            humanfriendly.format_timespan(time.time() - start)))
        return TruncatedSeries(self.truncation, 0, terms)


# Product sides

def d_set(values):
    '''
    D(x_0, ..., x_s): the sums x_0 + ... + x_j for 0 <= j <= s and the sums
    x_0 + ... + x_{j-1} + 2 (x_j + ... + x_s) for 1 <= j <= s
    '''
    values = list(values)
    result = []
    for j in range(len(values)):
        result.append(sum(values[:j + 1]))
    for j in range(1, len(values)):
        result.append(sum(values[:j]) + 2 * sum(values[j:]))
    return result


def delta_set(values):
    '''
    Disjoint union of D over the suffixes of values
    '''
    values = list(values)
    result = []
    for j in range(len(values)):
        result.extend(d_set(values[j:]))
    return result


def expand_product(form, truncation):
    '''
    prod_j (q^j; q^modulus) / ((q; q)^euler_power (q; q^2)^half_euler)
    '''
    for j in form.exponents:
        if j < 1 or j > form.modulus:
            raise ValueError('Product:Exponent:%d:outside 1..%d' % (j, form.modulus))
    result = TruncatedSeries.one(truncation)
    for j in form.exponents:
        result = result * pochhammer(j, form.modulus, truncation)
    for _ in range(form.euler_power):
        result = result * inverse_euler(truncation)
    if form.half_euler:
        result = result * inverse_pochhammer(1, 2, truncation)
    return result


def level_one_form(n, i):
    if i < 0 or i > n:
        raise ValueError('Product:Index:%d:out of 0..%d' % (i, n))
    return ProductForm(2 * n + 4, [2 * n + 4, 2 * i + 2, 2 * n - 2 * i + 2], 1, False)


def even_form(n, k):
    check_k_vector(n, k)
    modulus = 2 * n + 2 * sum(k) + 2
    exponents = [modulus] * n + d_set([v + 1 for v in k])
    for b in delta_set([v + 1 for v in k[1:]]):
        exponents.extend([b, modulus - b])
    return ProductForm(modulus, sorted(exponents), n, True)


def odd_form(n, k):
    '''
    k_n sits on 0_0 and enters the modulus only, the pairs come from
    Delta(k_{n-1} + 1, ..., k_0 + 1)
    '''
    check_k_vector(n, k)
    modulus = 2 * n + 2 * sum(k) + 1
    exponents = [modulus] * n
    for b in delta_set([k[i] + 1 for i in reversed(range(n))]):
        exponents.extend([b, modulus - b])
    return ProductForm(modulus, sorted(exponents), n, False)


def product_level_one(n, i, truncation):
    '''
    (q^{2n+4}, q^{2i+2}, q^{2n-2i+2}; q^{2n+4}) / (q; q)
    '''
    return expand_product(level_one_form(n, i), truncation)


def product_even(n, k, truncation):
    return expand_product(even_form(n, k), truncation)


def product_odd(n, k, truncation):
    return expand_product(odd_form(n, k), truncation)


def cmpp_check(n, k, truncation, odd=False, num_threads=None):
    '''
    Compare the admissible partitions of E_1 with the product side.

    Level one in the even case is proven and reports success, other
    vectors and the odd case report conjecture-consistent when both sides
    agree up to the truncation.

    :return: report dict
    '''
    enumerator = CmppEnumerator(n, k, truncation, odd)
    if num_threads:
        enumerator.set_threads(num_threads)
    lhs = enumerator.series()
    rhs = product_odd(n, k, truncation) if odd else product_even(n, k, truncation)
    experimental = odd or sum(k) != 1
    report = {'n': n, 'k': list(k), 'N': truncation, 'odd': odd, 'experimental': experimental}
    mismatch = lhs.first_mismatch(rhs)
    if mismatch is None:
        report['status'] = CONSISTENT if experimental else SUCCESS
    else:
        report['status'] = MISMATCH
        report['first_mismatch_degree'] = mismatch['q']
        report['lhs_coeff'] = mismatch['lhs_coeff']
        report['rhs_coeff'] = mismatch['rhs_coeff']
    return report


def conjecture_check(n, k, truncation, odd=False, num_threads=None):
    '''
    Frequency condition on Omega and the positive set, with fictitious
    frequencies k, against the CMPP partitions and the product side.

    The dilated series must equal the CMPP series and, in the even case,
    the principal specialisation of the colour tracked series must equal
    the dilated series. A failure of either is a mismatch. The product
    comparison reports conjecture-consistent outside the proven even
    level one case.

    :return: report dict
    '''
    check_k_vector(n, k)
    alphabet = Alphabet(alphabet_size(n, odd))
    dilated_model = FrequencyEnumerator(alphabet, k, truncation, dilated=True)
    enumerator = CmppEnumerator(n, k, truncation, odd)
    coloured_model = None if odd else FrequencyEnumerator(alphabet, k, truncation)
    if num_threads:
        for model in (dilated_model, enumerator, coloured_model):
            if model is not None:
                model.set_threads(num_threads)
    dilated = dilated_model.series()
    experimental = odd or sum(k) != 1
    report = {'n': n, 'k': list(k), 'N': truncation, 'odd': odd, 'experimental': experimental}
    report['dilation_matches_cmpp'] = dilated == enumerator.series()
    consistent = report['dilation_matches_cmpp']
    if coloured_model is None:
        report['specialisation_matches_dilation'] = None
    else:
        report['specialisation_matches_dilation'] = principal_specialisation(coloured_model.series()) == dilated
        consistent = consistent and report['specialisation_matches_dilation']
    rhs = product_odd(n, k, truncation) if odd else product_even(n, k, truncation)
    mismatch = dilated.first_mismatch(rhs)
    if mismatch is not None:
        report['first_mismatch_degree'] = mismatch['q']
        report['lhs_coeff'] = mismatch['lhs_coeff']
        report['rhs_coeff'] = mismatch['rhs_coeff']
    if mismatch is not None or not consistent:
        report['status'] = MISMATCH
    else:
        report['status'] = CONSISTENT if experimental else SUCCESS
    return report
