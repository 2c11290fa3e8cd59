'''
Truncated power series in q with integer coefficients and colour exponents.

A term is indexed by (degree, colour exponent vector). Every series carries
its truncation N, coefficients of degree above N are discarded and mixing
two truncations is an error.
'''


class TruncatedSeries(object):
    '''
    Exact multivariate series sum c(d, v) q^d c^v with 0 <= d <= N.

    :param truncation: largest retained degree N
    :type truncation: int
    :param dim: length of the colour exponent vectors
    :type dim: int
    :param terms: mapping (degree, exponent tuple) -> coefficient
    :type terms: dict
    '''

    def __init__(self, truncation, dim=0, terms=None):
        if truncation < 0:
            raise ValueError('Series:Truncation:%d:must be non negative' % (truncation))
        self.truncation = truncation
        self.dim = dim
        self.terms = {}
        if terms:
            for (degree, colour), coeff in terms.items():
                if len(colour) != dim:
                    raise ValueError('Series:Colour:%s:expected %d exponents' % (str(colour), dim))
                if degree < 0:
                    raise ValueError('Series:Degree:%d:negative degree' % (degree))
                if degree > truncation or coeff == 0:
                    continue
                self.terms[(degree, tuple(colour))] = coeff

    @staticmethod
    def one(truncation, dim=0):
        return TruncatedSeries(truncation, dim, {(0, (0,) * dim): 1})

    @staticmethod
    def from_coefficients(coefficients, dim=0):
        '''
        Colourless series from the list of coefficients of q^0, ..., q^N
        '''
        zero = (0,) * dim
        terms = {}
        for degree, coeff in enumerate(coefficients):
            terms[(degree, zero)] = coeff
        return TruncatedSeries(len(coefficients) - 1, dim, terms)

    def _check_compatible(self, other):
        if not isinstance(other, TruncatedSeries):
            raise ValueError('Series:Operand:expected a TruncatedSeries')
        if self.truncation != other.truncation:
            raise ValueError('Series:Truncation:mismatch %d != %d' % (self.truncation, other.truncation))
        if self.dim != other.dim:
            raise ValueError('Series:Dimension:mismatch %d != %d' % (self.dim, other.dim))

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return TruncatedSeries(self.truncation, self.dim, terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        terms = {}
        for key, coeff in self.terms.items():
            terms[key] = coeff * factor
        return TruncatedSeries(self.truncation, self.dim, terms)

    def __mul__(self, other):
        self._check_compatible(other)
        terms = {}
        for (d1, v1), c1 in self.terms.items():
            for (d2, v2), c2 in other.terms.items():
                degree = d1 + d2
                if degree > self.truncation:
                    continue
                key = (degree, tuple(a + b for a, b in zip(v1, v2)))
                terms[key] = terms.get(key, 0) + c1 * c2
        return TruncatedSeries(self.truncation, self.dim, terms)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return False
        return (self.truncation == other.truncation and self.dim == other.dim and
                self.terms == other.terms)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'TruncatedSeries(N=%d, dim=%d, %d terms)' % (self.truncation, self.dim, len(self.terms))

    def coefficient(self, degree, colour=None):
        '''
        Coefficient of q^degree c^colour, or of q^degree summed over all
        colours when colour is None.
        '''
        if degree > self.truncation:
            raise ValueError('Series:Degree:%d:above truncation %d' % (degree, self.truncation))
        if colour is not None:
            return self.terms.get((degree, tuple(colour)), 0)
        return sum(coeff for (d, _), coeff in self.terms.items() if d == degree)

    def coefficients(self):
        '''
        Colourless coefficient list of q^0, ..., q^N
        '''
        values = [0] * (self.truncation + 1)
        for (degree, _), coeff in self.terms.items():
            values[degree] += coeff
        return values

    def lift(self, dim):
        '''
        Colourless series seen as a series with zero colour exponents of length dim
        '''
        if self.dim != 0:
            raise ValueError('Series:Lift:only colourless series can be lifted')
        zero = (0,) * dim
        terms = {}
        for (degree, _), coeff in self.terms.items():
            terms[(degree, zero)] = coeff
        return TruncatedSeries(self.truncation, dim, terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def first_mismatch(self, other):
        '''
        First (degree, colour) where the two series differ

        :return: None or a dict with q, colour, lhs and rhs coefficients
        '''
        self._check_compatible(other)
        keys = sorted(set(self.terms.keys()) | set(other.terms.keys()))
        for key in keys:
            lhs = self.terms.get(key, 0)
            rhs = other.terms.get(key, 0)
            if lhs != rhs:
                return {'q': key[0], 'colour': list(key[1]), 'lhs_coeff': str(lhs), 'rhs_coeff': str(rhs)}
        return None

    def is_non_negative(self):
        return all(coeff >= 0 for coeff in self.terms.values())

    def to_json(self):
        '''
        Records {"q", "colour", "coeff"} sorted by degree then colour,
        coefficients as strings.
        '''
        records = []
        for (degree, colour), coeff in self.sorted_terms():
            records.append({'q': degree, 'colour': list(colour), 'coeff': str(coeff)})
        return records


def pochhammer(j, modulus, truncation):
    '''
    Expansion of (q^j; q^modulus)_inf = prod_{t >= 0} (1 - q^(j + t * modulus))
    '''
    if j < 1 or modulus < 1:
        raise ValueError('Series:Pochhammer:(q^%d;q^%d) needs positive exponents' % (j, modulus))
    values = [0] * (truncation + 1)
    values[0] = 1
    exponent = j
    while exponent <= truncation:
        for degree in range(truncation, exponent - 1, -1):
            values[degree] -= values[degree - exponent]
        exponent += modulus
    return TruncatedSeries.from_coefficients(values)


def inverse_pochhammer(j, modulus, truncation):
    '''
    Expansion of 1 / (q^j; q^modulus)_inf, one geometric series per factor
    '''
    if j < 1 or modulus < 1:
        raise ValueError('Series:Pochhammer:(q^%d;q^%d) needs positive exponents' % (j, modulus))
    values = [0] * (truncation + 1)
    values[0] = 1
    exponent = j
    while exponent <= truncation:
        for degree in range(exponent, truncation + 1):
            values[degree] += values[degree - exponent]
        exponent += modulus
    return TruncatedSeries.from_coefficients(values)


def inverse_euler(truncation, dim=0):
    '''
    1 / (q;q)_inf, i.e. the partition numbers p(0), ..., p(N)
    '''
    series = inverse_pochhammer(1, 1, truncation)
    if dim:
        return series.lift(dim)
    return series
